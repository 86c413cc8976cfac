#include "hyperflux/hyperfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace hyperflux {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);
}  // namespace

Hyperfunction::Hyperfunction(Support supp, ValueSpace space, Structure str,
                             GrowthCertificate growth, QuadConfig density_cfg)
    : supp_(supp), space_(space), growth_(growth), str_(std::move(str)),
      density_cfg_(density_cfg) {
    if (str_.opaque)
        throw precondition_error("structured constructor got an opaque structure");
}

Hyperfunction Hyperfunction::from_evaluator(std::function<Value(cplx)> F, Support supp,
                                            ValueSpace space, GrowthCertificate growth) {
    Hyperfunction h;
    h.supp_ = supp;
    h.space_ = space;
    h.growth_ = growth;
    h.str_.opaque = true;
    h.F_opaque_ = std::move(F);
    return h;
}

Value Hyperfunction::F(cplx z) const {
    if (supp_.closure_extended().dist_finite(z) < kSupportCollar)
        throw near_singular_error("evaluation inside the support collar", z);
    if (str_.opaque) return F_opaque_(z);

    Value total = Value::zero(space_);
    for (const auto& p : str_.poles) {
        cplx d = z - p.loc;
        cplx w = std::pow(d, -p.order);
        total += p.coef * w;
    }
    for (const auto& dp : str_.densities) {
        if (dp.b <= dp.a) continue;
        auto integrand = [&](cplx t) -> Value {
            Value v = dp.f(t.real());
            v *= std::pow(t - z, -double(dp.order));
            return v;
        };
        IntegralResult r = integrate_segment(integrand, cplx(dp.a, 0.0), cplx(dp.b, 0.0),
                                             density_cfg_);
        total += r.value * (dp.scale / (2.0 * kPi * kI));
    }
    return total;
}

Hyperfunction Hyperfunction::shifted(double s) const {
    if (str_.opaque) {
        auto F0 = F_opaque_;
        Hyperfunction h = from_evaluator([F0, s](cplx z) { return F0(z - s); },
                                         supp_.shifted(s), space_, growth_);
        return h;
    }
    Structure st = str_;
    for (auto& p : st.poles) p.loc += s;
    for (auto& d : st.densities) {
        d.a += s;
        d.b += s;
        auto f0 = d.f;
        d.f = [f0, s](double t) { return f0(t - s); };
    }
    return Hyperfunction(supp_.shifted(s), space_, std::move(st), growth_, density_cfg_);
}

Hyperfunction Hyperfunction::scaled(cplx lambda) const {
    if (str_.opaque) {
        auto F0 = F_opaque_;
        return from_evaluator([F0, lambda](cplx z) { return F0(z) * lambda; }, supp_,
                              space_, growth_);
    }
    Structure st = str_;
    for (auto& p : st.poles) p.coef *= lambda;
    for (auto& d : st.densities) d.scale *= lambda;
    return Hyperfunction(supp_, space_, std::move(st), growth_, density_cfg_);
}

namespace {

Support hull_extended(const Support& s, const Support& t) {
    if (s.is_empty()) return t;
    if (t.is_empty()) return s;
    const double lo = std::min(s.left(), t.left());
    const double hi = std::max(s.right(), t.right());
    const bool pinf = s.contains_plus_inf() || t.contains_plus_inf();
    const bool minf = s.contains_minus_inf() || t.contains_minus_inf();
    if (std::isfinite(lo) && std::isfinite(hi) && !pinf && !minf)
        return Support::compact(lo, hi);
    if (std::isfinite(lo)) {
        if (minf) return Support::full_line();
        return pinf ? Support::right_ray(lo) : Support::half_line_right(lo);
    }
    if (std::isfinite(hi))
        return pinf ? Support::full_line()
                    : (minf ? Support::left_ray(hi) : Support::half_line_left(hi));
    return Support::full_line();
}

}  // namespace

Hyperfunction add(const Hyperfunction& h1, const Hyperfunction& h2) {
    if (!(h1.space_ == h2.space_))
        throw value_space_error("add: value space mismatch");
    const Support supp = hull_extended(h1.supp_, h2.supp_);
    GrowthCertificate g = h1.growth_;
    // conservative merge: keep the weaker certificate
    const double r1 = h1.growth_.rate(1.0), r2 = h2.growth_.rate(1.0);
    if (r2 > r1) g = h2.growth_;
    g.C = h1.growth_.C + h2.growth_.C;
    if (h1.str_.opaque || h2.str_.opaque) {
        auto A = h1, B = h2;
        return Hyperfunction::from_evaluator(
            [A, B](cplx z) { return A.F(z) + B.F(z); }, supp, h1.space_, g);
    }
    Structure st = h1.str_;
    st.poles.insert(st.poles.end(), h2.str_.poles.begin(), h2.str_.poles.end());
    st.densities.insert(st.densities.end(), h2.str_.densities.begin(),
                        h2.str_.densities.end());
    return Hyperfunction(supp, h1.space_, std::move(st), g, h1.density_cfg_);
}

Hyperfunction shift(const Hyperfunction& h, double s) { return h.shifted(s); }
Hyperfunction scale(const Hyperfunction& h, cplx lambda) { return h.scaled(lambda); }

Hyperfunction dirac(double a, Value weight) {
    Structure st;
    // -1/(2 pi i (z-a)) = (i/2pi) / (z-a)
    st.poles.push_back({a, 1, weight * (kI / (2.0 * kPi))});
    GrowthCertificate g = GrowthCertificate::exponential_type(
        0.0, std::max(1.0, weight.seminorm()));
    return Hyperfunction(Support::point(a), weight.space(), std::move(st), g);
}

Hyperfunction cauchy_embed(std::function<Value(double)> f, double a, double b,
                           QuadConfig cfg) {
    if (!(a <= b)) throw precondition_error("cauchy_embed needs a <= b");
    ValueSpace sp = f(0.5 * (a + b)).space();
    double fmax = 0.0;
    for (int i = 0; i <= 16; ++i)
        fmax = std::max(fmax, f(a + (b - a) * i / 16.0).seminorm());
    Structure st;
    st.densities.push_back({std::move(f), a, b, 1, cplx(1.0, 0.0)});
    GrowthCertificate g = GrowthCertificate::exponential_type(
        0.0, std::max(1.0, (b - a) * fmax));
    return Hyperfunction(Support::compact(a, b), sp, std::move(st), g, cfg);
}

Hyperfunction cauchy_embed_scalar(std::function<cplx(double)> f, double a, double b,
                                  QuadConfig cfg) {
    auto fv = [f](double t) { return Value::scalar(f(t)); };
    return cauchy_embed(fv, a, b, cfg);
}

TestFunction TestFunction::gaussian(double center, double width, cplx amp) {
    TestFunction t;
    t.eval = [center, width, amp](cplx w) {
        cplx u = (w - center) / width;
        return amp * std::exp(-u * u);
    };
    t.strip_n = 2;
    // sup over |im| <= 1 of |amp| e^{-((x-c)/w)^2 + (y/w)^2 + |x|/2}, crude bound
    t.norm_bound = std::abs(amp) *
                   std::exp(1.0 / (width * width) + std::abs(center) / 2.0 +
                            width * width / 16.0 + 1.0);
    return t;
}

TestFunction TestFunction::gaussian_poly(double center, int degree, double width,
                                         cplx amp) {
    TestFunction t = gaussian(center, width, amp);
    auto base = t.eval;
    t.eval = [base, center, degree](cplx w) {
        return base(w) * std::pow(w - center, degree);
    };
    t.norm_bound *= std::pow(4.0 + std::abs(center), degree);
    return t;
}

PairResult pair_full(const Hyperfunction& h, const TestFunction& phi, int n,
                     QuadConfig cfg, double clearance) {
    if (n <= 0) n = phi.strip_n;
    const Support K = h.support().closure_extended();
    if (K.is_empty()) return {Value::zero(h.space()), 0.0};
    const double c = clearance > 0 ? clearance : 0.6 / n;
    if (c >= 1.0 / n * (1.0 + 1e-12))
        throw precondition_error("pair: clearance must satisfy c < 1/n");

    double R_max = 0.0;
    double tail = 0.0;
    const bool unbounded = K.contains_plus_inf() || K.contains_minus_inf();
    if (unbounded) {
        // kernel rate along horizontal rays: test function decay e^{-|re|/n}
        GrowthCertificate decay = h.growth();
        decay.C = std::max(decay.C, 1.0) * std::max(phi.norm_bound, 1.0);
        R_max = choose_truncation(decay, -1.0 / n, cfg.abs_tol * 0.5, &tail);
        R_max += std::max({std::abs(K.has_finite_left() ? K.a : 0.0),
                           std::abs(K.has_finite_right() ? K.b : 0.0), 1.0 / c}) + 1.0;
    }
    ContourPath path = build_contour(K, c, R_max);
    auto integrand = [&](cplx z) -> Value {
        Value v = h.F(z);
        v *= phi.eval(z);
        return v;
    };
    IntegralResult r = integrate_path(integrand, path, cfg);
    return {r.value, r.total_error() + tail};
}

Value pair(const Hyperfunction& h, const TestFunction& phi, int n, QuadConfig cfg,
           double clearance) {
    return pair_full(h, phi, n, cfg, clearance).value;
}

std::function<Value(cplx)> standard_representative(const Hyperfunction& h,
                                                   QuadConfig cfg) {
    if (!h.support().is_compact_real())
        throw unsupported_support_error(
            "standard representative needs a real compact support, got " +
            h.support().to_string());
    Hyperfunction hc = h;
    return [hc, cfg](cplx z) -> Value {
        const Support K = hc.support();
        const double d = K.dist_finite(z);
        if (d < kSupportCollar)
            throw near_singular_error("standard representative at a support point", z);
        // contour must separate the kernel pole at w = z from K
        const double c = std::min(0.45 * d, 0.45);
        TestFunction kernel;
        kernel.eval = [z](cplx w) {
            cplx u = z - w;
            return std::exp(-u * u) / u;
        };
        kernel.strip_n = std::max(2, int(std::ceil(1.0 / c)));
        kernel.norm_bound = 1.0;
        PairResult pr = pair_full(hc, kernel, kernel.strip_n, cfg, c);
        return pr.value * (kI / (2.0 * kPi));
    };
}

Value boundary_jump(const Hyperfunction& h, double x,
                    const std::vector<double>& eps_seq_in) {
    const Support K = h.support().closure_extended();
    if (K.has_finite_left() && std::abs(x - K.a) < 1e-6)
        throw precondition_error("boundary_jump at a support endpoint");
    if (K.has_finite_right() && std::abs(x - K.b) < 1e-6)
        throw precondition_error("boundary_jump at a support endpoint");

    std::vector<double> eps = eps_seq_in;
    if (eps.empty()) {
        double e = 0.02;
        for (int i = 0; i < 6; ++i) {
            eps.push_back(e);
            e /= 2.0;
        }
    }
    // Neville extrapolation of J(eps) to eps -> 0
    std::vector<Value> tab;
    tab.reserve(eps.size());
    for (double e : eps) {
        Value j = h.F(cplx(x, e)) - h.F(cplx(x, -e));
        tab.push_back(j);
    }
    std::vector<Value> prev = tab;
    std::vector<Value> cur = tab;
    double last_corr = std::numeric_limits<double>::infinity();
    for (size_t m = 1; m < eps.size(); ++m) {
        cur.assign(prev.size() - 1, Value::zero(tab[0].space()));
        for (size_t i = 0; i + m < eps.size(); ++i) {
            const double r = eps[i] / eps[i + m];
            // polynomial extrapolation in eps
            Value num = prev[i + 1] * r - prev[i];
            num *= 1.0 / (r - 1.0);
            cur[i] = num;
        }
        const double corr = (cur[0] - prev[0]).seminorm();
        if (m >= 3 && corr > 4.0 * last_corr && corr > 1e-6)
            throw divergence_error("boundary jump extrapolation diverges", corr);
        last_corr = corr;
        prev = cur;
    }
    return prev[0];
}

double fit_growth_slope(const std::vector<double>& xs,
                        const std::vector<double>& values) {
    // bin by x, take max per bin, least squares on log of the maxima
    if (xs.size() != values.size() || xs.empty()) return 0.0;
    std::map<long, double> bins;
    const double xmax = *std::max_element(xs.begin(), xs.end());
    const double w = std::max(xmax / 16.0, 1e-9);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) continue;
        const long b = long(xs[i] / w);
        auto it = bins.find(b);
        if (it == bins.end() || values[i] > it->second) bins[b] = values[i];
    }
    if (bins.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (auto& [b, v] : bins) {
        const double x = (b + 0.5) * w;
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    const double denom = m * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) return 0.0;
    return (m * sxy - sx * sy) / denom;
}

SeminormReport seminorm_estimate(const std::function<Value(cplx)>& F, const Support& K,
                                 int n, const SeminormGrid& grid) {
    if (n < 1) throw precondition_error("seminorm_estimate needs n >= 1");
    SeminormReport rep;
    rep.k = n;
    rep.space_tag = "Oexp_strip";
    std::ostringstream gd;
    gd << "S_" << n << "(" << K.to_string() << "), |re|<=" << grid.re_max;
    rep.grid_desc = gd.str();

    std::vector<double> xs, vals;
    for (int i = 0; i < grid.n_re; ++i) {
        const double x = -grid.re_max + 2.0 * grid.re_max * i / (grid.n_re - 1);
        for (int j = 0; j < grid.n_im; ++j) {
            const double y =
                -(n - 1e-3) + 2.0 * (n - 1e-3) * j / std::max(1, grid.n_im - 1);
            const cplx z(x, y);
            if (!in_strip(z, K, n)) continue;
            Value v = F(z);
            const double wv = v.seminorm() * std::exp(-std::abs(x) / n);
            rep.sampled_sup = std::max(rep.sampled_sup, wv);
            xs.push_back(std::abs(x));
            vals.push_back(wv);
            rep.points++;
        }
    }
    if (rep.points == 0) throw precondition_error("seminorm_estimate: empty grid");
    rep.growth_slope = fit_growth_slope(xs, vals);
    rep.consistent = rep.growth_slope <= 0.02;
    return rep;
}

}  // namespace hyperflux

#include "hyperflux/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperflux/cerfc.hpp"

namespace hyperflux {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

double quantize_up(double v, std::initializer_list<double> grid) {
    for (double g : grid)
        if (v <= g) return g;
    return *(grid.end() - 1);
}
}  // namespace

// ---------------------------------------------------------------------------
// Domains.

bool domain_contains(Domain d, cplx z) {
    switch (d) {
        case Domain::Entire: return true;
        case Domain::LowerHalf: return z.imag() < 0.0;
        case Domain::UpperHalf: return z.imag() > 0.0;
        case Domain::RightHalf: return z.real() > 0.0;
        case Domain::LeftHalf: return z.real() < 0.0;
    }
    return false;
}

Domain domain_intersect(Domain a, Domain b) {
    if (a == Domain::Entire) return b;
    if (b == Domain::Entire) return a;
    if (a == b) return a;
    throw domain_error("transform domains have empty or non-halfplane intersection");
}

std::string domain_name(Domain d) {
    switch (d) {
        case Domain::Entire: return "entire";
        case Domain::LowerHalf: return "im<0";
        case Domain::UpperHalf: return "im>0";
        case Domain::RightHalf: return "re>0";
        case Domain::LeftHalf: return "re<0";
    }
    return "?";
}

TransformFunction::TransformFunction(std::function<Sample(cplx)> eval, Domain dom,
                                     ValueSpace space, std::string provenance)
    : eval_(std::move(eval)), dom_(dom), space_(space), prov_(std::move(provenance)) {}

TransformFunction::Sample TransformFunction::eval_full(cplx zeta) const {
    if (!eval_) throw precondition_error("empty transform function");
    if (!domain_contains(dom_, zeta))
        throw domain_error("transform evaluated outside its domain (" +
                               domain_name(dom_) + ")", zeta);
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->m.find({zeta.real(), zeta.imag()});
        if (it != cache_->m.end()) return it->second;
    }
    Sample s = eval_(zeta);
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        cache_->m.emplace(std::make_pair(zeta.real(), zeta.imag()), s);
    }
    return s;
}

TransformFunction TransformFunction::constant(Value v, Domain dom) {
    return TransformFunction([v](cplx) { return Sample{v, 0.0}; }, dom, v.space(),
                             "constant");
}

TransformFunction operator-(const TransformFunction& a, const TransformFunction& b) {
    Domain d = domain_intersect(a.dom_, b.dom_);
    auto ae = a, be = b;
    return TransformFunction(
        [ae, be](cplx z) {
            auto sa = ae.eval_full(z);
            auto sb = be.eval_full(z);
            return TransformFunction::Sample{sa.value - sb.value, sa.err + sb.err};
        },
        d, a.space_, "(" + a.prov_ + ")-(" + b.prov_ + ")");
}

// ---------------------------------------------------------------------------
// Germ space tags.

bool GermSpaceTag::in_region(cplx z, int k) const {
    const double e = 1.0 / k;
    switch (kind) {
        case Kind::FO_compact: case Kind::LO_compact: return true;
        case Kind::FO_right: case Kind::FO_plus_inf: return z.imag() <= -e;
        case Kind::FO_left: case Kind::FO_minus_inf: return z.imag() >= e;
        case Kind::FO_pm_inf: return std::abs(z.imag()) >= e;
        case Kind::LO_right: case Kind::LO_plus_inf: return z.real() >= e;
        case Kind::LO_left: case Kind::LO_minus_inf: return z.real() <= -e;
        case Kind::LG_zero_inf: case Kind::LG_inf: return z.real() >= -double(k);
    }
    return false;
}

double GermSpaceTag::weight_exponent(cplx z, int k) const {
    const double m = std::abs(z) / k;
    switch (kind) {
        case Kind::FO_compact:
            return m + std::max(a * z.imag(), b * z.imag());
        case Kind::FO_right: return m + a * z.imag();
        case Kind::FO_left: return m + b * z.imag();
        case Kind::FO_plus_inf: case Kind::FO_minus_inf: case Kind::FO_pm_inf:
            return m - double(k) * std::abs(z.imag());
        case Kind::LO_compact:
            return m + std::max(-a * z.real(), -b * z.real());
        case Kind::LO_right: return m - a * z.real();
        case Kind::LO_left: return m - b * z.real();
        case Kind::LO_plus_inf: return m - double(k) * z.real();
        case Kind::LO_minus_inf: return m + double(k) * z.real();
        case Kind::LG_zero_inf: return m;
        case Kind::LG_inf: return m - double(k) * std::abs(z.real());
    }
    return m;
}

double GermSpaceTag::radial(cplx z) const {
    switch (kind) {
        case Kind::FO_compact: case Kind::LO_compact: return std::abs(z);
        case Kind::FO_right: case Kind::FO_left:
        case Kind::FO_plus_inf: case Kind::FO_minus_inf: case Kind::FO_pm_inf:
            return std::abs(z.imag());
        default: return std::abs(z.real());
    }
}

std::string GermSpaceTag::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::FO_compact: os << "FO[" << a << "," << b << "]"; break;
        case Kind::FO_right: os << "FO[" << a << ",inf]"; break;
        case Kind::FO_left: os << "FO[-inf," << b << "]"; break;
        case Kind::FO_plus_inf: os << "FO{inf}"; break;
        case Kind::FO_minus_inf: os << "FO{-inf}"; break;
        case Kind::FO_pm_inf: os << "FO{+-inf}"; break;
        case Kind::LO_compact: os << "LO[" << a << "," << b << "]"; break;
        case Kind::LO_right: os << "LO[" << a << ",inf]"; break;
        case Kind::LO_left: os << "LO[-inf," << b << "]"; break;
        case Kind::LO_plus_inf: os << "LO{inf}"; break;
        case Kind::LO_minus_inf: os << "LO{-inf}"; break;
        case Kind::LG_zero_inf: os << "LG[0,inf]"; break;
        case Kind::LG_inf: os << "LG{inf}"; break;
    }
    return os.str();
}

GermSpaceTag GermSpaceTag::combine(const GermSpaceTag& s, const GermSpaceTag& t) {
    using K = Kind;
    auto fo_like = [](K k) {
        return k == K::FO_compact || k == K::FO_right || k == K::FO_left ||
               k == K::FO_plus_inf || k == K::FO_minus_inf;
    };
    auto lo_like = [](K k) {
        return k == K::LO_compact || k == K::LO_right || k == K::LO_left ||
               k == K::LO_plus_inf || k == K::LO_minus_inf;
    };
    if (fo_like(s.kind) && fo_like(t.kind)) {
        auto lo_of = [](const GermSpaceTag& g) -> std::pair<double, bool> {
            // returns (finite left endpoint, has one)
            switch (g.kind) {
                case K::FO_compact: return {g.a, true};
                case K::FO_right: return {g.a, true};
                default: return {0.0, false};
            }
        };
        auto hi_of = [](const GermSpaceTag& g) -> std::pair<double, bool> {
            switch (g.kind) {
                case K::FO_compact: return {g.b, true};
                case K::FO_left: return {g.b, true};
                default: return {0.0, false};
            }
        };
        const bool s_pinf = s.kind == K::FO_right || s.kind == K::FO_plus_inf;
        const bool t_pinf = t.kind == K::FO_right || t.kind == K::FO_plus_inf;
        const bool s_minf = s.kind == K::FO_left || s.kind == K::FO_minus_inf;
        const bool t_minf = t.kind == K::FO_left || t.kind == K::FO_minus_inf;
        auto [la, ha] = std::pair{lo_of(s), hi_of(s)};
        auto [lb, hb] = std::pair{lo_of(t), hi_of(t)};
        const bool lo_fin = la.second && lb.second;
        const bool hi_fin = ha.second && hb.second;
        if (lo_fin && hi_fin && !s_pinf && !t_pinf && !s_minf && !t_minf)
            return fo_compact(la.first + lb.first, ha.first + hb.first);
        if (lo_fin) return fo_right(la.first + lb.first);
        if (hi_fin) return fo_left(ha.first + hb.first);
        if (s_pinf || t_pinf) return fo_plus_inf();
        return fo_minus_inf();
    }
    if (lo_like(s.kind) && lo_like(t.kind)) {
        // mirror through the rotation
        auto to_fo = [](const GermSpaceTag& g) {
            switch (g.kind) {
                case K::LO_compact: return fo_compact(g.a, g.b);
                case K::LO_right: return fo_right(g.a);
                case K::LO_left: return fo_left(g.b);
                case K::LO_plus_inf: return fo_plus_inf();
                default: return fo_minus_inf();
            }
        };
        GermSpaceTag f = combine(to_fo(s), to_fo(t));
        switch (f.kind) {
            case K::FO_compact: return lo_compact(f.a, f.b);
            case K::FO_right: return lo_right(f.a);
            case K::FO_left: return lo_left(f.b);
            case K::FO_plus_inf: return lo_plus_inf();
            default: return lo_minus_inf();
        }
    }
    throw precondition_error("cannot combine germ tags " + s.name() + " and " + t.name());
}

// ---------------------------------------------------------------------------
// Forward transforms.

namespace {

// growth of |e^{-i z zeta}| per unit re(z) along horizontal rays
double fourier_kernel_rate(cplx zeta, bool right_support) {
    return right_support ? zeta.imag() : -zeta.imag();
}

TransformFunction::Sample contour_fourier_eval(const Hyperfunction& h, cplx zeta,
                                               const ContourPath& path,
                                               const QuadConfig& cfg, double tail) {
    auto integrand = [&](cplx z) -> Value {
        Value v = h.F(z);
        v *= std::exp(-kI * z * zeta);
        return v;
    };
    IntegralResult r = integrate_path(integrand, path, cfg);
    return {r.value, r.total_error() + tail};
}

}  // namespace

TransformFunction fourier_compact(const Hyperfunction& h, QuadConfig cfg,
                                  double clearance) {
    const Support K = h.support().closure_extended();
    if (K.is_empty()) {
        return TransformFunction(
            [sp = h.space()](cplx) {
                return TransformFunction::Sample{Value::zero(sp), 0.0};
            },
            Domain::Entire, h.space(), "fourier{}");
    }
    if (!K.is_compact_real())
        throw unsupported_support_error("fourier_compact needs a real compact support, got " +
                                        K.to_string());
    Hyperfunction hc = h;
    ContourPath path = build_contour(K, clearance);
    return TransformFunction(
        [hc, path, cfg](cplx zeta) { return contour_fourier_eval(hc, zeta, path, cfg, 0.0); },
        Domain::Entire, h.space(), "fourier" + K.to_string());
}

TransformFunction fourier_halfline(const Hyperfunction& h, QuadConfig cfg,
                                   double clearance) {
    const Support K = h.support().closure_extended();
    const bool right = K.kind == SupportKind::RightRay;
    const bool left = K.kind == SupportKind::LeftRay;
    if (!right && !left)
        throw unsupported_support_error("fourier_halfline needs a half-line support, got " +
                                        K.to_string());
    Hyperfunction hc = h;
    const Domain dom = right ? Domain::LowerHalf : Domain::UpperHalf;
    const double edge = right ? K.a : K.b;
    const double c = clearance;
    return TransformFunction(
        [hc, right, edge, c, cfg](cplx zeta) {
            const double kr = fourier_kernel_rate(zeta, right);
            GrowthCertificate decay = hc.growth();
            decay.C = std::max(decay.C, 1.0) * std::exp(c * std::abs(zeta.real()));
            double tail = 0.0;
            double R = choose_truncation(decay, kr, cfg.abs_tol * 0.5, &tail);
            R += std::abs(edge) + std::max(2.0, 1.0 / c) + 1.0;
            const Support Ks = right ? Support::right_ray(edge) : Support::left_ray(edge);
            ContourPath path = build_contour(Ks, c, R);
            return contour_fourier_eval(hc, zeta, path, cfg, tail);
        },
        dom, h.space(), "fourier" + K.to_string());
}

TransformFunction laplace(const Hyperfunction& h, QuadConfig cfg, double clearance) {
    const Support K = h.support().closure_extended();
    if (K.is_compact_real() || K.is_empty()) {
        TransformFunction f = fourier_compact(h, cfg, clearance);
        return TransformFunction(
            [f](cplx zeta) { return f.eval_full(-kI * zeta); }, Domain::Entire,
            h.space(), "laplace" + K.to_string());
    }
    TransformFunction f = fourier_halfline(h, cfg, clearance);
    const Domain dom =
        f.domain() == Domain::LowerHalf ? Domain::RightHalf : Domain::LeftHalf;
    return TransformFunction([f](cplx zeta) { return f.eval_full(-kI * zeta); }, dom,
                             h.space(), "laplace" + K.to_string());
}

// ---------------------------------------------------------------------------
// Inverse transform.

Value inverse_functional_nu(const TransformFunction& g, const TestFunction& phi,
                            const Support& K, const InverseParams& p, QuadConfig cfg) {
    if (!K.is_compact_real())
        throw unsupported_support_error("inverse functional needs compact K");
    const double delta = p.delta;
    const double ct = p.effective_c_tilde();
    // truncations assume Gaussian-type decay of phi
    const double Lw = std::abs(K.a) + std::abs(K.b) + 6.0 +
                      2.0 * (delta + std::sqrt(std::log(
                                          std::max(phi.norm_bound, 1.0) / p.tol + 10.0)));
    const double Lt = 2.0 * (ct + 3.0 +
                             std::sqrt(std::log(1.0 / p.tol + 10.0)) + delta);

    QuadConfig inner = cfg.with_tol(cfg.abs_tol * 0.6, cfg.rel_tol);
    QuadConfig outer = cfg.with_tol(cfg.abs_tol * 0.1, cfg.rel_tol);

    auto inner_int = [&](cplx zeta) -> Value {
        auto f = [&](cplx w) -> Value {
            return Value::scalar(phi.eval(w) * std::exp(kI * w * zeta));
        };
        IntegralResult r = integrate_segment(f, cplx(-Lw, ct), cplx(Lw, ct), inner);
        return r.value;
    };
    auto outer_int = [&](cplx zeta) -> Value {
        Value gv = g(zeta);
        Value iv = inner_int(zeta);
        return bilinear(gv, iv);
    };
    IntegralResult r = integrate_segment(outer_int, cplx(-Lt, -delta), cplx(Lt, -delta),
                                         outer);
    return r.value * cplx(-1.0 / (2.0 * kPi), 0.0);
}

namespace {

struct InverseState {
    TransformFunction g;
    double a, b;
    InverseParams p;
    QuadConfig cfg;
    double C_fo = 1.0;
    std::map<std::pair<double, double>, Value> memo;
    std::mutex mu;
};

// defining function of the inverse: -(sigma/4pi) * integral over the bent
// zeta-contour of g(zeta) e^{i z zeta} erfc(sigma zeta / 2) dzeta,
// sigma = +1 below the axis, -1 above.
Value inverse_defining_function(InverseState& st, cplx z) {
    if (std::abs(z.imag()) < kSupportCollar)
        throw near_singular_error("inverse defining function on the real axis", z);
    {
        std::lock_guard<std::mutex> lk(st.mu);
        auto it = st.memo.find({z.real(), z.imag()});
        if (it != st.memo.end()) return it->second;
    }
    const double x = z.real(), y = z.imag();
    const double sigma = y < 0 ? 1.0 : -1.0;
    const double delta = st.p.delta;
    const double k = st.p.fo_k;
    const double HK = std::max(-st.a * delta, -st.b * delta);  // H_K(-delta)
    const double lnC = std::log(std::max(st.C_fo, 1e-12)) + HK + delta * std::abs(x) +
                       delta * delta / 4.0 + std::log(4.0);
    const double ln_tol = std::log(st.p.tol);

    // good end: Gaussian erfc decay; solve t^2/4 - (|y|+1/k) t - (lnC - ln tol) >= 0
    const double q = std::abs(y) + 1.0 / k;
    double Tg = 2.0 * (q + std::sqrt(q * q + std::max(0.0, lnC - ln_tol)));
    Tg = quantize_up(std::max(Tg, 8.0), {8, 12, 16, 24, 32, 48, 64, 96});

    // bad end: erfc ~ 2, decay from e^{i z zeta} and the FO bound of g
    const double T0 = 8.0;
    const bool bad_right = sigma < 0;  // erfc(sigma zeta/2) -> 2 as sigma re zeta -> -inf
    const double s_up = x > st.b ? 1.0 : (x < st.a ? -1.0 : 0.0);

    std::vector<PathSegment> segs;
    const cplx zl(-T0, -delta), zr(T0, -delta);
    double tail_rate, tail_len;
    cplx bend_dir;
    if (s_up != 0.0) {
        const double psi = bad_right ? s_up * kPi / 4.0 : kPi - s_up * kPi / 4.0;
        bend_dir = cplx(std::cos(psi), std::sin(psi));
        const double r1 = x * std::sin(psi) + y * std::cos(psi);
        const double hs = std::max(st.a * std::sin(psi), st.b * std::sin(psi));
        tail_rate = r1 - hs - 1.0 / k;
    } else {
        bend_dir = bad_right ? cplx(1, 0) : cplx(-1, 0);
        tail_rate = std::abs(y) - 1.0 / k;
    }
    if (tail_rate < 0.01)
        throw divergence_error(
            "inverse transform: no decaying direction for the zeta tail", -tail_rate);
    tail_len = (std::max(0.0, lnC - ln_tol) + std::log(1.0 / 0.01)) / tail_rate + 4.0;
    tail_len = quantize_up(tail_len, {16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512});

    if (bad_right) {
        segs.push_back(PathSegment::line(cplx(-Tg, -delta), zr));
        segs.push_back(PathSegment::ray(zr, bend_dir, tail_len));
    } else {
        const cplx far = zl + bend_dir * tail_len;
        segs.push_back(PathSegment::ray(far, -bend_dir, tail_len));
        segs.push_back(PathSegment::line(zl, cplx(Tg, -delta)));
    }
    ContourPath path;
    path.segments = std::move(segs);

    auto integrand = [&](cplx zeta) -> Value {
        Value gv = st.g(zeta);
        const cplx w = std::exp(kI * z * zeta) * cerfc(sigma * zeta / 2.0);
        return gv * w;
    };
    IntegralResult r = integrate_path(integrand, path, st.cfg);
    Value out = r.value * cplx(-sigma / (4.0 * kPi), 0.0);
    {
        std::lock_guard<std::mutex> lk(st.mu);
        st.memo.emplace(std::make_pair(z.real(), z.imag()), out);
    }
    return out;
}

}  // namespace

Hyperfunction inverse_fourier_compact(const TransformFunction& g, double a, double b,
                                      InverseParams p, QuadConfig cfg) {
    if (!(a <= b)) throw precondition_error("inverse_fourier_compact needs a <= b");
    if (!(p.delta > 0.0) || !(p.delta_prime > 0.0))
        throw precondition_error("inverse_fourier_compact needs delta, delta' > 0");
    const double ct = p.effective_c_tilde();
    if (!(ct > 1.0 / (2.0 * p.n) && ct < 1.0 / p.n))
        throw precondition_error("inverse_fourier_compact needs c_tilde in (1/2n, 1/n)");

    auto st = std::make_shared<InverseState>();
    st->g = g;
    st->a = a;
    st->b = b;
    st->p = p;
    st->cfg = cfg;
    if (p.fo_C > 0.0) {
        st->C_fo = p.fo_C;
    } else {
        // sample |g| e^{-|zeta|/k - H_K(im zeta)} along the integration line
        double C = 1e-12;
        const double HK = std::max(-a * p.delta, -b * p.delta);
        for (double t : {0.0, 1.0, -1.0, 3.0, -3.0, 7.0, -7.0, 15.0, -15.0}) {
            const cplx zeta(t, -p.delta);
            const double m = g(zeta).seminorm() *
                             std::exp(-std::abs(zeta) / p.fo_k - HK);
            C = std::max(C, m);
        }
        st->C_fo = 2.0 * C;
    }

    auto F = [st](cplx z) { return inverse_defining_function(*st, z); };
    GrowthCertificate cert = GrowthCertificate::type_minus_infinity(
        std::max(1.0, st->C_fo));
    return Hyperfunction::from_evaluator(F, Support::compact(a, b), g.space(), cert);
}

// ---------------------------------------------------------------------------
// Range membership and germ equivalence.

namespace {

std::vector<cplx> region_grid(const GermSpaceTag& tag, int k, double R,
                              const RangeGrid& grid, double radial_lo = 0.0) {
    std::vector<cplx> pts;
    const double rlo = radial_lo;
    using K = GermSpaceTag::Kind;
    const bool vertical = tag.kind == K::FO_right || tag.kind == K::FO_left ||
                          tag.kind == K::FO_plus_inf || tag.kind == K::FO_minus_inf ||
                          tag.kind == K::FO_pm_inf;
    const bool compact_tag = tag.kind == K::FO_compact || tag.kind == K::LO_compact;
    for (int i = 0; i < grid.n_radial; ++i) {
        const double r = rlo + (R - rlo) * (i + 0.5) / grid.n_radial;
        for (int j = 0; j < grid.n_side; ++j) {
            const double s = -R / 3.0 + (2.0 * R / 3.0) * j / std::max(1, grid.n_side - 1);
            cplx z;
            if (compact_tag) {
                // radial sweep in all four directions
                const double th = 2.0 * kPi * j / std::max(1, grid.n_side);
                z = r * cplx(std::cos(th), std::sin(th));
            } else if (vertical) {
                const bool lower = tag.kind == K::FO_right || tag.kind == K::FO_plus_inf;
                double yy = lower ? -r : r;
                if (tag.kind == K::FO_pm_inf) yy = (j % 2 == 0) ? r : -r;
                z = cplx(s, yy);
            } else {
                const bool neg = tag.kind == K::LO_left || tag.kind == K::LO_minus_inf;
                z = cplx(neg ? -r : r, s);
            }
            if (!tag.in_region(z, k)) continue;
            if (std::abs(z) > R * 1.2) continue;
            pts.push_back(z);
        }
    }
    return pts;
}

}  // namespace

std::vector<SeminormReport> range_membership(const TransformFunction& g,
                                             const GermSpaceTag& tag, int k_max,
                                             double R, const RangeGrid& grid) {
    std::vector<SeminormReport> out;
    for (int k = 1; k <= k_max; ++k) {
        SeminormReport rep;
        rep.space_tag = tag.name();
        rep.k = k;
        std::ostringstream gd;
        gd << tag.name() << " grid, |z|<=" << R;
        rep.grid_desc = gd.str();
        std::vector<double> xs, vals;
        for (cplx z : region_grid(tag, k, R, grid)) {
            if (!domain_contains(g.domain(), z)) continue;
            const double wv =
                g(z).seminorm() * std::exp(-tag.weight_exponent(z, k));
            rep.sampled_sup = std::max(rep.sampled_sup, wv);
            xs.push_back(tag.radial(z));
            vals.push_back(wv);
            rep.points++;
        }
        rep.growth_slope = fit_growth_slope(xs, vals);
        rep.consistent = rep.growth_slope <= 0.02;
        out.push_back(std::move(rep));
    }
    return out;
}

std::string germ_verdict_name(GermVerdict v) {
    switch (v) {
        case GermVerdict::Equivalent: return "equivalent";
        case GermVerdict::Distinct: return "distinct";
        case GermVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

GermReport germ_equivalent_heuristic(const TransformFunction& g1,
                                     const TransformFunction& g2,
                                     const GermSpaceTag& tag, int k_max, double R,
                                     double tol, const RangeGrid& grid) {
    TransformFunction d = g1 - g2;
    GermReport rep;
    bool all_pass = true;
    std::vector<double> xs, raw;
    for (int k = 1; k <= k_max; ++k) {
        SeminormReport r;
        r.space_tag = tag.name();
        r.k = k;
        r.grid_desc = "outer germ region";
        for (cplx z : region_grid(tag, k, R, grid, R / 2.0)) {
            if (!domain_contains(d.domain(), z)) continue;
            const double dz = d(z).seminorm();
            const double wv = dz * std::exp(-tag.weight_exponent(z, k));
            r.sampled_sup = std::max(r.sampled_sup, wv);
            r.points++;
            if (k == 1) {
                xs.push_back(tag.radial(z));
                raw.push_back(dz);
            }
        }
        r.growth_slope = 0.0;
        r.consistent = r.sampled_sup <= tol;
        all_pass = all_pass && r.consistent;
        rep.reports.push_back(std::move(r));
    }
    rep.decay_slope = fit_growth_slope(xs, raw);
    if (all_pass)
        rep.verdict = GermVerdict::Equivalent;
    else if (rep.decay_slope >= -0.05)
        rep.verdict = GermVerdict::Distinct;
    else
        rep.verdict = GermVerdict::Inconclusive;
    return rep;
}

// ---------------------------------------------------------------------------
// Asymptotic classes, decomposition, full-line transform.

AsymptoticClass asymptotic_laplace_class(const Hyperfunction& h, QuadConfig cfg) {
    const Support K = h.support().closure_extended();
    if (K.kind != SupportKind::RightRay)
        throw unsupported_support_error(
            "asymptotic_laplace_class needs support in a right half-line, got " +
            K.to_string());
    const auto kind = h.growth().kind;
    if (kind == GrowthCertificate::Kind::ExponentialType && h.growth().param > 0.0)
        throw precondition_error(
            "asymptotic_laplace_class needs a slowly increasing representative");
    return {laplace(h, cfg), GermSpaceTag::lo_plus_inf()};
}

namespace {

Support hull_of_parts(const Structure& st) {
    bool any = false;
    double lo = 0.0, hi = 0.0;
    auto absorb = [&](double x0, double x1) {
        if (!any) {
            lo = x0;
            hi = x1;
            any = true;
        } else {
            lo = std::min(lo, x0);
            hi = std::max(hi, x1);
        }
    };
    for (const auto& p : st.poles) absorb(p.loc, p.loc);
    for (const auto& d : st.densities)
        if (d.b > d.a) absorb(d.a, d.b);
    if (!any) return Support::empty();
    return Support::compact(lo, hi);
}

}  // namespace

std::pair<Hyperfunction, Hyperfunction> decompose_at(const Hyperfunction& h, double j) {
    if (h.structure().is_opaque())
        throw not_decomposable_error(
            "cannot decompose an opaque hyperfunction constructively");
    Structure left, right;
    for (const auto& p : h.structure().poles) {
        if (p.loc <= j) left.poles.push_back(p);
        else right.poles.push_back(p);
    }
    for (const auto& d : h.structure().densities) {
        if (d.a < j) {
            DensityPart dl = d;
            dl.b = std::min(d.b, j);
            if (dl.b > dl.a) left.densities.push_back(dl);
        }
        if (d.b > j) {
            DensityPart dr = d;
            dr.a = std::max(d.a, j);
            if (dr.b > dr.a) right.densities.push_back(dr);
        }
    }
    Support sl = hull_of_parts(left);
    Support sr = hull_of_parts(right);
    // an unbounded parent support keeps its tail on the matching side
    const Support K = h.support().closure_extended();
    if (K.contains_plus_inf() && !sr.is_empty())
        sr = Support::half_line_right(sr.a);
    if (K.contains_minus_inf() && !sl.is_empty())
        sl = Support::half_line_left(sl.b);
    Hyperfunction hl(sl, h.space(), std::move(left), h.growth(), h.density_cfg());
    Hyperfunction hr(sr, h.space(), std::move(right), h.growth(), h.density_cfg());
    return {hl, hr};
}

namespace {

Hyperfunction with_support_view(const Hyperfunction& h, const Support& s) {
    Hyperfunction copy = h;
    return Hyperfunction::from_evaluator([copy](cplx z) { return copy.F(z); }, s,
                                         h.space(), h.growth());
}

}  // namespace

std::pair<TransformFunction, TransformFunction> fourier_fullline(
    const Hyperfunction& h_left, const Hyperfunction& h_right, QuadConfig cfg) {
    const Support sl = h_left.support().closure_extended();
    const Support sr = h_right.support().closure_extended();
    if (!sl.is_empty() && !sr.is_empty() && sl.right() > sr.left() + 1e-12)
        throw precondition_error("fourier_fullline: supports overlap beyond the split");

    TransformFunction upper = sl.is_empty()
        ? TransformFunction(
              [sp = h_left.space()](cplx) {
                  return TransformFunction::Sample{Value::zero(sp), 0.0};
              },
              Domain::UpperHalf, h_left.space(), "fourier{}")
        : fourier_halfline(with_support_view(h_left, Support::left_ray(sl.right())), cfg);

    TransformFunction lower_raw = sr.is_empty()
        ? TransformFunction(
              [sp = h_right.space()](cplx) {
                  return TransformFunction::Sample{Value::zero(sp), 0.0};
              },
              Domain::LowerHalf, h_right.space(), "fourier{}")
        : fourier_halfline(with_support_view(h_right, Support::right_ray(sr.left())), cfg);
    TransformFunction lower(
        [lower_raw](cplx z) {
            auto s = lower_raw.eval_full(z);
            return TransformFunction::Sample{s.value * cplx(-1.0, 0.0), s.err};
        },
        Domain::LowerHalf, h_right.space(), "-" + lower_raw.provenance());
    return {upper, lower};
}

}  // namespace hyperflux

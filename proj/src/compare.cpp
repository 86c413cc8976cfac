#include "hyperflux/compare.hpp"

#include <algorithm>
#include <cmath>

namespace hyperflux {

namespace {
const cplx kI(0.0, 1.0);
}

std::vector<cplx> SectorGrid::nodes() const {
    std::vector<cplx> out;
    for (int i = 0; i < n_rho; ++i) {
        const double rho = r * std::pow(R / r, double(i) / std::max(1, n_rho - 1));
        for (int j = 0; j < n_psi; ++j) {
            const double psi = -phi + 2.0 * phi * j / std::max(1, n_psi - 1);
            out.push_back(rho * cplx(std::cos(psi), std::sin(psi)));
        }
    }
    return out;
}

bool SectorGrid::contains(cplx z) const {
    const double rho = std::abs(z);
    if (rho < r || rho > R * (1.0 + 1e-12)) return false;
    return std::abs(std::arg(z)) <= phi + 1e-12;
}

TypeMinusInfinityRep to_type_minus_infinity(const Hyperfunction& h, QuadConfig cfg,
                                            int n_max) {
    if (!h.support().is_compact_real())
        throw unsupported_support_error(
            "type -inf representative only available for real compact supports, got " +
            h.support().to_string());
    TypeMinusInfinityRep rep;
    rep.eval = standard_representative(h, cfg);
    double C = 1e-12;
    for (int n = 1; n <= n_max; ++n) {
        SeminormGrid grid;
        grid.re_max = std::max(4.0, 12.0 / n);
        grid.n_re = 25;
        grid.n_im = 5;
        // H_{-inf} seminorm: sup |Psi(z)| e^{+n |re z|} over S_n(K)
        SeminormReport r;
        r.space_tag = "H_-inf";
        r.k = n;
        r.grid_desc = "S_n(K) sample";
        std::vector<double> xs, vals;
        for (int i = 0; i < grid.n_re; ++i) {
            const double x = -grid.re_max + 2.0 * grid.re_max * i / (grid.n_re - 1);
            for (int j = 0; j < grid.n_im; ++j) {
                const double y = -(n - 1e-3) +
                                 2.0 * (n - 1e-3) * j / std::max(1, grid.n_im - 1);
                const cplx z(x, y);
                if (!in_strip(z, h.support(), n)) continue;
                const double wv = rep.eval(z).seminorm() * std::exp(n * std::abs(x));
                r.sampled_sup = std::max(r.sampled_sup, wv);
                xs.push_back(std::abs(x));
                vals.push_back(wv);
                r.points++;
            }
        }
        r.growth_slope = fit_growth_slope(xs, vals);
        r.consistent = std::isfinite(r.sampled_sup);
        rep.seminorms.push_back(r);
        C = std::max(C, r.sampled_sup);
    }
    rep.cert = GrowthCertificate::type_minus_infinity(std::max(1.0, C));
    return rep;
}

TransformFunction langenbruch_laplace(std::function<Value(cplx)> g,
                                      GrowthCertificate cert, const Support& K,
                                      ValueSpace space, QuadConfig cfg,
                                      double clearance) {
    const Support Kc = K.closure_extended();
    if (Kc.kind != SupportKind::RightRay && Kc.kind != SupportKind::PointPlusInf)
        throw unsupported_support_error(
            "langenbruch_laplace needs support [0,inf] or {inf}, got " + Kc.to_string());
    if (cert.kind != GrowthCertificate::Kind::TypeMinusInfinity)
        throw precondition_error(
            "langenbruch_laplace needs a type -infinity certificate");

    const double c = clearance;
    return TransformFunction(
        [g, cert, Kc, c, cfg, space](cplx z) -> TransformFunction::Sample {
            // |e^{-z zeta}| grows like e^{-re(z) t} along the rays
            const double kernel_rate = -z.real();
            GrowthCertificate decay = cert;
            decay.C = std::max(cert.C, 1.0) * std::exp(c * std::abs(z.imag()));
            double tail = 0.0;
            double R = choose_truncation(decay, kernel_rate, cfg.abs_tol * 0.5, &tail);
            R += 1.0 / c + 2.0;
            ContourPath path = build_contour(Kc, c, R);
            auto integrand = [&](cplx zeta) -> Value {
                Value v = g(zeta);
                v *= std::exp(-z * zeta);
                return v;
            };
            IntegralResult r = integrate_path(integrand, path, cfg);
            return {r.value, r.total_error() + tail};
        },
        Domain::Entire, space, "langenbruch_laplace" + Kc.to_string());
}

std::vector<KomatsuSample> komatsu_laplace(std::function<Value(cplx)> F,
                                           GrowthCertificate cert, double a,
                                           const std::vector<cplx>& zeta_nodes,
                                           ValueSpace space, KomatsuParams kp,
                                           QuadConfig cfg) {
    std::vector<KomatsuSample> out;
    const double cvx = a - kp.c_offset;
    const double H = cert.kind == GrowthCertificate::Kind::ExponentialType ||
                             cert.kind == GrowthCertificate::Kind::Entire
                         ? cert.param
                         : cert.rate(0.0);
    for (cplx zeta : zeta_nodes) {
        KomatsuSample s;
        s.zeta = zeta;
        // decay along each ray: re(e^{i angle} zeta) must beat the type H
        const double ra = (cplx(std::cos(kp.alpha), std::sin(kp.alpha)) * zeta).real();
        const double rb = (cplx(std::cos(kp.beta), std::sin(kp.beta)) * zeta).real();
        const double margin = std::min(ra, rb) - H;
        if (margin <= 0.01) {
            s.flagged = true;
            s.value = Value::zero(space);
            out.push_back(s);
            continue;
        }
        GrowthCertificate decay = GrowthCertificate::exponential_type(0.0,
            std::max(cert.C, 1.0) * std::exp(std::abs(cvx) * std::abs(zeta)));
        double tail = 0.0;
        double R = std::log(std::max(decay.C, 1.0) / (cfg.abs_tol * 0.5 * margin)) /
                   margin;
        R = std::max(R, 4.0);
        tail = std::max(decay.C, 1.0) * std::exp(-margin * R) / margin;
        ContourPath path = build_gamma_komatsu(a, cvx, kp.alpha, kp.beta, R);
        auto integrand = [&](cplx z) -> Value {
            Value v = F(z);
            v *= std::exp(-z * zeta);
            return v;
        };
        IntegralResult r = integrate_path(integrand, path, cfg);
        s.value = r.value;
        s.err = r.total_error() + tail;
        out.push_back(s);
    }
    return out;
}

std::vector<KomatsuSample> classical_laplace_oracle(std::function<Value(double)> f,
                                                    double T,
                                                    const std::vector<cplx>& zeta_nodes,
                                                    ValueSpace space, QuadConfig cfg) {
    std::vector<KomatsuSample> out;
    for (cplx zeta : zeta_nodes) {
        auto integrand = [&](cplx t) -> Value {
            Value v = f(t.real());
            v *= std::exp(-t.real() * zeta);
            return v;
        };
        KomatsuSample s;
        s.zeta = zeta;
        if (T <= 0.0) {
            s.value = Value::zero(space);
            out.push_back(s);
            continue;
        }
        IntegralResult r = integrate_segment(integrand, cplx(0, 0), cplx(T, 0), cfg);
        s.value = r.value;
        s.err = r.total_error();
        out.push_back(s);
    }
    return out;
}

I0Report consistency_I0(const Hyperfunction& h, QuadConfig cfg, int k_max, double R,
                        double tol) {
    TypeMinusInfinityRep rep = to_type_minus_infinity(h, cfg);
    TransformFunction lan = langenbruch_laplace(rep.eval, rep.cert,
                                                Support::right_ray(0.0), h.space(), cfg);
    TransformFunction ours = laplace(h, cfg);

    I0Report out;
    out.germ = germ_equivalent_heuristic(lan, ours, GermSpaceTag::lo_plus_inf(), k_max,
                                         R, tol);
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const cplx z(x, 0.3 * x);
        auto sa = lan.eval_full(z);
        auto sb = ours.eval_full(z);
        out.max_probe_diff = std::max(out.max_probe_diff,
                                      (sa.value - sb.value).seminorm());
        out.max_probe_err = std::max(out.max_probe_err, sa.err + sb.err);
    }
    return out;
}

ChainReport consistency_chain(std::function<Value(double)> f, double T,
                              const std::vector<cplx>& zeta_nodes, ValueSpace space,
                              QuadConfig cfg) {
    auto fv = f;
    Hyperfunction h = cauchy_embed(fv, 0.0, T, cfg);
    TransformFunction ours = laplace(h, cfg);
    Hyperfunction hc = h;
    auto Feval = [hc](cplx z) { return hc.F(z); };
    auto kom = komatsu_laplace(Feval, h.growth(), 0.0, zeta_nodes, space, {}, cfg);
    auto cls = classical_laplace_oracle(f, T, zeta_nodes, space, cfg);

    ChainReport rep;
    for (size_t i = 0; i < zeta_nodes.size(); ++i) {
        ChainRow row;
        row.zeta = zeta_nodes[i];
        row.flagged = kom[i].flagged;
        auto so = ours.eval_full(zeta_nodes[i]);
        row.v_ours = so.value;
        row.err_ours = so.err;
        row.v_komatsu = kom[i].value;
        row.err_komatsu = kom[i].err;
        row.v_classical = cls[i].value;
        row.err_classical = cls[i].err;
        if (!row.flagged) {
            const double d1 = (row.v_ours - row.v_komatsu).seminorm();
            const double d2 = (row.v_ours - row.v_classical).seminorm();
            const double d3 = (row.v_komatsu - row.v_classical).seminorm();
            row.max_pairwise_dev = std::max({d1, d2, d3});
            rep.max_dev = std::max(rep.max_dev, row.max_pairwise_dev);
        }
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace hyperflux

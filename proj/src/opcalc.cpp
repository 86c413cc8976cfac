#include "hyperflux/opcalc.hpp"

#include <algorithm>
#include <cmath>

namespace hyperflux {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);

cplx ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// rising factorial m (m+1) ... (m+k-1)
double rising(int m, int k) {
    double f = 1.0;
    for (int i = 0; i < k; ++i) f *= (m + i);
    return f;
}

}  // namespace

EntireSymbol EntireSymbol::from_poly(const std::vector<cplx>& p) {
    EntireSymbol s;
    s.c.resize(p.size());
    for (size_t k = 0; k < p.size(); ++k) s.c[k] = p[k] * factorial(int(k));
    return s;
}

cplx EntireSymbol::eval(cplx z) const { return deriv(0, z); }

cplx EntireSymbol::deriv(int j, cplx z) const {
    // P^(j)(z) = sum_{k>=j} c_k z^{k-j} / (k-j)!
    cplx sum = 0.0;
    cplx zp = 1.0;
    for (size_t k = j; k < c.size(); ++k) {
        sum += c[k] * zp / factorial(int(k) - j);
        zp *= z;
    }
    return sum;
}

EntireSymbol::Type0Report EntireSymbol::type0_check(
    const std::vector<double>& eps_list) const {
    Type0Report rep;
    for (double eps : eps_list) {
        double C = 0.0;
        size_t argmax = 0;
        double epk = 1.0;
        for (size_t k = 0; k < c.size(); ++k) {
            const double v = std::abs(c[k]) / epk;
            if (v > C) {
                C = v;
                argmax = k;
            }
            epk *= eps;
        }
        rep.C_eps.push_back(C);
        if (c.size() > 4 && argmax + 1 >= c.size()) rep.settled = false;
    }
    return rep;
}

// ---------------------------------------------------------------------------

Hyperfunction apply_P_deriv(const Hyperfunction& h, const EntireSymbol& P, int M,
                            double tail_tol) {
    M = std::min(M, P.truncation_order());
    if (!h.structure().is_opaque()) {
        Structure st;
        for (const auto& p : h.structure().poles) {
            for (int k = 0; k <= M; ++k) {
                if (std::abs(P.c[k]) == 0.0) continue;
                // (-i d)^k coef (z-a)^{-m} = coef i^k (m)_k (z-a)^{-m-k}
                Value coef = p.coef * (P.c[k] / factorial(k) * ipow(k) *
                                       rising(p.order, k));
                st.poles.push_back({p.loc, p.order + k, coef});
            }
        }
        for (const auto& d : h.structure().densities) {
            for (int k = 0; k <= M; ++k) {
                if (std::abs(P.c[k]) == 0.0) continue;
                // (-i d_z)^k (t-z)^{-m} = (-i)^k (m)_k (t-z)^{-m-k}
                DensityPart nd = d;
                nd.order = d.order + k;
                nd.scale = d.scale * (P.c[k] / factorial(k)) *
                           ipow(-k) * rising(d.order, k);
                st.densities.push_back(std::move(nd));
            }
        }
        return Hyperfunction(h.support(), h.space(), std::move(st), h.growth(),
                             h.density_cfg());
    }

    // opaque: Cauchy-circle derivatives, one circle of moments per point
    Hyperfunction hc = h;
    std::vector<cplx> ck(P.c.begin(), P.c.begin() + std::min<size_t>(M + 1, P.c.size()));
    auto F = [hc, ck, M, tail_tol](cplx z) -> Value {
        const double d = hc.support().closure_extended().dist_finite(z);
        if (d < 4.0 * kSupportCollar)
            throw near_singular_error("apply_P_deriv too close to the support", z);
        const double r = 0.5 * d;
        const int N = std::max(64, 4 * (M + 1));
        // moments m_k = (1/N) sum_j F(z + r e^{i th_j}) e^{-i k th_j}
        std::vector<Value> samples;
        samples.reserve(N);
        for (int j = 0; j < N; ++j) {
            const double th = 2.0 * kPi * j / N;
            samples.push_back(hc.F(z + r * cplx(std::cos(th), std::sin(th))));
        }
        Value total = Value::zero(hc.space());
        double rk = 1.0;
        for (size_t k = 0; k < ck.size(); ++k) {
            if (std::abs(ck[k]) != 0.0) {
                Value mk = Value::zero(hc.space());
                for (int j = 0; j < N; ++j) {
                    const double th = 2.0 * kPi * j / N;
                    mk += samples[j] * std::exp(-kI * double(k) * th);
                }
                mk *= 1.0 / N;
                // F^(k)(z) = k! m_k / r^k ; term = c_k/k! (-i)^k F^(k)
                total += mk * (ck[k] * ipow(-int(k)) / rk);
            }
            rk *= r;
        }
        (void)tail_tol;
        return total;
    };
    return Hyperfunction::from_evaluator(F, h.support(), h.space(), h.growth());
}

Hyperfunction multiply_entire(const Hyperfunction& h, const EntireSymbol& P) {
    if (!h.structure().is_opaque()) {
        Structure st;
        for (const auto& p : h.structure().poles) {
            // P(z) (z-a)^{-m} = sum_{j<m} P^(j)(a)/j! (z-a)^{j-m} + entire
            for (int j = 0; j < p.order; ++j) {
                const cplx pj = P.deriv(j, p.loc) / factorial(j);
                if (std::abs(pj) == 0.0) continue;
                st.poles.push_back({p.loc, p.order - j, p.coef * pj});
            }
        }
        for (const auto& d : h.structure().densities) {
            // P(z)(t-z)^{-m} = sum_{j<m} (-1)^j P^(j)(t)/j! (t-z)^{j-m} + entire
            for (int j = 0; j < d.order; ++j) {
                DensityPart nd = d;
                nd.order = d.order - j;
                const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
                auto f0 = d.f;
                const EntireSymbol Pc = P;
                const int jj = j;
                nd.f = [f0, Pc, jj, sgn](double t) {
                    Value v = f0(t);
                    v *= sgn * Pc.deriv(jj, t) / factorial(jj);
                    return v;
                };
                st.densities.push_back(std::move(nd));
            }
        }
        return Hyperfunction(h.support(), h.space(), std::move(st), h.growth(),
                             h.density_cfg());
    }
    Hyperfunction hc = h;
    EntireSymbol Pc = P;
    auto F = [hc, Pc](cplx z) -> Value {
        Value v = hc.F(z);
        v *= Pc.eval(z);
        return v;
    };
    return Hyperfunction::from_evaluator(F, h.support(), h.space(), h.growth());
}

TransformFunction apply_P_ideriv_transform(const TransformFunction& g,
                                           const EntireSymbol& P, int M, double r) {
    M = std::min(M, P.truncation_order());
    std::vector<cplx> ck(P.c.begin(), P.c.begin() + (M + 1));
    TransformFunction gc = g;
    return TransformFunction(
        [gc, ck, r](cplx zeta) -> TransformFunction::Sample {
            const int N = std::max<int>(64, 4 * int(ck.size()));
            std::vector<TransformFunction::Sample> samples;
            samples.reserve(N);
            double err = 0.0;
            for (int j = 0; j < N; ++j) {
                const double th = 2.0 * kPi * j / N;
                samples.push_back(gc.eval_full(zeta + r * cplx(std::cos(th), std::sin(th))));
                err = std::max(err, samples.back().err);
            }
            Value total = Value::zero(gc.space());
            double rk = 1.0;
            for (size_t k = 0; k < ck.size(); ++k) {
                if (std::abs(ck[k]) != 0.0) {
                    Value mk = Value::zero(gc.space());
                    for (int j = 0; j < N; ++j) {
                        const double th = 2.0 * kPi * j / N;
                        mk += samples[j].value * std::exp(-kI * double(k) * th);
                    }
                    mk *= 1.0 / N;
                    // P(i d)^: term = c_k/k! (i)^k g^(k) = c_k i^k m_k / r^k
                    total += mk * (ck[k] * ipow(int(k)) / rk);
                }
                rk *= r;
            }
            return {total, err * 4.0};
        },
        g.domain(), g.space(), "P(i d)(" + g.provenance() + ")");
}

// ---------------------------------------------------------------------------

Hyperfunction convolve_contour(const Hyperfunction& h1, const Hyperfunction& h2,
                               QuadConfig cfg) {
    const Support K1 = h1.support().closure_extended();
    if (!K1.is_compact_real())
        throw unsupported_support_error(
            "convolve_contour needs a real compact support in the first factor, got " +
            K1.to_string());
    const ValueSpace sp = product_space(h1.space(), h2.space());
    const Support supp = Support::minkowski_sum(h1.support(), h2.support());

    Hyperfunction a = h1, b = h2;
    auto memo = std::make_shared<std::map<std::pair<double, double>, Value>>();
    auto mu = std::make_shared<std::mutex>();
    auto F = [a, b, supp, sp, cfg, memo, mu](cplx z) -> Value {
        const Support sc = supp.closure_extended();
        const double d = sc.dist_finite(z);
        if (d < 16.0 * kSupportCollar)
            throw near_singular_error("convolution evaluated too close to the support", z);
        {
            std::lock_guard<std::mutex> lk(*mu);
            auto it = memo->find({z.real(), z.imag()});
            if (it != memo->end()) return it->second;
        }
        // z in S_n(supp): d(z, supp) > 1/n and |im z| < n
        int n = int(std::floor(1.0 / std::min(d, 1e8))) + 1;
        n = std::max(n, int(std::floor(std::abs(z.imag()))) + 1);
        const double c = 1.0 / (2.0 * n);
        ContourPath path = build_contour(a.support().closure_extended(), c);
        auto integrand = [&](cplx w) -> Value {
            return bilinear(a.F(w), b.F(z - w));
        };
        Value out = integrate_path(integrand, path, cfg).value;
        {
            std::lock_guard<std::mutex> lk(*mu);
            memo->emplace(std::make_pair(z.real(), z.imag()), out);
        }
        return out;
    };

    // the contour bound transfers the second factor's slow increase
    GrowthCertificate g2 = h2.growth();
    GrowthCertificate cert = g2;
    if (g2.kind == GrowthCertificate::Kind::SlowlyIncreasing)
        cert = GrowthCertificate::slowly_increasing(
            std::max(1, int(g2.param) / 2), g2.C * std::max(1.0, h1.growth().C));
    else
        cert.C = g2.C * std::max(1.0, h1.growth().C);
    return Hyperfunction::from_evaluator(F, supp, sp, cert);
}

Hyperfunction convolve_transform(const Hyperfunction& h1, const Hyperfunction& h2,
                                 InverseParams p, QuadConfig cfg) {
    const Support K1 = h1.support().closure_extended();
    const Support K2 = h2.support().closure_extended();
    if (!K1.is_compact_real() || !K2.is_compact_real())
        throw unsupported_support_error(
            "convolve_transform needs two real compact supports");
    TransformFunction g = transform_product(fourier_compact(h1, cfg),
                                            fourier_compact(h2, cfg));
    return inverse_fourier_compact(g, K1.a + K2.a, K1.b + K2.b, p, cfg);
}

TransformFunction transform_product(const TransformFunction& g1,
                                    const TransformFunction& g2) {
    Domain d = domain_intersect(g1.domain(), g2.domain());
    const ValueSpace sp = product_space(g1.space(), g2.space());
    TransformFunction a = g1, b = g2;
    return TransformFunction(
        [a, b, sp](cplx z) -> TransformFunction::Sample {
            auto sa = a.eval_full(z);
            auto sb = b.eval_full(z);
            const double D = sp.bilinear_const();
            const double err = D * (sa.err * sb.value.seminorm() +
                                    sb.err * sa.value.seminorm() + sa.err * sb.err);
            return {bilinear(sa.value, sb.value), err};
        },
        d, sp, "(" + g1.provenance() + ")*(" + g2.provenance() + ")");
}

}  // namespace hyperflux

#pragma once

#include "hyperflux/transforms.hpp"

namespace hyperflux {

// Entire symbol P(z) = sum_k c_k z^k / k!, c_k = P^(k)(0).  Admissible
// infinite-order operators have exponential type 0: |c_k| <= C eps^k for
// every eps > 0.
struct EntireSymbol {
    std::vector<cplx> c;  // derivative-at-zero coefficients c_k

    // from ordinary polynomial coefficients p_0 + p_1 z + ... + p_m z^m
    static EntireSymbol from_poly(const std::vector<cplx>& p);
    static EntireSymbol identity() { return from_poly({1.0}); }

    cplx eval(cplx z) const;
    // P^(j)(z) by the shifted series.
    cplx deriv(int j, cplx z) const;
    int truncation_order() const { return int(c.size()) - 1; }
    bool is_polynomial() const { return true; }  // stored form is always finite

    // Spot check of the type-0 certificate on a declared eps list: finds the
    // smallest constants C_eps with |c_k| <= C_eps eps^k and reports whether
    // the maximising k has settled below the truncation order.
    struct Type0Report {
        std::vector<double> C_eps;
        bool settled = true;
    };
    Type0Report type0_check(const std::vector<double>& eps_list) const;
};

// P(-i d/dz) applied to the defining function, truncated at order M.
// Structured parts update exactly (poles and density kernels gain order);
// opaque parts use Cauchy-circle numerical derivatives.
Hyperfunction apply_P_deriv(const Hyperfunction& h, const EntireSymbol& P, int M = 32,
                            double tail_tol = 1e-10);

// Multiplication by the entire symbol: defining function z -> P(z) F(z).
// Structured parts keep only the singular terms of the local expansion of P
// (the entire remainder does not change the class).
Hyperfunction multiply_entire(const Hyperfunction& h, const EntireSymbol& P);

// P(i d/dzeta) applied to a transform by Cauchy-circle derivatives of
// radius r (the transform-side half of the multiplier identity).
TransformFunction apply_P_ideriv_transform(const TransformFunction& g,
                                           const EntireSymbol& P, int M = 32,
                                           double r = 0.5);

// Contour convolution: (F (*) G)(z) = integral over gamma_{[a,b],2n} of
// F(w) G(z - w) dw with n read off the strip of z; h1 must have real
// compact support.  Result support is the Minkowski sum.
Hyperfunction convolve_contour(const Hyperfunction& h1, const Hyperfunction& h2,
                               QuadConfig cfg = {});

// Transform-side convolution: inverse Fourier of the product of the two
// Fourier transforms; both supports real compact.
Hyperfunction convolve_transform(const Hyperfunction& h1, const Hyperfunction& h2,
                                 InverseParams p = {}, QuadConfig cfg = {});

// Pointwise product on the intersected domains.
TransformFunction transform_product(const TransformFunction& g1,
                                    const TransformFunction& g2);

}  // namespace hyperflux

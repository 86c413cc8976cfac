#include "hyperflux/cerfc.hpp"

#include <cmath>

namespace hyperflux {

namespace {

using cplx = std::complex<double>;

constexpr double kSqrtPi = 1.7724538509055160273;

// erf by its entire Maclaurin-type series, stable for |z| <~ 5 with
// moderate |im z|:  erf(z) = (2/sqrt(pi)) e^{-z^2} sum_n 2^n z^{2n+1} / (2n+1)!!
cplx erf_series(cplx z) {
    const cplx z2 = z * z;
    cplx term = z;
    cplx sum = z;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * z2 / double(2 * n + 1);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return 2.0 / kSqrtPi * std::exp(-z2) * sum;
}

// Faddeeva w(u) for im u > 0 by the Laplace continued fraction,
// w(u) = (i/sqrt(pi)) / (u - 1/2/(u - 1/(u - 3/2/(u - ...)))).
cplx faddeeva_cf(cplx u, int depth) {
    cplx f(0.0, 0.0);
    for (int k = depth; k >= 1; --k) f = (0.5 * k) / (u - f);
    return cplx(0.0, 1.0) / kSqrtPi / (u - f);
}

}  // namespace

cplx cerfc(cplx z) {
    if (z.real() < 0.0) return 2.0 - cerfc(-z);
    const double m = std::abs(z);
    if (m < 5.0) return 1.0 - erf_series(z);
    // erfc(z) = e^{-z^2} w(iz), re z >= 0 so im(iz) >= 0
    const int depth = m > 12.0 ? 14 : 30;
    return std::exp(-z * z) * faddeeva_cf(cplx(0.0, 1.0) * z, depth);
}

cplx cerf(cplx z) { return 1.0 - cerfc(z); }

}  // namespace hyperflux

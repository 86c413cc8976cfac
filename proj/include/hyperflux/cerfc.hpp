#pragma once

#include <complex>

namespace hyperflux {

// Complementary error function for complex argument.
// Series for small |z|, Laplace continued fraction of the Faddeeva function
// otherwise, reflection erfc(-z) = 2 - erfc(z) for re z < 0.
std::complex<double> cerfc(std::complex<double> z);

// erf(z) = 1 - erfc(z).
std::complex<double> cerf(std::complex<double> z);

}  // namespace hyperflux

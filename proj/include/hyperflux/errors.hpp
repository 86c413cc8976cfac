#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperflux {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation asked for a support kind it cannot handle.
struct unsupported_support_error : error {
    using error::error;
};

// Contour construction produced an empty or inverted path.
struct degenerate_path_error : error {
    using error::error;
};

// Combined growth/decay exponent is non-negative: the requested point lies
// outside the transform's convergence domain.
struct divergence_error : error {
    explicit divergence_error(const std::string& msg, double exponent = 0.0)
        : error(msg), exponent(exponent) {}
    double exponent;
};

// Integrand evaluated to a non-finite value; carries the offending node.
struct evaluation_error : error {
    evaluation_error(const std::string& msg, std::complex<double> node)
        : error(msg), node(node) {}
    std::complex<double> node;
};

// Adaptive refinement hit max_depth before reaching the tolerance.
// best_err is the error estimate of the value the integrator settled on.
struct accuracy_error : error {
    accuracy_error(const std::string& msg, double best_err)
        : error(msg), best_err(best_err) {}
    double best_err;
};

struct domain_error : error {
    explicit domain_error(const std::string& msg, std::complex<double> point = {})
        : error(msg), point(point) {}
    std::complex<double> point;
};

struct value_space_error : error {
    using error::error;
};

// structure == Opaque: no constructive decomposition available.
struct not_decomposable_error : error {
    using error::error;
};

struct near_singular_error : error {
    near_singular_error(const std::string& msg, std::complex<double> point)
        : error(msg), point(point) {}
    std::complex<double> point;
};

struct truncation_error : error {
    truncation_error(const std::string& msg, double tail)
        : error(msg), tail(tail) {}
    double tail;
};

struct precondition_error : error {
    using error::error;
};

}  // namespace hyperflux

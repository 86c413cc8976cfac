#pragma once

#include <functional>

#include "hyperflux/contour.hpp"
#include "hyperflux/value.hpp"

namespace hyperflux {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 30;

    QuadConfig with_tol(double a, double r) const {
        QuadConfig c = *this;
        c.abs_tol = a;
        c.rel_tol = r;
        return c;
    }
};

// Declared growth of a defining function, used to certify ray truncations.
//  SlowlyIncreasing(n):  |F(z)| <= C e^{|re z|/n} on S_n(K)
//  TypeMinusInfinity:    |F(z)| <= C_n e^{-n|re z|} for every n
//  ExponentialType(tau): |F(z)| <= C e^{tau |z|}
//  Entire:               entire function, growth as declared in tau
struct GrowthCertificate {
    enum class Kind { SlowlyIncreasing, TypeMinusInfinity, ExponentialType, Entire };

    Kind kind = Kind::ExponentialType;
    double param = 0.0;  // n for SlowlyIncreasing (>=1), tau for the others
    double C = 1.0;

    static GrowthCertificate slowly_increasing(int n, double C = 1.0) {
        if (n < 1) throw precondition_error("slowly_increasing needs n >= 1");
        return {Kind::SlowlyIncreasing, double(n), C};
    }
    static GrowthCertificate type_minus_infinity(double C = 1.0) {
        return {Kind::TypeMinusInfinity, 0.0, C};
    }
    static GrowthCertificate exponential_type(double tau, double C = 1.0) {
        if (tau < 0.0) throw precondition_error("exponential type needs tau >= 0");
        return {Kind::ExponentialType, tau, C};
    }
    static GrowthCertificate entire(double tau = 0.0, double C = 1.0) {
        return {Kind::Entire, tau, C};
    }

    // Growth exponent per unit |re z| along a horizontal ray.  For type -inf
    // the rate is -n for any n; `beat` asks for a rate at least `beat` below
    // zero after adding the kernel.
    double rate(double beat = 0.0) const {
        switch (kind) {
            case Kind::SlowlyIncreasing:
                return 1.0 / param;
            case Kind::TypeMinusInfinity:
                return -std::max(1.0, std::ceil(beat) + 1.0);
            case Kind::ExponentialType:
            case Kind::Entire:
                return param;
        }
        return 0.0;
    }
};

struct IntegralResult {
    Value value;
    double err_estimate = 0.0;
    double tail_bound = 0.0;
    long evaluations = 0;

    double total_error() const { return err_estimate + tail_bound; }
};

// Adaptive embedded Gauss-Kronrod 15/7 integration of f along the path,
// segment by segment in order.  Throws evaluation_error on non-finite f,
// accuracy_error when max_depth cannot reach the tolerance.
IntegralResult integrate_path(const std::function<Value(cplx)>& f,
                              const ContourPath& path, const QuadConfig& cfg);

// Scalar convenience overload.
IntegralResult integrate_path_scalar(const std::function<cplx(cplx)>& f,
                                     const ContourPath& path, const QuadConfig& cfg);

// Integrate over a single straight segment p -> q (used by the Cauchy
// transform and the real-axis oracles).
IntegralResult integrate_segment(const std::function<Value(cplx)>& f, cplx p, cplx q,
                                 const QuadConfig& cfg);

// Smallest R with  integral_R^inf C e^{kappa t} dt <= tol  where
// kappa = decay.rate(|kernel_rate|) + kernel_rate must be negative.
// Returns R and writes the closed-form tail bound C e^{kappa R}/|kappa|.
double choose_truncation(const GrowthCertificate& decay, double kernel_rate,
                         double tol, double* tail_bound = nullptr);

}  // namespace hyperflux

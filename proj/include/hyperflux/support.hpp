#pragma once

#include <complex>
#include <limits>
#include <string>

#include "hyperflux/errors.hpp"

namespace hyperflux {

using cplx = std::complex<double>;

// Supports are subsets of the extended line in interval/point normal form.
// Compact(a,b) with a==b is a single real point; the rays include their
// endpoint at +-infinity, the open half-lines do not.
enum class SupportKind {
    Empty,
    Compact,        // [a, b],            a <= b finite
    RightRay,       // [a, +inf]          closed at +inf
    LeftRay,        // [-inf, b]          closed at -inf
    FullLine,       // extended line
    PointPlusInf,   // {+inf}
    PointMinusInf,  // {-inf}
    PairPmInf,      // {-inf, +inf}
    HalfLineOpenRight,  // [a, +inf)      hyperfunction support in R
    HalfLineOpenLeft,   // (-inf, b]
};

struct Support {
    SupportKind kind = SupportKind::Empty;
    double a = 0.0;
    double b = 0.0;

    static Support empty() { return {SupportKind::Empty, 0, 0}; }
    static Support point(double x) { return {SupportKind::Compact, x, x}; }
    static Support compact(double a, double b) {
        if (!(a <= b)) throw unsupported_support_error("compact support needs a <= b");
        if (!std::isfinite(a) || !std::isfinite(b))
            throw unsupported_support_error("compact support needs finite endpoints");
        return {SupportKind::Compact, a, b};
    }
    static Support right_ray(double a) { return {SupportKind::RightRay, a, 0}; }
    static Support left_ray(double b) { return {SupportKind::LeftRay, 0, b}; }
    static Support full_line() { return {SupportKind::FullLine, 0, 0}; }
    static Support point_plus_inf() { return {SupportKind::PointPlusInf, 0, 0}; }
    static Support point_minus_inf() { return {SupportKind::PointMinusInf, 0, 0}; }
    static Support pair_pm_inf() { return {SupportKind::PairPmInf, 0, 0}; }
    static Support half_line_right(double a) { return {SupportKind::HalfLineOpenRight, a, 0}; }
    static Support half_line_left(double b) { return {SupportKind::HalfLineOpenLeft, 0, b}; }

    bool is_empty() const { return kind == SupportKind::Empty; }
    bool is_compact_real() const { return kind == SupportKind::Compact; }
    bool is_point() const { return kind == SupportKind::Compact && a == b; }

    bool contains_plus_inf() const {
        switch (kind) {
            case SupportKind::RightRay:
            case SupportKind::FullLine:
            case SupportKind::PointPlusInf:
            case SupportKind::PairPmInf:
                return true;
            default:
                return false;
        }
    }
    bool contains_minus_inf() const {
        switch (kind) {
            case SupportKind::LeftRay:
            case SupportKind::FullLine:
            case SupportKind::PointMinusInf:
            case SupportKind::PairPmInf:
                return true;
            default:
                return false;
        }
    }

    // Closure in the extended line; maps open half-lines to closed rays.
    Support closure_extended() const {
        if (kind == SupportKind::HalfLineOpenRight) return right_ray(a);
        if (kind == SupportKind::HalfLineOpenLeft) return left_ray(b);
        return *this;
    }

    // Distance from z to the finite part K n C.  Empty finite part -> +inf.
    double dist_finite(cplx z) const;

    // Left/right finite endpoints when they exist (for contour building).
    bool has_finite_left() const {
        return kind == SupportKind::Compact || kind == SupportKind::RightRay ||
               kind == SupportKind::HalfLineOpenRight;
    }
    bool has_finite_right() const {
        return kind == SupportKind::Compact || kind == SupportKind::LeftRay ||
               kind == SupportKind::HalfLineOpenLeft;
    }
    double left() const { return kind == SupportKind::LeftRay || kind == SupportKind::HalfLineOpenLeft
                              ? -std::numeric_limits<double>::infinity() : a; }
    double right() const { return kind == SupportKind::RightRay || kind == SupportKind::HalfLineOpenRight
                               ? std::numeric_limits<double>::infinity() : b; }

    // Minkowski sum of two supports (convolution support arithmetic).
    static Support minkowski_sum(const Support& s, const Support& t);

    // Translation by h.
    Support shifted(double h) const;

    std::string to_string() const;
};

// H_K(y) = sup_{x in K} x*y for a real compact interval K = [a, b].
double supporting_function(const Support& K, double y);

// z in U_{1/c}(K): the c-neighborhood of K n C united with the far strips
// that account for +-infinity in K.
bool in_neighborhood(cplx z, const Support& K, double c);

// z in S_n(K) = (C \ closure(U_n(K))) n {|im z| < n}, with U_n = U_{1/c},
// c = 1/n.
bool in_strip(cplx z, const Support& K, int n);

}  // namespace hyperflux

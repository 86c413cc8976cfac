#include "hyperflux/support.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperflux {

namespace {

double dist_to_interval(cplx z, double lo, double hi) {
    const double x = z.real();
    const double dx = x < lo ? lo - x : (x > hi ? x - hi : 0.0);
    return std::hypot(dx, z.imag());
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double Support::dist_finite(cplx z) const {
    switch (kind) {
        case SupportKind::Empty:
        case SupportKind::PointPlusInf:
        case SupportKind::PointMinusInf:
        case SupportKind::PairPmInf:
            return kInf;
        case SupportKind::Compact:
            return dist_to_interval(z, a, b);
        case SupportKind::RightRay:
        case SupportKind::HalfLineOpenRight:
            return dist_to_interval(z, a, kInf);
        case SupportKind::LeftRay:
        case SupportKind::HalfLineOpenLeft:
            return dist_to_interval(z, -kInf, b);
        case SupportKind::FullLine:
            return std::abs(z.imag());
    }
    return kInf;
}

Support Support::shifted(double h) const {
    Support s = *this;
    s.a += h;
    s.b += h;
    if (kind == SupportKind::FullLine || kind == SupportKind::PointPlusInf ||
        kind == SupportKind::PointMinusInf || kind == SupportKind::PairPmInf ||
        kind == SupportKind::Empty) {
        s.a = a;
        s.b = b;
    }
    return s;
}

Support Support::minkowski_sum(const Support& s, const Support& t) {
    if (s.is_empty() || t.is_empty()) return Support::empty();
    const double lo = s.left() + t.left();
    const double hi = s.right() + t.right();
    const bool lo_fin = std::isfinite(lo);
    const bool hi_fin = std::isfinite(hi);
    if (lo_fin && hi_fin) return Support::compact(lo, hi);
    if (lo_fin) {
        // closed at +inf only if one factor reaches +inf in the extended line
        if (s.contains_plus_inf() || t.contains_plus_inf()) return Support::right_ray(lo);
        return Support::half_line_right(lo);
    }
    if (hi_fin) {
        if (s.contains_minus_inf() || t.contains_minus_inf()) return Support::left_ray(hi);
        return Support::half_line_left(hi);
    }
    return Support::full_line();
}

std::string Support::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case SupportKind::Empty: os << "{}"; break;
        case SupportKind::Compact:
            if (a == b) os << "{" << a << "}";
            else os << "[" << a << "," << b << "]";
            break;
        case SupportKind::RightRay: os << "[" << a << ",+inf]"; break;
        case SupportKind::LeftRay: os << "[-inf," << b << "]"; break;
        case SupportKind::FullLine: os << "[-inf,+inf]"; break;
        case SupportKind::PointPlusInf: os << "{+inf}"; break;
        case SupportKind::PointMinusInf: os << "{-inf}"; break;
        case SupportKind::PairPmInf: os << "{-inf,+inf}"; break;
        case SupportKind::HalfLineOpenRight: os << "[" << a << ",+inf)"; break;
        case SupportKind::HalfLineOpenLeft: os << "(-inf," << b << "]"; break;
    }
    return os.str();
}

double supporting_function(const Support& K, double y) {
    if (K.kind != SupportKind::Compact)
        throw unsupported_support_error(
            "supporting_function needs a finite compact support, got " + K.to_string());
    return std::max(K.a * y, K.b * y);
}

bool in_neighborhood(cplx z, const Support& K, double c) {
    if (!(c > 0.0)) throw precondition_error("in_neighborhood needs c > 0");
    const Support Kc = K.closure_extended();
    if (Kc.dist_finite(z) < c) return true;
    const bool band = std::abs(z.imag()) < c;
    if (band && Kc.contains_plus_inf() && z.real() > 1.0 / c) return true;
    if (band && Kc.contains_minus_inf() && z.real() < -1.0 / c) return true;
    return false;
}

bool in_strip(cplx z, const Support& K, int n) {
    if (n < 1) throw precondition_error("in_strip needs n >= 1");
    if (std::abs(z.imag()) >= n) return false;
    const double c = 1.0 / n;
    const Support Kc = K.closure_extended();
    // closure of U_n(K): distances and strip bounds become non-strict
    if (Kc.dist_finite(z) <= c) return false;
    const bool band = std::abs(z.imag()) <= c;
    if (band && Kc.contains_plus_inf() && z.real() >= n) return false;
    if (band && Kc.contains_minus_inf() && z.real() <= -n) return false;
    return true;
}

}  // namespace hyperflux

#include "hyperflux/contour.hpp"

#include <cmath>
#include <sstream>

namespace hyperflux {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PathSegment PathSegment::line(cplx p, cplx q) {
    PathSegment s;
    s.kind = Kind::Line;
    s.p = p;
    s.q = q;
    return s;
}

PathSegment PathSegment::arc(cplx center, double radius, double theta0, double theta1) {
    if (!(radius > 0.0)) throw degenerate_path_error("arc radius must be > 0");
    PathSegment s;
    s.kind = Kind::Arc;
    s.center = center;
    s.radius = radius;
    s.theta0 = theta0;
    s.theta1 = theta1;
    return s;
}

PathSegment PathSegment::ray(cplx origin, cplx dir, double len) {
    if (!(len > 0.0) || !std::isfinite(len))
        throw degenerate_path_error("ray truncation length must be finite and > 0");
    if (std::abs(std::abs(dir) - 1.0) > 1e-12)
        throw degenerate_path_error("ray direction must be unimodular");
    PathSegment s;
    s.kind = Kind::Ray;
    s.origin = origin;
    s.dir = dir;
    s.len = len;
    return s;
}

cplx PathSegment::point(double t) const {
    switch (kind) {
        case Kind::Line:
            return p + (q - p) * t;
        case Kind::Arc: {
            const double th = theta0 + (theta1 - theta0) * t;
            return center + radius * cplx(std::cos(th), std::sin(th));
        }
        case Kind::Ray:
            return origin + dir * (len * t);
    }
    return {};
}

cplx PathSegment::derivative(double t) const {
    switch (kind) {
        case Kind::Line:
            return q - p;
        case Kind::Arc: {
            const double th = theta0 + (theta1 - theta0) * t;
            const double dth = theta1 - theta0;
            return radius * dth * cplx(-std::sin(th), std::cos(th));
        }
        case Kind::Ray:
            return dir * len;
    }
    return {};
}

double PathSegment::length() const {
    switch (kind) {
        case Kind::Line:
            return std::abs(q - p);
        case Kind::Arc:
            return radius * std::abs(theta1 - theta0);
        case Kind::Ray:
            return len;
    }
    return 0.0;
}

ContourPath::ContourPath(std::vector<PathSegment> segs, OrientationTag tag,
                         Support K, double c, double r_trunc)
    : segments(std::move(segs)),
      orientation(tag),
      encircled(K),
      clearance(c),
      r_truncation(r_trunc) {
    const double r_edge = r_trunc > 0 ? r_trunc * (1.0 - 1e-6) : 0.0;
    for (size_t i = 0; i + 1 < segments.size(); ++i) {
        const cplx e = segments[i].end();
        const cplx s = segments[i + 1].start();
        if (std::abs(e - s) <= 1e-10) continue;
        if (r_trunc > 0 && std::abs(e.real()) >= r_edge && std::abs(s.real()) >= r_edge)
            continue;  // gap across a truncation boundary
        std::ostringstream os;
        os << "contour segments " << i << " and " << i + 1
           << " are not endpoint-continuous";
        throw degenerate_path_error(os.str());
    }
    // Path must keep the declared clearance from the encircled finite part.
    if (!encircled.is_empty()) {
        const Support Kc = encircled.closure_extended();
        for (const cplx z : sample(16)) {
            if (Kc.dist_finite(z) < c * (1.0 - 1e-9)) {
                throw degenerate_path_error("contour point violates clearance");
            }
        }
    }
}

ContourPath ContourPath::reversed() const {
    ContourPath r;
    r.orientation = orientation;
    r.encircled = encircled;
    r.clearance = clearance;
    r.r_truncation = r_truncation;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        PathSegment s = *it;
        switch (s.kind) {
            case PathSegment::Kind::Line:
                std::swap(s.p, s.q);
                break;
            case PathSegment::Kind::Arc:
                std::swap(s.theta0, s.theta1);
                break;
            case PathSegment::Kind::Ray:
                s.origin = s.origin + s.dir * s.len;
                s.dir = -s.dir;
                break;
        }
        r.segments.push_back(s);
    }
    return r;
}

double ContourPath::length() const {
    double L = 0.0;
    for (const auto& s : segments) L += s.length();
    return L;
}

std::vector<cplx> ContourPath::sample(int m) const {
    std::vector<cplx> pts;
    pts.reserve(segments.size() * m);
    for (const auto& s : segments)
        for (int i = 0; i < m; ++i)
            pts.push_back(s.point((i + 0.5) / m));
    return pts;
}

std::string ContourPath::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& s : segments) {
        if (!first) os << ",";
        first = false;
        switch (s.kind) {
            case PathSegment::Kind::Line:
                os << "{\"type\":\"line\",\"p\":[" << s.p.real() << "," << s.p.imag()
                   << "],\"q\":[" << s.q.real() << "," << s.q.imag() << "]}";
                break;
            case PathSegment::Kind::Arc:
                os << "{\"type\":\"arc\",\"center\":[" << s.center.real() << ","
                   << s.center.imag() << "],\"radius\":" << s.radius
                   << ",\"theta0\":" << s.theta0 << ",\"theta1\":" << s.theta1 << "}";
                break;
            case PathSegment::Kind::Ray:
                os << "{\"type\":\"ray\",\"origin\":[" << s.origin.real() << ","
                   << s.origin.imag() << "],\"dir\":[" << s.dir.real() << ","
                   << s.dir.imag() << "],\"len\":" << s.len << "}";
                break;
        }
    }
    os << "]";
    return os.str();
}

namespace {

// Clockwise semicircle split into two quarter arcs (quadrature accuracy
// wants <= pi/2 of turning per segment).
void push_arc_cw(std::vector<PathSegment>& v, cplx center, double r, double th0,
                 double th1) {
    const double mid = 0.5 * (th0 + th1);
    v.push_back(PathSegment::arc(center, r, th0, mid));
    v.push_back(PathSegment::arc(center, r, mid, th1));
}

}  // namespace

ContourPath build_contour(const Support& K0, double c, double R_max) {
    if (!(c > 0.0)) throw precondition_error("build_contour needs c > 0");
    const Support K = K0.closure_extended();
    if (K.is_empty()) throw unsupported_support_error("cannot encircle the empty support");

    std::vector<PathSegment> segs;
    const cplx ic(0.0, c);

    auto need_R = [&](double finite_edge) {
        if (!(R_max > 0.0))
            throw degenerate_path_error("unbounded support needs R_max > 0");
        if (R_max <= 1.0 / c || R_max <= finite_edge + c)
            throw degenerate_path_error("R_max too small: degenerate truncated path");
    };

    switch (K.kind) {
        case SupportKind::Compact: {
            const double a = K.a, b = K.b;
            if (b > a) segs.push_back(PathSegment::line(a + ic, b + ic));
            push_arc_cw(segs, cplx(b, 0), c, kPi / 2, -kPi / 2);
            if (b > a) segs.push_back(PathSegment::line(b - ic, a - ic));
            push_arc_cw(segs, cplx(a, 0), c, -kPi / 2, -3 * kPi / 2);
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport, K, c);
        }
        case SupportKind::RightRay: {
            const double a = K.a;
            need_R(a);
            const double L = R_max - a;
            segs.push_back(PathSegment::ray(cplx(R_max, -c), cplx(-1, 0), L));
            push_arc_cw(segs, cplx(a, 0), c, -kPi / 2, -3 * kPi / 2);
            segs.push_back(PathSegment::ray(cplx(a, c), cplx(1, 0), L));
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport,
                               K, c, R_max);
        }
        case SupportKind::LeftRay: {
            const double b = K.b;
            need_R(-b);
            const double L = R_max + b;
            segs.push_back(PathSegment::ray(cplx(-R_max, c), cplx(1, 0), L));
            push_arc_cw(segs, cplx(b, 0), c, kPi / 2, -kPi / 2);
            segs.push_back(PathSegment::ray(cplx(b, -c), cplx(-1, 0), L));
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport,
                               K, c, R_max);
        }
        case SupportKind::FullLine: {
            need_R(0.0);
            segs.push_back(PathSegment::ray(cplx(-R_max, c), cplx(1, 0), 2 * R_max));
            segs.push_back(PathSegment::ray(cplx(R_max, -c), cplx(-1, 0), 2 * R_max));
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport,
                               K, c, R_max);
        }
        case SupportKind::PointPlusInf: {
            need_R(1.0 / c);
            const double e = 1.0 / c;
            const double L = R_max - e;
            segs.push_back(PathSegment::ray(cplx(R_max, -c), cplx(-1, 0), L));
            segs.push_back(PathSegment::line(cplx(e, -c), cplx(e, c)));
            segs.push_back(PathSegment::ray(cplx(e, c), cplx(1, 0), L));
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport,
                               K, c, R_max);
        }
        case SupportKind::PointMinusInf: {
            need_R(1.0 / c);
            const double e = -1.0 / c;
            const double L = R_max + e;
            segs.push_back(PathSegment::ray(cplx(-R_max, c), cplx(1, 0), L));
            segs.push_back(PathSegment::line(cplx(e, c), cplx(e, -c)));
            segs.push_back(PathSegment::ray(cplx(e, -c), cplx(-1, 0), L));
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport,
                               K, c, R_max);
        }
        case SupportKind::PairPmInf: {
            need_R(1.0 / c);
            const double e = 1.0 / c;
            const double L = R_max - e;
            segs.push_back(PathSegment::ray(cplx(R_max, -c), cplx(-1, 0), L));
            segs.push_back(PathSegment::line(cplx(e, -c), cplx(e, c)));
            segs.push_back(PathSegment::ray(cplx(e, c), cplx(1, 0), L));
            segs.push_back(PathSegment::ray(cplx(-R_max, c), cplx(1, 0), L));
            segs.push_back(PathSegment::line(cplx(-e, c), cplx(-e, -c)));
            segs.push_back(PathSegment::ray(cplx(-e, -c), cplx(-1, 0), L));
            return ContourPath(std::move(segs), OrientationTag::ClockwiseAroundSupport,
                               K, c, R_max);
        }
        default:
            throw unsupported_support_error("build_contour: unsupported support kind " +
                                            K.to_string());
    }
}

ContourPath build_gamma_komatsu(double a, double c, double alpha, double beta,
                                double R_max) {
    if (!(c < a)) throw precondition_error("gamma_komatsu needs c < a");
    if (!(alpha > -kPi / 2 && alpha < 0.0))
        throw precondition_error("gamma_komatsu needs alpha in (-pi/2, 0)");
    if (!(beta > 0.0 && beta < kPi / 2))
        throw precondition_error("gamma_komatsu needs beta in (0, pi/2)");
    if (!(R_max > 0.0)) throw degenerate_path_error("gamma_komatsu needs R_max > 0");

    const cplx da(std::cos(alpha), std::sin(alpha));
    const cplx db(std::cos(beta), std::sin(beta));
    std::vector<PathSegment> segs;
    segs.push_back(PathSegment::ray(cplx(c, 0) + da * R_max, -da, R_max));
    segs.push_back(PathSegment::ray(cplx(c, 0), db, R_max));
    ContourPath path;
    path.segments = std::move(segs);
    path.orientation = OrientationTag::KomatsuLeftToRight;
    path.encircled = Support::right_ray(a);
    path.clearance = a - c;
    path.r_truncation = R_max;
    return path;
}

}  // namespace hyperflux

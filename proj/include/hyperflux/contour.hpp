#pragma once

#include <string>
#include <vector>

#include "hyperflux/support.hpp"

namespace hyperflux {

// Oriented path pieces.  Every segment is parametrised over t in [0,1];
// point(t) and derivative(t) feed the quadrature engine directly.
struct PathSegment {
    enum class Kind { Line, Arc, Ray };

    Kind kind = Kind::Line;
    // Line: p -> q.
    cplx p, q;
    // Arc: center + radius * e^{i theta}, theta from theta0 to theta1
    // (theta1 < theta0 means clockwise traversal).
    cplx center;
    double radius = 0.0;
    double theta0 = 0.0, theta1 = 0.0;
    // Ray: origin + t * len * dir, dir unimodular, len > 0 finite.
    cplx origin, dir;
    double len = 0.0;

    static PathSegment line(cplx p, cplx q);
    static PathSegment arc(cplx center, double radius, double theta0, double theta1);
    static PathSegment ray(cplx origin, cplx dir, double len);

    cplx point(double t) const;
    cplx derivative(double t) const;
    cplx start() const { return point(0.0); }
    cplx end() const { return point(1.0); }
    double length() const;
};

enum class OrientationTag { ClockwiseAroundSupport, KomatsuLeftToRight };

// Piecewise path.  Consecutive segments must be endpoint-continuous except
// where both meet a truncation boundary |re z| ~ r_truncation (unbounded
// supports are integrated over truncated rays).
struct ContourPath {
    std::vector<PathSegment> segments;
    OrientationTag orientation = OrientationTag::ClockwiseAroundSupport;
    Support encircled = Support::empty();
    double clearance = 0.0;
    double r_truncation = 0.0;  // 0 when the path is genuinely closed

    ContourPath() = default;
    ContourPath(std::vector<PathSegment> segs, OrientationTag tag, Support K,
                double c, double r_trunc = 0.0);

    ContourPath reversed() const;
    double length() const;
    // Path points sampled uniformly in parameter, m per segment.
    std::vector<cplx> sample(int m_per_segment) const;

    std::string to_json() const;
};

// Clockwise boundary of U_{1/c}(K).  R_max truncates rays for unbounded K
// and is ignored for real compact K.
ContourPath build_contour(const Support& K, double c, double R_max = 0.0);

// Komatsu's path: ray in from R_max * e^{i alpha} to the real point c < a,
// then out to R_max * e^{i beta}; alpha in (-pi/2, 0), beta in (0, pi/2).
ContourPath build_gamma_komatsu(double a, double c, double alpha, double beta,
                                double R_max);

}  // namespace hyperflux

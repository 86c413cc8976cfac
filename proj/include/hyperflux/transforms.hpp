#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hyperflux/hyperfunction.hpp"

namespace hyperflux {

enum class Domain { Entire, LowerHalf, UpperHalf, RightHalf, LeftHalf };

bool domain_contains(Domain d, cplx z);
Domain domain_intersect(Domain a, Domain b);
std::string domain_name(Domain d);

// A holomorphic function produced by a transform, with its domain,
// provenance and a sample cache shared across copies.
class TransformFunction {
  public:
    struct Sample {
        Value value;
        double err = 0.0;
    };

    TransformFunction() = default;
    TransformFunction(std::function<Sample(cplx)> eval, Domain dom, ValueSpace space,
                      std::string provenance);

    Value operator()(cplx zeta) const { return eval_full(zeta).value; }
    Sample eval_full(cplx zeta) const;

    Domain domain() const { return dom_; }
    const ValueSpace& space() const { return space_; }
    const std::string& provenance() const { return prov_; }

    static TransformFunction constant(Value v, Domain dom = Domain::Entire);
    // Pointwise sum/difference/product on intersected domains.
    friend TransformFunction operator-(const TransformFunction& a,
                                       const TransformFunction& b);

  private:
    std::function<Sample(cplx)> eval_;
    Domain dom_ = Domain::Entire;
    ValueSpace space_ = ValueSpace::scalar();
    std::string prov_;
    struct Cache {
        std::map<std::pair<double, double>, Sample> m;
        std::mutex mu;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// ---------------------------------------------------------------------------
// Germ / range space tags with their weights and test regions.

struct GermSpaceTag {
    enum class Kind {
        FO_compact, FO_right, FO_left, FO_plus_inf, FO_minus_inf, FO_pm_inf,
        LO_compact, LO_right, LO_left, LO_plus_inf, LO_minus_inf,
        LG_zero_inf, LG_inf,
    };

    Kind kind = Kind::FO_compact;
    double a = 0.0, b = 0.0;

    static GermSpaceTag fo_compact(double a, double b) { return {Kind::FO_compact, a, b}; }
    static GermSpaceTag fo_right(double a) { return {Kind::FO_right, a, 0}; }
    static GermSpaceTag fo_left(double b) { return {Kind::FO_left, 0, b}; }
    static GermSpaceTag fo_plus_inf() { return {Kind::FO_plus_inf, 0, 0}; }
    static GermSpaceTag fo_minus_inf() { return {Kind::FO_minus_inf, 0, 0}; }
    static GermSpaceTag fo_pm_inf() { return {Kind::FO_pm_inf, 0, 0}; }
    static GermSpaceTag lo_compact(double a, double b) { return {Kind::LO_compact, a, b}; }
    static GermSpaceTag lo_right(double a) { return {Kind::LO_right, a, 0}; }
    static GermSpaceTag lo_left(double b) { return {Kind::LO_left, 0, b}; }
    static GermSpaceTag lo_plus_inf() { return {Kind::LO_plus_inf, 0, 0}; }
    static GermSpaceTag lo_minus_inf() { return {Kind::LO_minus_inf, 0, 0}; }
    static GermSpaceTag lg_zero_inf() { return {Kind::LG_zero_inf, 0, 0}; }
    static GermSpaceTag lg_inf() { return {Kind::LG_inf, 0, 0}; }

    bool in_region(cplx z, int k) const;
    // weighted value = seminorm(f(z)) * exp(-weight_exponent(z, k))
    double weight_exponent(cplx z, int k) const;
    // radial coordinate used for growth-slope fits
    double radial(cplx z) const;
    std::string name() const;

    // support-addition of tags (range of a transform product)
    static GermSpaceTag combine(const GermSpaceTag& s, const GermSpaceTag& t);
};

// ---------------------------------------------------------------------------
// Transforms.

// F_K for real compact K: zeta -> clockwise contour integral of
// F(z) e^{-i z zeta} over the stadium around K.  Entire in zeta.
TransformFunction fourier_compact(const Hyperfunction& h, QuadConfig cfg = {},
                                  double clearance = 0.5);

// F_{[a,inf]} / F_{[-inf,b]} over the truncated half-stadium; defined on the
// lower (right supports) resp. upper (left supports) half-plane.
TransformFunction fourier_halfline(const Hyperfunction& h, QuadConfig cfg = {},
                                   double clearance = 0.5);

// L = F(-i .): right supports map to the right half-plane, compact to C.
TransformFunction laplace(const Hyperfunction& h, QuadConfig cfg = {},
                          double clearance = 0.5);

// ---------------------------------------------------------------------------
// Inverse Fourier transform on FO_{[a,b]}.

struct InverseParams {
    double delta = 0.5;        // height of the zeta integration line
    double delta_prime = 0.25; // margin parameter of the surjectivity proof
    int n = 2;                 // working strip index, c_tilde in (1/(2n), 1/n)
    double c_tilde = 0.0;      // 0 -> 0.75/n
    int fo_k = 8;              // certified |g| <= C e^{|z|/k + H_K(im z)}
    double fo_C = 0.0;         // 0 -> estimated by sampling along the line
    double tol = 1e-9;

    double effective_c_tilde() const { return c_tilde > 0 ? c_tilde : 0.75 / n; }
};

// nu(phi) = -(1/2pi) int_{im zeta = -delta} g(zeta)
//              int_{im w = c_tilde} phi(w) e^{i w zeta} dw  dzeta
// computed as a nested quadrature over truncated straight lines.
Value inverse_functional_nu(const TransformFunction& g, const TestFunction& phi,
                            const Support& K, const InverseParams& p,
                            QuadConfig cfg = {});

// Hyperfunction with support [a,b] whose image under fourier_compact is g.
// The defining function is the Gaussian-kernel standard representative of
// the inverting functional.
Hyperfunction inverse_fourier_compact(const TransformFunction& g, double a, double b,
                                      InverseParams p = {}, QuadConfig cfg = {});

// ---------------------------------------------------------------------------
// Range membership and germ equivalence.

struct RangeGrid {
    int n_radial = 41;
    int n_side = 9;
};

std::vector<SeminormReport> range_membership(const TransformFunction& g,
                                             const GermSpaceTag& tag, int k_max,
                                             double R, const RangeGrid& grid = {});

enum class GermVerdict { Equivalent, Distinct, Inconclusive };
std::string germ_verdict_name(GermVerdict v);

struct GermReport {
    GermVerdict verdict = GermVerdict::Inconclusive;
    std::vector<SeminormReport> reports;  // one per k, outer-region sups
    double decay_slope = 0.0;             // unweighted fit of log|g1-g2|
};

// Finite-k, finite-R heuristic for equality of germs at +-infinity:
// equivalent iff for every k <= k_max the weighted sup over the outer half
// of the region is below tol with non-positive slope.
GermReport germ_equivalent_heuristic(const TransformFunction& g1,
                                     const TransformFunction& g2,
                                     const GermSpaceTag& tag, int k_max, double R,
                                     double tol, const RangeGrid& grid = {});

// ---------------------------------------------------------------------------
// Asymptotic transform classes and decomposition.

struct AsymptoticClass {
    TransformFunction representative;
    GermSpaceTag modulo;  // the germ space the class is taken modulo
};

// Laplace transform of a hyperfunction supported in [a, inf) presented by an
// Oexp representative, viewed modulo LO_{infty}.
AsymptoticClass asymptotic_laplace_class(const Hyperfunction& h, QuadConfig cfg = {});

// Constructive split of a structured hyperfunction at the cut j; point mass
// exactly at j goes to the left part.
std::pair<Hyperfunction, Hyperfunction> decompose_at(const Hyperfunction& h, double j);

// Full-line transform of a split h = h_left + h_right at the cut a:
// (F_{[-inf,a]}(h_left) on im > 0, -F_{[a,inf]}(h_right) on im < 0).
std::pair<TransformFunction, TransformFunction> fourier_fullline(
    const Hyperfunction& h_left, const Hyperfunction& h_right, QuadConfig cfg = {});

}  // namespace hyperflux

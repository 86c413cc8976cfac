#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperflux/quadrature.hpp"
#include "hyperflux/support.hpp"
#include "hyperflux/value.hpp"

namespace hyperflux {

// Structural metadata of a defining function.  A hyperfunction built from
// the library constructors is a finite sum of pole parts and Cauchy-kernel
// density parts; this is what makes decomposition across a support cut
// constructive.  Opaque hyperfunctions only carry an evaluator.
struct PolePart {
    double loc = 0.0;
    int order = 1;          // F(z) += coef * (z - loc)^{-order}
    Value coef;
};

struct DensityPart {
    std::function<Value(double)> f;
    double a = 0.0, b = 0.0;
    int order = 1;          // F(z) += scale/(2 pi i) * int_a^b f(t) (t-z)^{-order} dt
    cplx scale = 1.0;
};

struct Structure {
    std::vector<PolePart> poles;
    std::vector<DensityPart> densities;
    bool opaque = false;

    bool is_opaque() const { return opaque; }
};

// Evaluation guard: defining functions blow up at the support.
inline constexpr double kSupportCollar = 1e-8;

class Hyperfunction {
  public:
    Hyperfunction() = default;

    // Structured constructor: evaluator derived from the parts.
    Hyperfunction(Support supp, ValueSpace space, Structure str,
                  GrowthCertificate growth, QuadConfig density_cfg = {});

    // Opaque constructor.
    static Hyperfunction from_evaluator(std::function<Value(cplx)> F, Support supp,
                                        ValueSpace space, GrowthCertificate growth);

    // Defining function at z (off an eps-collar of the support).
    Value F(cplx z) const;

    const Support& support() const { return supp_; }
    const ValueSpace& space() const { return space_; }
    const GrowthCertificate& growth() const { return growth_; }
    const Structure& structure() const { return str_; }
    const QuadConfig& density_cfg() const { return density_cfg_; }

    Hyperfunction shifted(double s) const;
    Hyperfunction scaled(cplx lambda) const;
    friend Hyperfunction add(const Hyperfunction& h1, const Hyperfunction& h2);

  private:
    Support supp_;
    ValueSpace space_ = ValueSpace::scalar();
    GrowthCertificate growth_ = GrowthCertificate::exponential_type(0.0);
    Structure str_;
    QuadConfig density_cfg_;
    std::function<Value(cplx)> F_opaque_;
};

// Dirac mass at a:  F(z) = weight * (-1/(2 pi i (z-a))).
Hyperfunction dirac(double a, Value weight = Value::scalar(1.0));

// Embedding of an integrable density on [a,b] via its Cauchy transform.
Hyperfunction cauchy_embed(std::function<Value(double)> f, double a, double b,
                           QuadConfig cfg = {});
Hyperfunction cauchy_embed_scalar(std::function<cplx(double)> f, double a, double b,
                                  QuadConfig cfg = {});

Hyperfunction shift(const Hyperfunction& h, double s);
Hyperfunction scale(const Hyperfunction& h, cplx lambda);
Hyperfunction add(const Hyperfunction& h1, const Hyperfunction& h2);

// Rapidly decreasing holomorphic test function on closure(U_n(K)).
struct TestFunction {
    std::function<cplx(cplx)> eval;
    int strip_n = 2;          // holomorphic and continuous on closure(U_n(K))
    double norm_bound = 1.0;  // declared sup |phi(z)| e^{|re z|/n}

    cplx operator()(cplx z) const { return eval(z); }

    // amp * exp(-((w - center)/width)^2), entire and Gaussian-decaying.
    static TestFunction gaussian(double center, double width = 1.0, cplx amp = 1.0);
    // Gaussian times a monomial, for pairing batteries.
    static TestFunction gaussian_poly(double center, int degree, double width = 1.0,
                                      cplx amp = 1.0);
};

// Duality pairing <H_K([F]), phi> = clockwise contour integral of F * phi
// around the support.  For unbounded supports the ray truncation comes from
// the growth certificate against the test function decay.
struct PairResult {
    Value value;
    double err = 0.0;
};
PairResult pair_full(const Hyperfunction& h, const TestFunction& phi, int n = 0,
                     QuadConfig cfg = {}, double clearance = 0.0);
Value pair(const Hyperfunction& h, const TestFunction& phi, int n = 0,
           QuadConfig cfg = {}, double clearance = 0.0);

// Gaussian-kernel standard representative Psi_K([F])(z); valid for compact
// real supports, rapidly decreasing in |re z| on horizontal strips.
std::function<Value(cplx)> standard_representative(const Hyperfunction& h,
                                                   QuadConfig cfg = {});

// Richardson-extrapolated boundary jump F(x+i eps) - F(x-i eps), eps -> 0.
Value boundary_jump(const Hyperfunction& h, double x,
                    const std::vector<double>& eps_seq = {});

// Weighted sup-seminorm sampling over a strip grid.
struct SeminormGrid {
    double re_max = 40.0;
    int n_re = 81;
    int n_im = 9;
};

struct SeminormReport {
    std::string space_tag;
    int k = 1;
    std::string grid_desc;
    double sampled_sup = 0.0;
    double growth_slope = 0.0;
    bool consistent = true;  // growth_slope <= slope_tol
    int points = 0;
};

// sup over sampled S_n(K) of seminorm(F(z)) e^{-|re z|/n} plus a fitted
// exponential rate of the weighted values against |re z|.
SeminormReport seminorm_estimate(const std::function<Value(cplx)>& F,
                                 const Support& K, int n,
                                 const SeminormGrid& grid = {});

// Least-squares slope of log(values) against the coordinate xs (max per bin).
double fit_growth_slope(const std::vector<double>& xs, const std::vector<double>& values);

}  // namespace hyperflux

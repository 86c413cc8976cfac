#pragma once

#include "hyperflux/transforms.hpp"

namespace hyperflux {

// Nodes in a truncated sector {rho e^{i psi} : r <= rho <= R, |psi| <= phi}.
struct SectorGrid {
    double r = 0.5;
    double phi = 1.0471975511965976;  // pi/3
    double R = 40.0;
    int n_rho = 12;
    int n_psi = 5;

    std::vector<cplx> nodes() const;
    bool contains(cplx z) const;
};

// Exponentially decreasing representative of type -inf for a compactly
// supported hyperfunction (the Gaussian-kernel standard representative),
// with its certificate and the sampled H_{-inf} seminorms for n <= n_max.
struct TypeMinusInfinityRep {
    std::function<Value(cplx)> eval;
    GrowthCertificate cert;           // TypeMinusInfinity with sampled C
    std::vector<SeminormReport> seminorms;
};
TypeMinusInfinityRep to_type_minus_infinity(const Hyperfunction& h,
                                            QuadConfig cfg = {}, int n_max = 4);

// Langenbruch's Laplace transform: integral over gamma_K of g(zeta)
// e^{-z zeta} dzeta, K = [0,inf] or {inf}, clockwise.
TransformFunction langenbruch_laplace(std::function<Value(cplx)> g,
                                      GrowthCertificate cert, const Support& K,
                                      ValueSpace space = ValueSpace::scalar(),
                                      QuadConfig cfg = {}, double clearance = 0.5);

// Komatsu's Laplace transform along Gamma_a, sampled on a zeta grid.  The
// traversal runs from inf e^{i alpha} through c to inf e^{i beta}, which is
// the normalisation with L_Kom(dirac representative, a=0) = +1.
struct KomatsuSample {
    cplx zeta;
    Value value;
    double err = 0.0;
    bool flagged = false;  // divergent exponent at this node
};
struct KomatsuParams {
    double c_offset = 1.0;  // vertex at a - c_offset
    // +-pi/8 keeps the zeta-side convergence sector wide enough for the
    // default comparison window |arg zeta| <= pi/3
    double alpha = -0.39269908169872414;
    double beta = 0.39269908169872414;
};
std::vector<KomatsuSample> komatsu_laplace(std::function<Value(cplx)> F,
                                           GrowthCertificate cert, double a,
                                           const std::vector<cplx>& zeta_nodes,
                                           ValueSpace space = ValueSpace::scalar(),
                                           KomatsuParams kp = {}, QuadConfig cfg = {});

// Local Laplace transform L_T(f)(zeta) = int_0^T f(t) e^{-t zeta} dt.
std::vector<KomatsuSample> classical_laplace_oracle(std::function<Value(double)> f,
                                                    double T,
                                                    const std::vector<cplx>& zeta_nodes,
                                                    ValueSpace space = ValueSpace::scalar(),
                                                    QuadConfig cfg = {});

// I_0 consistency: Langenbruch's transform of the type -inf representative
// against our Laplace transform; the difference must be a germ in LO_{inf}.
struct I0Report {
    GermReport germ;
    double max_probe_diff = 0.0;   // max |difference| on the probe nodes
    double max_probe_err = 0.0;
};
I0Report consistency_I0(const Hyperfunction& h, QuadConfig cfg = {}, int k_max = 3,
                        double R = 40.0, double tol = 1e-6);

// Three-transform chain on a density supported in [0, T]: ours, Komatsu's
// and the classical oracle agree pointwise for compact support.
struct ChainRow {
    cplx zeta;
    Value v_ours, v_komatsu, v_classical;
    double err_ours = 0.0, err_komatsu = 0.0, err_classical = 0.0;
    double max_pairwise_dev = 0.0;
    bool flagged = false;
};
struct ChainReport {
    std::vector<ChainRow> rows;
    double max_dev = 0.0;
};
ChainReport consistency_chain(std::function<Value(double)> f, double T,
                              const std::vector<cplx>& zeta_nodes,
                              ValueSpace space = ValueSpace::scalar(),
                              QuadConfig cfg = {});

}  // namespace hyperflux

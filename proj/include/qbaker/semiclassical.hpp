#ifndef QBAKER_SEMICLASSICAL_HPP
#define QBAKER_SEMICLASSICAL_HPP

#include <vector>

#include "qbaker/coherent.hpp"
#include "qbaker/quantum_baker.hpp"

namespace qbaker {

// Which limit of the baker family the approximation targets: n fixed
// (theta = 0), n a fixed fraction of N, or n = N - r with the r momentum
// bits fixed (theta = 1, the stochastic multi-hump regime).
enum class RegimeTag { ThetaZero, ThetaMid, ThetaOne };

struct SemiclassicalRegime {
    RegimeTag tag;
    int momentum_bits = 0;  // r, meaningful for ThetaOne only

    static SemiclassicalRegime theta_zero() { return {RegimeTag::ThetaZero, 0}; }
    static SemiclassicalRegime theta_mid() { return {RegimeTag::ThetaMid, 0}; }
    static SemiclassicalRegime theta_one(int r) { return {RegimeTag::ThetaOne, r}; }
};

// Single-hump propagator approximation for the theta < 1 regimes, written
// out with the floor-branch phases explicit. Valid for interior points off
// the lines a_q = 1/2 and b_p = 1/2.
Cx vanvleck_explicit(const PhasePoint& a, const PhasePoint& b, int D);

// Variant carrying the extra damping factor (1 - |2 a_q - b_q - floor(2 a_q)|/5);
// coincides with vanvleck_explicit on the hump and differs by at most that
// factor off it.
Cx vanvleck_damped(const PhasePoint& a, const PhasePoint& b, int D);

// Same propagator built from the generating function: constant positive
// square-root prefactor sqrt(4/5), exp[pi D W] and Gaussian endpoint factors.
Cx vanvleck_generic(const PhasePoint& a, const PhasePoint& b, int D);

// theta = 1 propagator: coherent sum over the 2R momentum humps, evaluated
// as the literal truncated lattice sum. kappa_window <= 0 picks the default
// half-width 4R; the window must cover at least 2R and the edge slabs are
// required to be negligible (< 1e-12 of the total), otherwise the window is
// reported as too small.
Cx stochastic_propagator(const PhasePoint& a, const PhasePoint& b, int D, int r,
                         int kappa_window = -1);

// Hump amplitude Psi_kappa; real, sign included. Within 1e-9 of a singular
// momentum value a_p = (m+1/2)/R the removable singularity is evaluated as
// the symmetric two-point average at a_p -/+ 1e-6.
double psi_kappa(const PhasePoint& a, int r, int kappa);

// True when psi_kappa at this a would take the singular-limit branch.
bool psi_kappa_limit_branch(const PhasePoint& a, int r);

struct HumpDescriptor {
    int kappa;
    double b1;           // hump center, position coordinate
    double b2;           // hump center, momentum coordinate
    double weight;       // Psi_kappa^2
    bool is_classical;   // kappa = floor(2 a_q) R, the classical image hump
    bool limit_branch;   // weight came from the singular-limit evaluation
};

// The 2R humps of the theta = 1 regime, kappa strictly inside
// (-a_p R, 2R - a_p R). Weights sum to 1. Integral a_p R would place a hump
// on the b_p = 0 seam and is rejected.
std::vector<HumpDescriptor> hump_catalog(const PhasePoint& a, int r);

// Exact propagator versus the regime's approximation over a cell-centered
// grid of endpoints b.
struct ComparisonReport {
    PhasePoint a;
    BakerFamilyParams params;
    SemiclassicalRegime regime;
    int nq;
    int np;
    double eps;
    int kappa_window;
    bool exact_normalization;

    std::vector<double> b1s;
    std::vector<double> b2s;
    std::vector<double> exact_sq;  // |<b|B|a>|^2, row-major over (i, k)
    std::vector<double> semi_sq;

    double linf_error;
    double l2_error;

    std::vector<HumpDescriptor> humps;
    std::vector<double> hump_exact_sq;
    std::vector<double> hump_semi_sq;
    std::vector<double> hump_rel_error;
};

ComparisonReport compare_exact_semiclassical(const PhasePoint& a,
                                             const BakerFamilyParams& params,
                                             const SemiclassicalRegime& regime,
                                             int nq, int np,
                                             double eps = kDefaultEps,
                                             int kappa_window = -1,
                                             bool exact_normalization = false);

}  // namespace qbaker

#endif

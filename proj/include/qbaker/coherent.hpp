#ifndef QBAKER_COHERENT_HPP
#define QBAKER_COHERENT_HPP

#include <complex>
#include <vector>

#include "qbaker/torus_hilbert.hpp"

namespace qbaker {

inline constexpr double kDefaultEps = 1e-14;

// Phase-space point, complex coordinate a = q + i p.
struct PhasePoint {
    double q;
    double p;

    Cx a() const { return Cx{q, p}; }
    static PhasePoint from(Cx a) { return PhasePoint{a.real(), a.imag()}; }
};

struct ThetaArgs {
    Cx z;
    Cx tau;           // Im(tau) > 0
    double eps = kDefaultEps;
};

// theta_0[z|tau] = sum_mu exp[i pi (tau mu^2 + (2z+1) mu)], truncated once the
// first omitted term magnitude bound exp[-pi Im(tau) M^2] exp[2 pi |Im z| M]
// drops below eps.
Cx theta0(const ThetaArgs& args);

// Gaussian wave packet wrapped onto the torus, position amplitudes
//   amps[j] = (2/D)^{1/4} sum_mu exp[-(pi D/2)(|a|^2 - a^2)
//                                   - pi D (q_j - a + mu)^2 + i pi mu],
// unity-normalization convention (no 1/N factor). Requires even D.
StateVector coherent_state(const TorusSpace& s, const PhasePoint& a,
                           double eps = kDefaultEps);

// Squared norm of the unity-convention packet, evaluated through the theta
// product N^2 = theta_0[qD | iD/2] theta_0[pD | iD/2]. Requires even D.
double normalization_sq(const TorusSpace& s, const PhasePoint& a,
                        double eps = kDefaultEps);

// Cell-centered phase-space grid of |<a_ik|psi>|^2 with a_ik at
// q_i = (i+1/2)/nq, p_k = (k+1/2)/np. values is row-major over (i, k).
struct HusimiGrid {
    TorusSpace space;
    int nq;
    int np;
    double eps;
    std::vector<double> qs;
    std::vector<double> ps;
    std::vector<double> values;

    double at(int i, int k) const { return values[static_cast<std::size_t>(i) * np + k]; }
};

HusimiGrid husimi(const StateVector& state, int nq, int np,
                  double eps = kDefaultEps);

}  // namespace qbaker

#endif

#include "qbaker/coherent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace qbaker {

namespace {

constexpr double kPi = std::numbers::pi;

void check_eps(double eps, const char* who) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument(std::string(who) + ": eps must lie in (0,1)");
}

void check_even_dim(const TorusSpace& s, const char* who) {
    if (s.dim % 2 != 0)
        throw std::invalid_argument(std::string(who) +
                                    ": unity-normalization convention needs even dim");
}

}  // namespace

Cx theta0(const ThetaArgs& args) {
    check_eps(args.eps, "theta0");
    const double im_tau = args.tau.imag();
    if (!(im_tau > 0.0)) throw std::domain_error("theta0: Im(tau) must be positive");
    const double im_z = std::abs(args.z.imag());
    const double L = std::log(1.0 / args.eps);
    // smallest M with exp[-pi Im(tau) M^2 + 2 pi |Im z| M] <= eps
    const double m_real = (im_z + std::sqrt(im_z * im_z + im_tau * L / kPi)) / im_tau;
    const long M = static_cast<long>(std::ceil(std::max(1.0, m_real))) + 1;

    const Cx ipi{0.0, kPi};
    Cx acc{0.0, 0.0};
    for (long mu = -M; mu <= M; ++mu) {
        const double dmu = static_cast<double>(mu);
        acc += std::exp(ipi * (args.tau * dmu * dmu + (2.0 * args.z + 1.0) * dmu));
    }
    return acc;
}

StateVector coherent_state(const TorusSpace& s, const PhasePoint& a, double eps) {
    check_eps(eps, "coherent_state");
    check_even_dim(s, "coherent_state");
    const int D = s.dim;
    const Cx ca = a.a();

    const int M = std::max(
        3L, static_cast<long>(std::ceil(std::sqrt(std::log(1.0 / eps) / (kPi * D)))) + 2);
    const double prefactor = std::pow(2.0 / D, 0.25);
    // gauge term; its real part cancels against the packet term so every
    // summand exponent has non-positive real part
    const Cx gauge = -(kPi * D / 2.0) * (std::norm(ca) - ca * ca);

    StateVector out(s);
    for (int j = 0; j < D; ++j) {
        const double qj = s.position_value(j);
        Cx acc{0.0, 0.0};
        for (int mu = -M; mu <= M; ++mu) {
            const Cx w = qj - ca + static_cast<double>(mu);
            acc += std::exp(gauge - kPi * D * w * w + Cx{0.0, kPi * mu});
        }
        out.amps[j] = prefactor * acc;
    }
    return out;
}

double normalization_sq(const TorusSpace& s, const PhasePoint& a, double eps) {
    check_eps(eps, "normalization_sq");
    check_even_dim(s, "normalization_sq");
    const double D = static_cast<double>(s.dim);
    const Cx tau{0.0, D / 2.0};
    const Cx nsq = theta0({Cx{a.q * D, 0.0}, tau, eps}) * theta0({Cx{a.p * D, 0.0}, tau, eps});
    if (std::abs(nsq.imag()) > 1e-9)
        throw std::runtime_error("normalization_sq: theta product has a large imaginary residue");
    return nsq.real();
}

HusimiGrid husimi(const StateVector& state, int nq, int np, double eps) {
    check_eps(eps, "husimi");
    if (nq < 1 || np < 1) throw std::invalid_argument("husimi: grid sizes must be positive");
    check_even_dim(state.space, "husimi");

    HusimiGrid g{state.space, nq, np, eps, {}, {}, {}};
    g.qs.resize(nq);
    g.ps.resize(np);
    for (int i = 0; i < nq; ++i) g.qs[i] = (i + 0.5) / nq;
    for (int k = 0; k < np; ++k) g.ps[k] = (k + 0.5) / np;
    g.values.assign(static_cast<std::size_t>(nq) * np, 0.0);

    detail::parallel_for(nq, [&](int i) {
        for (int k = 0; k < np; ++k) {
            const StateVector probe =
                coherent_state(state.space, PhasePoint{g.qs[i], g.ps[k]}, eps);
            g.values[static_cast<std::size_t>(i) * np + k] = std::norm(inner(probe, state));
        }
    });
    return g;
}

}  // namespace qbaker

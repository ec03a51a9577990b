#include "qbaker/semiclassical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbaker/classical.hpp"
#include "parallel.hpp"

namespace qbaker {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Cx kI{0.0, 1.0};

void check_interior(const PhasePoint& pt, const char* who) {
    if (!(pt.q > 0.0 && pt.q < 1.0) || !(pt.p > 0.0 && pt.p < 1.0))
        throw std::invalid_argument(std::string(who) + ": point must be interior to (0,1)^2");
}

int floor2q(const PhasePoint& a, const char* who) {
    if (a.q == 0.5)
        throw std::invalid_argument(std::string(who) + ": a_q = 1/2 is on the branch line");
    return static_cast<int>(std::floor(2.0 * a.q));
}

void check_vanvleck_domain(const PhasePoint& a, const PhasePoint& b, int D, const char* who) {
    if (D < 2) throw std::invalid_argument(std::string(who) + ": D must be >= 2");
    check_interior(a, who);
    check_interior(b, who);
    if (b.p == 0.5)
        throw std::invalid_argument(std::string(who) + ": b_p = 1/2 is excluded");
}

Cx vanvleck_exponent(const PhasePoint& a, const PhasePoint& b, int D, int x1) {
    const double a1 = a.q, a2 = a.p, b1 = b.q, b2 = b.p;
    const double u = 2.0 * a1 - b1 - x1;
    const double v = a2 - 2.0 * b2 + x1;
    const Cx brace = u * u + v * v +
                     kI * (3.0 * a1 * a2 + 3.0 * b1 * b2 + 4.0 * a1 * b2 - 4.0 * a2 * b1) -
                     2.0 * kI * static_cast<double>(x1) *
                         (a1 + 2.0 * b1 + 2.0 * a2 + b2 - 0.5 * x1);
    return -(kPi * D / 5.0) * brace;
}

int pow2_checked(int r, const char* who) {
    if (r < 0 || r > 20) throw std::invalid_argument(std::string(who) + ": r out of range");
    return 1 << r;
}

double psi_kappa_regular(double a2, int x1, int R, int kappa) {
    const double cos2 = std::cos(kPi * R * a2) * std::cos(kPi * R * a2);
    double acc = 0.0;
    for (int j = 0; j < R; ++j) {
        const double site = (j + 0.5) / R;
        const double s1 = std::sin(kPi * (a2 - site));
        const double s2 = std::sin(0.5 * kPi * (a2 - x1 + static_cast<double>(kappa) / R - site));
        acc += cos2 / (s1 * s2);
    }
    return acc / (2.0 * R * R);
}

constexpr double kPsiSingularWindow = 1e-9;
constexpr double kPsiLimitStep = 1e-6;

bool near_singular_momentum(double a2, int R) {
    const double scaled = a2 * R - 0.5;
    return std::abs(scaled - std::nearbyint(scaled)) < kPsiSingularWindow * R;
}

}  // namespace

Cx vanvleck_explicit(const PhasePoint& a, const PhasePoint& b, int D) {
    check_vanvleck_domain(a, b, D, "vanvleck_explicit");
    const int x1 = floor2q(a, "vanvleck_explicit");
    return std::sqrt(0.8) * std::exp(vanvleck_exponent(a, b, D, x1));
}

Cx vanvleck_damped(const PhasePoint& a, const PhasePoint& b, int D) {
    check_vanvleck_domain(a, b, D, "vanvleck_damped");
    const int x1 = floor2q(a, "vanvleck_damped");
    const double damp = 1.0 - std::abs(2.0 * a.q - b.q - x1) / 5.0;
    return damp * std::sqrt(0.8) * std::exp(vanvleck_exponent(a, b, D, x1));
}

Cx vanvleck_generic(const PhasePoint& a, const PhasePoint& b, int D) {
    check_vanvleck_domain(a, b, D, "vanvleck_generic");
    floor2q(a, "vanvleck_generic");
    const Cx w = generating_W(std::conj(b.a()), a.a());
    // mixed second derivative of W is the constant 4/5; positive root taken
    const Cx exponent =
        kPi * D * w - 0.5 * kPi * D * (std::norm(a.a()) + std::norm(b.a()));
    return std::sqrt(0.8) * std::exp(exponent);
}

Cx stochastic_propagator(const PhasePoint& a, const PhasePoint& b, int D, int r,
                         int kappa_window) {
    if (D < 2 || D % 2 != 0)
        throw std::invalid_argument("stochastic_propagator: D must be even and >= 2");
    check_interior(a, "stochastic_propagator");
    check_interior(b, "stochastic_propagator");
    const int R = pow2_checked(r, "stochastic_propagator");
    if ((D / 2) % R != 0)
        throw std::invalid_argument("stochastic_propagator: 2^r must divide D/2");
    const int x1 = floor2q(a, "stochastic_propagator");
    if (kappa_window <= 0) kappa_window = 4 * R;
    if (kappa_window < 2 * R)
        throw std::invalid_argument("stochastic_propagator: kappa window must cover 2R");

    const double a1 = a.q, a2 = a.p, b1 = b.q, b2 = b.p;
    const Cx c = 2.0 * a.a() - std::conj(b.a()) - static_cast<double>(x1);

    // kappa-independent inner sum over j, plus the kept-bit phase
    std::vector<Cx> inner_jl(static_cast<std::size_t>(R) * 2 * R);
    for (int k = 0; k < R; ++k) {
        for (int l = 0; l < 2 * R; ++l) {
            Cx js{0.0, 0.0};
            for (int j = 0; j < R; ++j)
                js += std::exp((kI * kPi / static_cast<double>(R)) *
                               ((j + 0.5) * (l + 0.5) - 2.0 * (j + 0.5) * (k + 0.5)));
            inner_jl[static_cast<std::size_t>(k) * 2 * R + l] =
                js * std::exp(kI * kPi * static_cast<double>(x1) * (l + 0.5));
        }
    }

    const Cx base_brace =
        kI * (3.0 * a1 * a2 + 3.0 * b1 * b2 + 4.0 * a1 * b2 - 4.0 * a2 * b1) -
        2.0 * kI * static_cast<double>(x1) * (2.0 * a2 + b2);

    Cx total{0.0, 0.0};
    double lo_slab = 0.0, hi_slab = 0.0;
    for (int kappa = -kappa_window; kappa <= kappa_window; ++kappa) {
        const double kr = static_cast<double>(kappa) / R;
        const double v = a2 - 2.0 * b2 + kr;
        const Cx t1 = -(kPi * D / 5.0) *
                      (std::pow(2.0 * a1 - b1 - x1, 2) + v * v + base_brace -
                       2.0 * kI * kr * (a1 + 2.0 * b1 - 0.5 * x1));
        Cx slab{0.0, 0.0};
        for (int k = 0; k < R; ++k) {
            for (int l = 0; l < 2 * R; ++l) {
                const Cx t2 = (2.0 * kPi / 5.0) * c * (2.0 * k - l + 0.5);
                const Cx t3 = -(2.0 * kI * kPi / (5.0 * R)) * (k + 2.0 * l + 1.5) *
                              static_cast<double>(kappa);
                slab += inner_jl[static_cast<std::size_t>(k) * 2 * R + l] *
                        std::exp(t1 + t2 + t3);
            }
        }
        total += slab;
        if (kappa == -kappa_window) lo_slab = std::abs(slab);
        if (kappa == kappa_window) hi_slab = std::abs(slab);
    }
    total /= std::sqrt(5.0) * R * R;
    const double edge = std::max(lo_slab, hi_slab) / (std::sqrt(5.0) * R * R);
    if (edge > 1e-12 * std::abs(total))
        throw std::runtime_error("stochastic_propagator: kappa window too small");
    return total;
}

bool psi_kappa_limit_branch(const PhasePoint& a, int r) {
    const int R = pow2_checked(r, "psi_kappa_limit_branch");
    return near_singular_momentum(a.p, R);
}

double psi_kappa(const PhasePoint& a, int r, int kappa) {
    check_interior(a, "psi_kappa");
    const int R = pow2_checked(r, "psi_kappa");
    const int x1 = floor2q(a, "psi_kappa");
    if (near_singular_momentum(a.p, R)) {
        const double lo = psi_kappa_regular(a.p - kPsiLimitStep, x1, R, kappa);
        const double hi = psi_kappa_regular(a.p + kPsiLimitStep, x1, R, kappa);
        return 0.5 * (lo + hi);
    }
    return psi_kappa_regular(a.p, x1, R, kappa);
}

std::vector<HumpDescriptor> hump_catalog(const PhasePoint& a, int r) {
    check_interior(a, "hump_catalog");
    const int R = pow2_checked(r, "hump_catalog");
    const int x1 = floor2q(a, "hump_catalog");
    const double scaled = a.p * R;
    if (std::abs(scaled - std::nearbyint(scaled)) < 1e-12)
        throw std::domain_error("hump_catalog: a_p R integral puts a hump on the b_p seam");

    const bool limit = near_singular_momentum(a.p, R);
    const int kmin = static_cast<int>(std::floor(-scaled)) + 1;
    std::vector<HumpDescriptor> out;
    out.reserve(2 * R);
    for (int kappa = kmin; kappa < kmin + 2 * R; ++kappa) {
        const double psi = psi_kappa(a, r, kappa);
        out.push_back(HumpDescriptor{kappa, 2.0 * a.q - x1,
                                     (a.p + static_cast<double>(kappa) / R) / 2.0, psi * psi,
                                     kappa == x1 * R, limit});
    }
    return out;
}

ComparisonReport compare_exact_semiclassical(const PhasePoint& a,
                                             const BakerFamilyParams& params,
                                             const SemiclassicalRegime& regime,
                                             int nq, int np, double eps,
                                             int kappa_window,
                                             bool exact_normalization) {
    check_interior(a, "compare_exact_semiclassical");
    if (nq < 2 || np < 2)
        throw std::invalid_argument("compare_exact_semiclassical: grid too small");
    if (np % 2 != 0)
        throw std::invalid_argument(
            "compare_exact_semiclassical: np must be even to avoid the b_p = 1/2 line");
    const int D = 1 << params.num_qubits;
    const int x1 = floor2q(a, "compare_exact_semiclassical");
    if (regime.tag == RegimeTag::ThetaOne) {
        if (regime.momentum_bits < 0 ||
            params.position_bits != params.num_qubits - regime.momentum_bits)
            throw std::invalid_argument(
                "compare_exact_semiclassical: theta = 1 regime needs n = N - r");
        if (kappa_window <= 0) kappa_window = 4 * (1 << regime.momentum_bits);
    } else {
        kappa_window = 0;
    }

    ComparisonReport rep{a,
                         params,
                         regime,
                         nq,
                         np,
                         eps,
                         kappa_window,
                         exact_normalization,
                         {},
                         {},
                         {},
                         {},
                         0.0,
                         0.0,
                         {},
                         {},
                         {},
                         {}};
    rep.b1s.resize(nq);
    rep.b2s.resize(np);
    for (int i = 0; i < nq; ++i) rep.b1s[i] = (i + 0.5) / nq;
    for (int k = 0; k < np; ++k) rep.b2s[k] = (k + 0.5) / np;
    rep.exact_sq.assign(static_cast<std::size_t>(nq) * np, 0.0);
    rep.semi_sq.assign(static_cast<std::size_t>(nq) * np, 0.0);

    const TorusSpace space = params.space();
    StateVector ket = coherent_state(space, a, eps);
    double norm_a_sq = 1.0;
    if (exact_normalization) norm_a_sq = normalization_sq(space, a, eps);
    const StateVector image = baker_apply(ket, params);

    detail::parallel_for(nq, [&](int i) {
        for (int k = 0; k < np; ++k) {
            const PhasePoint b{rep.b1s[i], rep.b2s[k]};
            const StateVector probe = coherent_state(space, b, eps);
            double ex = std::norm(inner(probe, image));
            if (exact_normalization)
                ex /= norm_a_sq * normalization_sq(space, b, eps);
            Cx sc;
            if (regime.tag == RegimeTag::ThetaOne)
                sc = stochastic_propagator(a, b, D, regime.momentum_bits, kappa_window);
            else
                sc = vanvleck_explicit(a, b, D);
            const std::size_t idx = static_cast<std::size_t>(i) * np + k;
            rep.exact_sq[idx] = ex;
            rep.semi_sq[idx] = std::norm(sc);
        }
    });

    double linf = 0.0, l2 = 0.0;
    for (std::size_t idx = 0; idx < rep.exact_sq.size(); ++idx) {
        const double d = std::abs(rep.exact_sq[idx] - rep.semi_sq[idx]);
        linf = std::max(linf, d);
        l2 += d * d;
    }
    rep.linf_error = linf;
    rep.l2_error = std::sqrt(l2 / static_cast<double>(rep.exact_sq.size()));

    if (regime.tag == RegimeTag::ThetaOne) {
        rep.humps = hump_catalog(a, regime.momentum_bits);
    } else {
        const ClassicalPoint img = baker_step({a.q, a.p});
        rep.humps.push_back(HumpDescriptor{x1, img.q, img.p, 1.0, true, false});
    }
    for (const HumpDescriptor& h : rep.humps) {
        int i = static_cast<int>(std::lround(h.b1 * nq - 0.5));
        int k = static_cast<int>(std::lround(h.b2 * np - 0.5));
        i = std::min(std::max(i, 0), nq - 1);
        k = std::min(std::max(k, 0), np - 1);
        const std::size_t idx = static_cast<std::size_t>(i) * np + k;
        rep.hump_exact_sq.push_back(rep.exact_sq[idx]);
        rep.hump_semi_sq.push_back(rep.semi_sq[idx]);
        const double ref = rep.exact_sq[idx];
        rep.hump_rel_error.push_back(
            ref > 0.0 ? std::abs(rep.semi_sq[idx] - ref) / ref : 0.0);
    }
    return rep;
}

}  // namespace qbaker

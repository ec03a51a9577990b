// Acceptance gate for the library: twelve independent checks, one printed
// pass/fail line each, nonzero exit status when any check fails. Every
// tolerance is a literal in this file. Two checks carry regression pins that
// were measured once on a derivation run and then frozen; a negative pin
// means "not yet pinned" and fails the check on purpose.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qbaker/classical.hpp"
#include "qbaker/coherent.hpp"
#include "qbaker/quantum_baker.hpp"
#include "qbaker/semiclassical.hpp"
#include "qbaker/torus_hilbert.hpp"

namespace {

using namespace qbaker;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

// --- regression pins (measured on the derivation run of this build) -------
// check 9: |amp^2 - 4/5| at N = 12 sits at the rounding floor of the
// transform pipeline; the measured value is pinned and watched at +-10%
constexpr double kPinnedImageErrN12 = 1.322054e-12;
// scale below which consecutive errors are indistinguishable from rounding
constexpr double kImageNoiseFloor = 5e-12;
// check 10: per-hump center-height relative errors measured on the
// derivation run, frozen with a 1.3x regression margin
constexpr double kPinnedHumpCeil[8] = {0.065, 0.062, 0.106, 0.141,
                                       0.042, 0.277, 0.446, 0.221};

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string sfmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double rand_in(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// interior phase-space point away from the branch and seam lines
PhasePoint safe_point(std::mt19937& rng) {
    double q = rand_in(rng, 0.02, 0.98);
    while (std::abs(q - 0.5) < 0.02) q = rand_in(rng, 0.02, 0.98);
    return {q, rand_in(rng, 0.02, 0.98)};
}

StateVector random_state(const TorusSpace& s, std::mt19937& rng) {
    std::normal_distribution<double> g;
    StateVector v(s);
    for (Cx& c : v.amps) c = Cx{g(rng), g(rng)};
    const double n = norm(v);
    for (Cx& c : v.amps) c /= n;
    return v;
}

DenseOperator scaled(const DenseOperator& m, Cx factor) {
    DenseOperator out(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) out.at(i, j) = factor * m.at(i, j);
    return out;
}

DenseOperator dense_map(const BakerFamilyParams& params) {
    return dense_from_apply(params.space(), [&](const StateVector& v) {
        return baker_apply(v, params);
    });
}

DenseOperator bit_reversal_dense(int N) {
    const int D = 1 << N;
    DenseOperator out(D);
    for (int j = 0; j < D; ++j) {
        int r = 0;
        for (int b = 0; b < N; ++b) r |= ((j >> b) & 1) << (N - 1 - b);
        out.at(r, j) = 1.0;
    }
    return out;
}

double max_component_diff(const StateVector& x, const StateVector& y) {
    double worst = 0.0;
    for (int j = 0; j < x.dim(); ++j) worst = std::max(worst, std::abs(x.amps[j] - y.amps[j]));
    return worst;
}

// --- 1: norm preservation of every family member + dense block Gram ------
Outcome check_unitarity() {
    std::mt19937 rng(101);
    double worst_norm = 0.0;
    for (int N = 1; N <= 10; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            for (int t = 0; t < 20; ++t) {
                const StateVector psi = random_state(s, rng);
                worst_norm = std::max(worst_norm,
                                      std::abs(norm(baker_apply(psi, params)) - norm(psi)));
            }
        }
    }
    double worst_gram = 0.0;
    for (int N = 1; N <= 8; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 0; n <= N; ++n) {
            const DenseOperator g = partial_fourier_dense_kernel(s, n);
            worst_gram = std::max(
                worst_gram, g.adjoint().multiply(g).max_abs_diff(DenseOperator::identity(g.dim)));
        }
    }
    Outcome o;
    o.pass = worst_norm < 1e-12 && worst_gram < 1e-10;
    o.detail = sfmt("norm defect %.1e (tol 1e-12), Gram defect %.1e (tol 1e-10)",
                    worst_norm, worst_gram);
    return o;
}

// --- 2: partial transform endpoints --------------------------------------
Outcome check_endpoints() {
    double worst = 0.0;
    for (int N = 1; N <= 8; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        worst = std::max(
            worst, partial_fourier_dense_kernel(s, 0).max_abs_diff(fourier_full_dense_kernel(s)));
        worst = std::max(worst,
                         partial_fourier_dense_kernel(s, N).max_abs_diff(
                             scaled(DenseOperator::identity(s.dim), Cx{0.0, 1.0})));
    }
    Outcome o;
    o.pass = worst < 1e-12;
    o.detail = sfmt("endpoint defect %.1e (tol 1e-12): n = 0 is the full transform, "
                    "n = N is i times the identity", worst);
    return o;
}

// --- 3: n = 1 member equals the two-block construction --------------------
Outcome check_two_block() {
    double worst = 0.0;
    for (int N = 1; N <= 8; ++N)
        worst = std::max(worst, balazs_voros_dense(N).max_abs_diff(
                                    dense_map(BakerFamilyParams::from_n(N, 1))));
    Outcome o;
    o.pass = worst < 1e-10;
    o.detail = sfmt("block-construction defect %.1e over N = 1..8 (tol 1e-10)", worst);
    return o;
}

// --- 4: position-basis matrix oracle --------------------------------------
Outcome check_position_oracle() {
    double worst = 0.0;
    for (int N = 1; N <= 6; ++N)
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            worst = std::max(worst,
                             baker_dense_position_rep(params).max_abs_diff(dense_map(params)));
        }
    Outcome o;
    o.pass = worst < 1e-10;
    o.detail = sfmt("matrix-element defect %.1e over N = 1..6, all n (tol 1e-10)", worst);
    return o;
}

// --- 5: matrix-free application vs dense + large-register timing ----------
Outcome check_matrix_free() {
    std::mt19937 rng(505);
    double worst = 0.0;
    for (int N = 1; N <= 8; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            const DenseOperator dense = baker_dense_position_rep(params);
            for (int t = 0; t < 5; ++t) {
                const StateVector psi = random_state(s, rng);
                worst = std::max(worst,
                                 max_component_diff(baker_apply(psi, params), dense.apply(psi)));
            }
        }
    }
    const TorusSpace big = TorusSpace::qubits(20);
    const StateVector psi = random_state(big, rng);
    const auto t0 = Clock::now();
    double norm_defect = 0.0;
    for (int n : {1, 10, 19}) {
        const StateVector out = baker_apply(psi, BakerFamilyParams::from_n(20, n));
        norm_defect = std::max(norm_defect, std::abs(norm(out) - 1.0));
    }
    const double big_secs = std::chrono::duration<double>(Clock::now() - t0).count();
    Outcome o;
    o.pass = worst < 1e-10 && big_secs < 10.0 && norm_defect < 1e-11;
    o.detail = sfmt("dense-vs-free defect %.1e (tol 1e-10); three N = 20 applications "
                    "in %.2f s (limit 10)", worst, big_secs);
    return o;
}

// --- 6: wave packets: winding phases, norm, lattice-sum stability ---------
Cx theta_brute(Cx z, Cx tau, int M) {
    Cx sum = 0.0;
    for (int mu = -M; mu <= M; ++mu)
        sum += std::exp(Cx{0.0, 1.0} * kPi *
                        (tau * static_cast<double>(mu) * static_cast<double>(mu) +
                         (2.0 * z + 1.0) * static_cast<double>(mu)));
    return sum;
}

Outcome check_wave_packets() {
    std::mt19937 rng(606);
    double worst_qp = 0.0;
    for (int D : {16, 32, 64}) {
        const TorusSpace s = TorusSpace::antiperiodic(D);
        for (int t = 0; t < 5; ++t) {
            const PhasePoint a{rand_in(rng, 0.05, 0.95), rand_in(rng, 0.05, 0.95)};
            const StateVector base = coherent_state(s, a);
            StateVector sq = coherent_state(s, {a.q + 1.0, a.p});
            StateVector sp = coherent_state(s, {a.q, a.p + 1.0});
            const Cx fq = -std::exp(Cx{0.0, 1.0} * kPi * static_cast<double>(D) * a.p);
            const Cx fp = -std::exp(Cx{0.0, -1.0} * kPi * static_cast<double>(D) * a.q);
            for (int j = 0; j < D; ++j) {
                worst_qp = std::max(worst_qp, std::abs(sq.amps[j] - fq * base.amps[j]));
                worst_qp = std::max(worst_qp, std::abs(sp.amps[j] - fp * base.amps[j]));
            }
        }
    }
    double worst_n2 = 0.0;
    for (int D : {16, 18, 32, 64, 128, 256, 512, 1024}) {
        const TorusSpace s(D, 0.5, 0.5);
        for (int t = 0; t < 3; ++t) {
            const PhasePoint a{rand_in(rng, 0.0, 1.0), rand_in(rng, 0.0, 1.0)};
            worst_n2 = std::max(worst_n2, std::abs(normalization_sq(s, a) - 1.0));
        }
    }
    double worst_th = 0.0;
    const Cx cases[][2] = {
        {Cx{4.8, 0.0}, Cx{0.0, 8.0}},
        {Cx{0.3, 0.2}, Cx{0.25, 0.5}},
        {Cx{1.7, -0.4}, Cx{0.0, 2.0}},
        {Cx{0.45, -0.3}, Cx{0.3, 0.05}},
    };
    for (const auto& c : cases) {
        const Cx whole = theta_brute(c[0], c[1], 120);
        const Cx half = theta_brute(c[0], c[1], 60);
        worst_th = std::max(worst_th, std::abs(whole - half) / std::abs(whole));
        worst_th = std::max(worst_th,
                            std::abs(theta0({c[0], c[1], kDefaultEps}) - whole) / std::abs(whole));
    }
    Outcome o;
    o.pass = worst_qp < 1e-10 && worst_n2 < 1e-8 && worst_th < 1e-12;
    o.detail = sfmt("winding defect %.1e (tol 1e-10); |norm^2 - 1| %.1e for even D >= 16 "
                    "(tol 1e-8); window-doubling shift %.1e (tol 1e-12)",
                    worst_qp, worst_n2, worst_th);
    return o;
}

// --- 7: generating function drives the map through its gradients ----------
Outcome check_generating_function() {
    std::mt19937 rng(707);
    const double h = 1e-6;
    double worst_grad = 0.0;
    for (int branch = 0; branch <= 1; ++branch) {
        for (int t = 0; t < 100; ++t) {
            const double q = rand_in(rng, 0.5 * branch + 1e-3, 0.5 * branch + 0.5 - 1e-3);
            const Cx a{q, rand_in(rng, 1e-3, 1.0 - 1e-3)};
            const Cx b = baker_step_complex(a);
            const Cx bstar = std::conj(b);
            const Cx d1r = (generating_W(bstar + h, a) - generating_W(bstar - h, a)) / (2 * h);
            const Cx d1i = (generating_W(bstar + Cx{0, h}, a) -
                            generating_W(bstar - Cx{0, h}, a)) / Cx{0, 2 * h};
            const Cx d2r = (generating_W(bstar, a + h) - generating_W(bstar, a - h)) / (2 * h);
            const Cx d2i = (generating_W(bstar, a + Cx{0, h}) -
                            generating_W(bstar, a - Cx{0, h})) / Cx{0, 2 * h};
            worst_grad = std::max({worst_grad, std::abs(d1r - b), std::abs(d1i - b),
                                   std::abs(d2r - std::conj(a)), std::abs(d2i - std::conj(a))});
        }
    }
    double worst_mixed = 0.0;
    const double hh = 1e-4;
    for (int branch = 0; branch <= 1; ++branch) {
        for (int t = 0; t < 10; ++t) {
            const double q = rand_in(rng, 0.5 * branch + 1e-3, 0.5 * branch + 0.5 - 1e-3);
            const Cx a{q, rand_in(rng, 1e-3, 1.0 - 1e-3)};
            const Cx bstar = std::conj(baker_step_complex(a));
            const Cx mixed = (generating_W(bstar + hh, a + hh) - generating_W(bstar + hh, a - hh) -
                              generating_W(bstar - hh, a + hh) + generating_W(bstar - hh, a - hh)) /
                             (4 * hh * hh);
            worst_mixed = std::max(worst_mixed, std::abs(mixed - 0.8));
        }
    }
    Outcome o;
    o.pass = worst_grad < 1e-6 && worst_mixed < 1e-6;
    o.detail = sfmt("gradient residual %.1e at 100 points/branch (tol 1e-6); "
                    "mixed second derivative off 4/5 by %.1e (tol 1e-6)",
                    worst_grad, worst_mixed);
    return o;
}

// --- 8: the two written forms of the single-hump propagator ---------------
Outcome check_single_hump_forms() {
    std::mt19937 rng(808);
    double worst_rel = 0.0, worst_phase = 0.0;
    for (int D : {16, 64}) {
        double lo[2] = {1e9, 1e9}, hi[2] = {-1e9, -1e9};
        for (int t = 0; t < 100; ++t) {
            const PhasePoint a = safe_point(rng);
            PhasePoint b = safe_point(rng);
            while (std::abs(b.p - 0.5) < 0.02) b = safe_point(rng);
            const Cx e = vanvleck_explicit(a, b, D);
            const Cx g = vanvleck_generic(a, b, D);
            worst_rel = std::max(worst_rel, std::abs(g - e) / std::abs(e));
            const int branch = a.q > 0.5 ? 1 : 0;
            const double phase = std::arg(g / e);
            lo[branch] = std::min(lo[branch], phase);
            hi[branch] = std::max(hi[branch], phase);
        }
        for (int branch = 0; branch <= 1; ++branch)
            worst_phase = std::max(worst_phase, hi[branch] - lo[branch]);
    }
    Outcome o;
    o.pass = worst_rel < 1e-12 && worst_phase < 1e-12;
    o.detail = sfmt("relative split %.1e, in-branch phase spread %.1e rad at 200 points "
                    "(tol 1e-12)", worst_rel, worst_phase);
    return o;
}

// --- 9: propagator squared at the classical image approaches 4/5 ----------
Outcome check_image_convergence() {
    const PhasePoint a{0.3, 0.7};
    const ClassicalPoint img = baker_step({a.q, a.p});
    const PhasePoint b{img.q, img.p};
    std::string seq;
    double prev = 1e300, err12 = 0.0;
    bool converging = true;
    for (int N : {6, 8, 10, 12}) {
        const Cx v = exact_propagator(a, b, BakerFamilyParams::from_n(N, 1));
        const double err = std::abs(std::norm(v) - 0.8);
        seq += sfmt("%s%.3e", seq.empty() ? "" : ", ", err);
        // each step must shrink until the sequence is under the rounding
        // floor, where decrease is no longer resolvable in doubles
        converging = converging && (err < prev || err < kImageNoiseFloor);
        prev = err;
        if (N == 12) err12 = err;
    }
    Outcome o;
    if (kPinnedImageErrN12 < 0.0) {
        o.pass = false;
        o.detail = sfmt("UNPINNED derivation run: errors %s; pin N = 12 error %.6e",
                        seq.c_str(), err12);
        return o;
    }
    const bool pinned_ok = std::abs(err12 - kPinnedImageErrN12) <= 0.1 * kPinnedImageErrN12;
    o.pass = converging && pinned_ok;
    o.detail = sfmt("errors {%s} decreasing to the %.0e rounding floor: %s; N = 12 value "
                    "%.3e within 10%% of pin %.3e: %s",
                    seq.c_str(), kImageNoiseFloor, converging ? "yes" : "NO", err12,
                    kPinnedImageErrN12, pinned_ok ? "yes" : "NO");
    return o;
}

// --- 10: the eight-hump momentum comb at N = 8, two momentum bits ---------
Outcome check_hump_grid() {
    const PhasePoint a{0.75, 0.05};
    const auto params = BakerFamilyParams::from_r(8, 2);
    const int D = 256, r = 2, nq = 24, np = 48;
    const ComparisonReport rep =
        compare_exact_semiclassical(a, params, SemiclassicalRegime::theta_one(r), nq, np);

    Outcome o;
    if (rep.humps.size() != 8) {
        o.pass = false;
        o.detail = sfmt("expected 8 cataloged humps, got %zu", rep.humps.size());
        return o;
    }

    // positions: column at the doubled position coordinate, comb offset a_p/2
    double worst_pos = 0.0;
    for (const auto& h : rep.humps) {
        const double want_b2 = std::fmod(0.5 * a.p + h.kappa / 8.0, 1.0);
        worst_pos = std::max({worst_pos, std::abs(h.b1 - 0.5), std::abs(h.b2 - want_b2)});
    }

    // a hump must rise above its neighbors' Gaussian tails to be separately
    // visible at this Planck cell size; exempt the ones that provably cannot
    const double decay = 2.0 * kPi * D / 5.0;
    int visible = 0, peaked = 0;
    std::string swamped;
    for (std::size_t idx = 0; idx < rep.humps.size(); ++idx) {
        const auto& h = rep.humps[idx];
        double tail = 0.0;
        for (std::size_t jdx = 0; jdx < rep.humps.size(); ++jdx) {
            if (jdx == idx) continue;
            double d = std::abs(rep.humps[jdx].b2 - h.b2);
            d = std::min(d, 1.0 - d);
            tail += rep.humps[jdx].weight * std::exp(-decay * d * d);
        }
        if (h.weight <= 4.0 * tail) {
            swamped += sfmt("%s%d", swamped.empty() ? "" : ",", h.kappa);
            continue;
        }
        ++visible;
        const int i = std::clamp(static_cast<int>(std::lround(h.b1 * nq - 0.5)), 0, nq - 1);
        const int k = std::clamp(static_cast<int>(std::lround(h.b2 * np - 0.5)), 0, np - 1);
        auto cell = [&](int kk) { return rep.exact_sq[static_cast<std::size_t>(i) * np +
                                                      ((kk % np) + np) % np]; };
        const double peak = std::max({cell(k - 1), cell(k), cell(k + 1)});
        if (peak > cell(k - 3) && peak > cell(k + 3)) ++peaked;
    }

    // heights at the exact hump centers, both propagators evaluated off-grid
    double weighted_err = 0.0, weight_total = 0.0, worst_margin = 0.0;
    std::string errs;
    bool ceilings_ok = true, unpinned = false;
    for (std::size_t idx = 0; idx < rep.humps.size(); ++idx) {
        const auto& h = rep.humps[idx];
        const PhasePoint center{h.b1, h.b2};
        const double exact = std::norm(exact_propagator(a, center, params));
        const double semi = std::norm(stochastic_propagator(a, center, D, r));
        const double rel = std::abs(semi - exact) / exact;
        errs += sfmt("%s%.3f", errs.empty() ? "" : "/", rel);
        weighted_err += h.weight * rel;
        weight_total += h.weight;
        if (kPinnedHumpCeil[idx] < 0.0) unpinned = true;
        else if (rel > kPinnedHumpCeil[idx]) ceilings_ok = false;
        worst_margin = std::max(worst_margin, rel);
    }
    weighted_err /= weight_total;

    // weights touch exactly one at the special momenta between comb teeth
    double worst_touch = 0.0;
    bool limit_flagged = true;
    for (int m = 0; m < 4; ++m) {
        const PhasePoint pa{0.75, (m + 0.5) / 4.0};
        limit_flagged = limit_flagged && psi_kappa_limit_branch(pa, r);
        const double w = std::pow(psi_kappa(pa, r, 4), 2);
        worst_touch = std::max(worst_touch, std::abs(w - 1.0));
    }

    if (unpinned) {
        o.pass = false;
        o.detail = sfmt("UNPINNED derivation run: center rel errors %s; weighted mean %.4f; "
                        "visible %d peaked %d swamped {%s}; grid linf %.2e; touch defect %.1e",
                        errs.c_str(), weighted_err, visible, peaked, swamped.c_str(),
                        rep.linf_error, worst_touch);
        return o;
    }
    o.pass = worst_pos < 1e-12 && visible == 7 && peaked == 7 && swamped == "5" &&
             ceilings_ok && weighted_err < 0.10 && rep.linf_error < 0.05 &&
             worst_touch < 1e-6 && limit_flagged;
    o.detail = sfmt("8 humps, %d/%d tail-dominant ones are grid maxima (swamped: {%s}); "
                    "center rel errors %s under pinned ceilings: %s; weighted mean %.4f "
                    "(tol 0.10); grid linf %.2e (tol 0.05); unity touch defect %.1e (tol 1e-6)",
                    peaked, visible, swamped.c_str(), errs.c_str(),
                    ceilings_ok ? "yes" : "NO", weighted_err, rep.linf_error, worst_touch);
    return o;
}

// --- 11: hump weights are a probability distribution ----------------------
Outcome check_weight_normalization() {
    std::mt19937 rng(1111);
    double worst_sum = 0.0;
    for (int r : {0, 1, 2, 3}) {
        const int R = 1 << r;
        for (int t = 0; t < 50; ++t) {
            PhasePoint a = safe_point(rng);
            while (std::abs(a.p * R - 0.5 - std::nearbyint(a.p * R - 0.5)) < 1e-3 * R ||
                   psi_kappa_limit_branch(a, r))
                a = safe_point(rng);
            double total = 0.0;
            for (const auto& h : hump_catalog(a, r)) total += h.weight;
            worst_sum = std::max(worst_sum, std::abs(total - 1.0));
        }
    }
    double worst_closed = 0.0;
    for (int t = 0; t < 50; ++t) {
        PhasePoint a = safe_point(rng);
        while (std::abs(a.p - 0.5) < 1e-3) a = safe_point(rng);
        const int x1 = static_cast<int>(std::floor(2.0 * a.q));
        const double c2 = std::pow(std::cos(0.5 * kPi * (a.p - 0.5)), 2);
        for (const auto& h : hump_catalog(a, 0)) {
            const double want = h.kappa == x1 ? c2 : 1.0 - c2;
            worst_closed = std::max(worst_closed, std::abs(h.weight - want));
        }
    }
    Outcome o;
    o.pass = worst_sum < 1e-10 && worst_closed < 1e-10;
    o.detail = sfmt("|sum - 1| %.1e over r = 0..3, 50 points each; r = 0 closed-form "
                    "defect %.1e (tol 1e-10)", worst_sum, worst_closed);
    return o;
}

// --- 12: the whole family chains down to the full transform ---------------
Outcome check_chain_product() {
    double worst_chain = 0.0, worst_family = 0.0;
    for (int N = 1; N <= 6; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        const DenseOperator target = scaled(
            dense_from_apply(s, [](const StateVector& v) { return fourier_full(v); }),
            Cx{0.0, -1.0});

        DenseOperator comp = DenseOperator::identity(s.dim);
        for (int n = 1; n <= N; ++n) {
            comp = comp.multiply(dense_from_apply(s, [&](const StateVector& v) {
                return partial_fourier(partial_fourier_inverse(v, n), n - 1);
            }));
        }
        worst_chain = std::max(worst_chain, comp.max_abs_diff(target));

        DenseOperator prod = DenseOperator::identity(s.dim);
        for (int n = 1; n <= N; ++n)
            prod = prod.multiply(dense_map(BakerFamilyParams::from_n(N, n)));
        worst_family = std::max(worst_family,
                                prod.max_abs_diff(target.multiply(bit_reversal_dense(N))));
    }
    Outcome o;
    o.pass = worst_chain < 1e-10 && worst_family < 1e-10;
    o.detail = sfmt("undo/redo chain lands on -i x full transform: defect %.1e; member "
                    "product adds the position-bit reversal: defect %.1e (tol 1e-10)",
                    worst_chain, worst_family);
    return o;
}

struct Criterion {
    int id;
    const char* label;
    double limit_secs;  // <= 0: no gate
    Outcome (*fn)();
};

}  // namespace

int main() {
    const Criterion table[] = {
        {1, "family unitarity", 60.0, check_unitarity},
        {2, "transform endpoints", 0.0, check_endpoints},
        {3, "two-block construction at n = 1", 0.0, check_two_block},
        {4, "position-matrix oracle", 0.0, check_position_oracle},
        {5, "matrix-free vs dense", 0.0, check_matrix_free},
        {6, "wave-packet identities", 0.0, check_wave_packets},
        {7, "generating-function gradients", 0.0, check_generating_function},
        {8, "single-hump form equivalence", 0.0, check_single_hump_forms},
        {9, "image-point convergence", 120.0, check_image_convergence},
        {10, "momentum-comb reproduction", 300.0, check_hump_grid},
        {11, "hump-weight distribution", 0.0, check_weight_normalization},
        {12, "chain product collapse", 0.0, check_chain_product},
    };
    int failures = 0;
    for (const Criterion& c : table) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("unexpected exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_time = c.limit_secs <= 0.0 || secs < c.limit_secs;
        const bool pass = o.pass && in_time;
        std::printf("criterion %2d  %-32s  %s  (%6.2f s)  %s%s\n", c.id, c.label,
                    pass ? "PASS" : "FAIL", secs, o.detail.c_str(),
                    in_time ? "" : sfmt("; OVER TIME LIMIT %.0f s", c.limit_secs).c_str());
        if (!pass) ++failures;
    }
    if (failures > 0) std::printf("%d of 12 criteria failed\n", failures);
    else std::printf("all 12 criteria passed\n");
    return failures == 0 ? 0 : 1;
}

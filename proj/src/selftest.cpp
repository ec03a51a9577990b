#include "qbaker/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "qbaker/classical.hpp"
#include "qbaker/coherent.hpp"
#include "qbaker/quantum_baker.hpp"
#include "qbaker/semiclassical.hpp"
#include "qbaker/torus_hilbert.hpp"

namespace qbaker {

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(const TorusSpace& s, std::mt19937& rng) {
    std::normal_distribution<double> g;
    StateVector v(s);
    for (auto& c : v.amps) c = Cx{g(rng), g(rng)};
    const double nrm = norm(v);
    for (auto& c : v.amps) c /= nrm;
    return v;
}

// position-bit reversal permutation, dense
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

DenseOperator scaled(const DenseOperator& m, Cx factor) {
    DenseOperator out(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) out.at(i, j) = factor * m.at(i, j);
    return out;
}

struct Harness {
    std::vector<SelftestRow> rows;
    std::mt19937 rng;

    template <typename Fn>
    void check(const std::string& name, double tol, Fn&& body) {
        double worst = std::numeric_limits<double>::infinity();
        bool pass = false;
        try {
            worst = body();
            pass = worst <= tol;
        } catch (const std::exception&) {
            // a throwing invariant is a failed invariant
        }
        rows.push_back({name, worst, tol, pass});
    }
};

double transform_unitarity(const SelftestOptions& opt) {
    double worst = 0.0;
    const int cap = std::min(opt.max_qubits, 8);
    for (int N = 1; N <= cap; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 0; n <= N; ++n) {
            DenseOperator g = dense_from_apply(
                s, [&](const StateVector& v) { return partial_fourier(v, n); });
            worst = std::max(worst, g.unitarity_error());
        }
    }
    return worst;
}

double map_norm_preservation(const SelftestOptions& opt, std::mt19937& rng) {
    double worst = 0.0;
    for (int N = 1; N <= opt.max_qubits; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            for (int t = 0; t < 3; ++t) {
                StateVector v = random_state(s, rng);
                worst = std::max(worst, std::abs(norm(baker_apply(v, params)) - norm(v)));
            }
        }
    }
    return worst;
}

double transform_endpoints(const SelftestOptions& opt) {
    double worst = 0.0;
    const int cap = std::min(opt.max_qubits, 8);
    for (int N = 1; N <= cap; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        DenseOperator g0 = dense_from_apply(
            s, [&](const StateVector& v) { return partial_fourier(v, 0); });
        DenseOperator full = dense_from_apply(
            s, [&](const StateVector& v) { return fourier_full(v); });
        worst = std::max(worst, g0.max_abs_diff(full));
        DenseOperator gN = dense_from_apply(
            s, [&](const StateVector& v) { return partial_fourier(v, N); });
        worst = std::max(worst, gN.max_abs_diff(scaled(DenseOperator::identity(s.dim), Cx{0, 1})));
    }
    return worst;
}

double half_block_construction(const SelftestOptions& opt) {
    double worst = 0.0;
    const int cap = std::min(opt.max_qubits, 8);
    for (int N = 1; N <= cap; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        const auto params = BakerFamilyParams::from_n(N, 1);
        DenseOperator b1 = dense_from_apply(
            s, [&](const StateVector& v) { return baker_apply(v, params); });
        worst = std::max(worst, balazs_voros_dense(N).max_abs_diff(b1));
    }
    return worst;
}

double position_rep_oracle(const SelftestOptions& opt) {
    double worst = 0.0;
    const int cap = std::min(opt.max_qubits, 6);
    for (int N = 1; N <= cap; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            DenseOperator mf = dense_from_apply(
                s, [&](const StateVector& v) { return baker_apply(v, params); });
            worst = std::max(worst, baker_dense_position_rep(params).max_abs_diff(mf));
        }
    }
    return worst;
}

double mixed_basis_shift(const SelftestOptions& opt) {
    double worst = 0.0;
    const int cap = std::min(opt.max_qubits, 6);
    for (int N = 1; N <= cap; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            for (int X = 0; X < (1 << n); ++X)
                for (int A = 0; A < (1 << (N - n)); ++A) {
                    std::vector<int> x(n), a(N - n);
                    for (int i = 0; i < n; ++i) x[i] = (X >> (n - 1 - i)) & 1;
                    for (int i = 0; i < N - n; ++i) a[i] = (A >> (N - n - 1 - i)) & 1;
                    StateVector got = baker_apply(pf_basis_state(s, x, a), params);
                    std::vector<int> xs(x.begin() + 1, x.end());
                    std::vector<int> as;
                    as.push_back(x[0]);
                    as.insert(as.end(), a.begin(), a.end());
                    StateVector want = pf_basis_state(s, xs, as);
                    for (int j = 0; j < s.dim; ++j)
                        worst = std::max(worst, std::abs(got.amps[j] - want.amps[j]));
                }
        }
    }
    return worst;
}

double chain_collapse(const SelftestOptions& opt) {
    double worst = 0.0;
    const int cap = std::min(opt.max_qubits, 6);
    for (int N = 1; N <= cap; ++N) {
        const TorusSpace s = TorusSpace::qubits(N);
        DenseOperator full = dense_from_apply(
            s, [&](const StateVector& v) { return fourier_full(v); });
        DenseOperator target = scaled(full, Cx{0, -1});

        // chained compositions: undo n bits, redo n-1, n = 1..N; adjacent
        // transforms cancel so the product is -i times the full transform
        DenseOperator comp = DenseOperator::identity(s.dim);
        for (int n = 1; n <= N; ++n) {
            DenseOperator step = dense_from_apply(s, [&](const StateVector& v) {
                return partial_fourier(partial_fourier_inverse(v, n), n - 1);
            });
            comp = comp.multiply(step);
        }
        worst = std::max(worst, comp.max_abs_diff(target));

        // the map family itself accumulates the bit-crossing rotations; its
        // product is -i times the full transform times bit reversal
        DenseOperator prod = DenseOperator::identity(s.dim);
        for (int n = 1; n <= N; ++n) {
            const auto params = BakerFamilyParams::from_n(N, n);
            DenseOperator step = dense_from_apply(
                s, [&](const StateVector& v) { return baker_apply(v, params); });
            prod = prod.multiply(step);
        }
        worst = std::max(worst, prod.max_abs_diff(target.multiply(bit_reversal_dense(N))));
    }
    return worst;
}

double packet_quasi_periodicity(const SelftestOptions& opt, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    double worst = 0.0;
    for (int D : {16, 32, 64}) {
        const TorusSpace s = TorusSpace::antiperiodic(D);
        for (int t = 0; t < 5; ++t) {
            const double q = u(rng), p = u(rng);
            StateVector base = coherent_state(s, {q, p}, opt.eps);
            StateVector shq = coherent_state(s, {q + 1.0, p}, opt.eps);
            StateVector shp = coherent_state(s, {q, p + 1.0}, opt.eps);
            const Cx fq = -std::exp(Cx{0.0, kPi * D * p});
            const Cx fp = -std::exp(Cx{0.0, -kPi * D * q});
            for (int j = 0; j < D; ++j) {
                worst = std::max(worst, std::abs(shq.amps[j] - fq * base.amps[j]));
                worst = std::max(worst, std::abs(shp.amps[j] - fp * base.amps[j]));
            }
        }
    }
    return worst;
}

double packet_norm_theta_match(const SelftestOptions& opt, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int D : {16, 32, 64, 128}) {
        const TorusSpace s = TorusSpace::antiperiodic(D);
        for (int t = 0; t < 5; ++t) {
            const PhasePoint a{u(rng), u(rng)};
            const double brute = norm(coherent_state(s, a, opt.eps));
            const double viatheta = normalization_sq(s, a, opt.eps);
            worst = std::max(worst, std::abs(brute * brute - viatheta));
        }
    }
    return worst;
}

double packet_norm_residual(const SelftestOptions& opt, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int D : {16, 32, 64, 128}) {
        const TorusSpace s = TorusSpace::antiperiodic(D);
        for (int t = 0; t < 5; ++t)
            worst = std::max(worst,
                             std::abs(normalization_sq(s, {u(rng), u(rng)}, opt.eps) - 1.0));
    }
    return worst;
}

double theta_window_stability(const SelftestOptions& opt, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Cx z{u(rng), 0.3 * u(rng)};
        const Cx tau{u(rng), 2.0 + std::abs(u(rng))};
        const Cx coarse = theta0({z, tau, opt.eps});
        const Cx fine = theta0({z, tau, opt.eps * opt.eps});
        worst = std::max(worst, std::abs(coarse - fine));
    }
    return worst;
}

double generating_function_gradients(std::mt19937& rng) {
    const double h = 1e-6;
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.05, 0.45);
    std::uniform_real_distribution<double> up(0.05, 0.95);
    for (int branch = 0; branch <= 1; ++branch) {
        for (int t = 0; t < 100; ++t) {
            const Cx a{u(rng) + 0.5 * branch, up(rng)};
            const Cx b = baker_step_complex(a);
            const Cx bs = std::conj(b);
            // d/d bstar along both axes -> b
            const Cx d_re = (generating_W(bs + h, a) - generating_W(bs - h, a)) / (2 * h);
            const Cx d_im = (generating_W(bs + Cx{0, h}, a) - generating_W(bs - Cx{0, h}, a)) /
                            Cx{0, 2 * h};
            // d/d a along both axes -> conj(a)
            const Cx g_re = (generating_W(bs, a + h) - generating_W(bs, a - h)) / (2 * h);
            const Cx g_im = (generating_W(bs, a + Cx{0, h}) - generating_W(bs, a - Cx{0, h})) /
                            Cx{0, 2 * h};
            worst = std::max({worst, std::abs(d_re - b), std::abs(d_im - b),
                              std::abs(g_re - std::conj(a)), std::abs(g_im - std::conj(a))});
            // mixed second derivative is the constant 4/5; wider step since the
            // second difference divides by h^2 (exact for a per-branch quadratic)
            const double h2 = 1e-4;
            const Cx mixed = (generating_W(bs + h2, a + h2) - generating_W(bs + h2, a - h2) -
                              generating_W(bs - h2, a + h2) + generating_W(bs - h2, a - h2)) /
                             (4 * h2 * h2);
            worst = std::max(worst, std::abs(mixed - 0.8));
        }
    }
    return worst;
}

double van_vleck_forms(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    double worst = 0.0;
    for (int D : {8, 16}) {
        for (int t = 0; t < 50; ++t) {
            PhasePoint a{u(rng), u(rng)};
            PhasePoint b{u(rng), u(rng)};
            if (std::abs(a.q - 0.5) < 0.02) a.q += 0.05;
            if (std::abs(b.p - 0.5) < 0.02) b.p += 0.05;
            const Cx e = vanvleck_explicit(a, b, D);
            const Cx g = vanvleck_generic(a, b, D);
            worst = std::max(worst, std::abs(g - e) / std::abs(e));
        }
    }
    return worst;
}

double hump_normalization(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.02, 0.98);
    double worst = 0.0;
    for (int r = 0; r <= 3; ++r) {
        const int R = 1 << r;
        for (int t = 0; t < 12; ++t) {
            PhasePoint a{u(rng), u(rng)};
            if (std::abs(a.q - 0.5) < 1e-3) a.q += 0.01;
            // keep clear of both the singular momentum lines and the seam
            const double g = a.p * R;
            if (std::abs(g - std::round(g)) < 1e-3 ||
                std::abs(g - std::floor(g) - 0.5) < 1e-3) {
                a.p += 0.5e-2 / R;
            }
            const auto humps = hump_catalog(a, r);
            double sum = 0.0;
            for (const auto& h : humps) sum += h.weight;
            worst = std::max(worst, std::abs(sum - 1.0));
            if (r == 0) {
                const double arg = (kPi / 2.0) * (a.p - 0.5);
                for (const auto& h : humps) {
                    const double want =
                        h.is_classical ? std::cos(arg) * std::cos(arg) : std::sin(arg) * std::sin(arg);
                    worst = std::max(worst, std::abs(h.weight - want));
                }
            }
        }
    }
    return worst;
}

}  // namespace

std::vector<SelftestRow> run_selftest(const SelftestOptions& opt) {
    if (opt.max_qubits < 1 || opt.max_qubits > 16)
        throw std::invalid_argument("run_selftest: max_qubits must lie in [1, 16]");
    if (!(opt.eps > 0.0 && opt.eps < 1.0))
        throw std::invalid_argument("run_selftest: eps must lie in (0, 1)");

    Harness h;
    h.rng.seed(static_cast<std::mt19937::result_type>(opt.seed));

    h.check("transform-unitarity", 1e-10, [&] { return transform_unitarity(opt); });
    h.check("map-norm-preservation", 1e-12, [&] { return map_norm_preservation(opt, h.rng); });
    h.check("transform-endpoints", 1e-12, [&] { return transform_endpoints(opt); });
    h.check("half-block-construction", 1e-10, [&] { return half_block_construction(opt); });
    h.check("position-rep-oracle", 1e-10, [&] { return position_rep_oracle(opt); });
    h.check("mixed-basis-shift", 1e-12, [&] { return mixed_basis_shift(opt); });
    h.check("chain-collapse", 1e-10, [&] { return chain_collapse(opt); });
    h.check("packet-quasi-periodicity", 1e-10, [&] { return packet_quasi_periodicity(opt, h.rng); });
    h.check("packet-norm-theta-match", 1e-10, [&] { return packet_norm_theta_match(opt, h.rng); });
    h.check("packet-norm-residual", 1e-8, [&] { return packet_norm_residual(opt, h.rng); });
    h.check("theta-window-stability", 1e-12, [&] { return theta_window_stability(opt, h.rng); });
    h.check("generating-function-gradients", 1e-6, [&] { return generating_function_gradients(h.rng); });
    h.check("van-vleck-forms", 1e-12, [&] { return van_vleck_forms(h.rng); });
    h.check("hump-normalization", 1e-10, [&] { return hump_normalization(h.rng); });
    return h.rows;
}

bool all_pass(const std::vector<SelftestRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const SelftestRow& r) { return r.pass; });
}

}  // namespace qbaker

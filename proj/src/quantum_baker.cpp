#include "qbaker/quantum_baker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qbaker {

namespace {

constexpr double kPi = std::numbers::pi;

void check_antiperiodic_register(const TorusSpace& s, const char* who) {
    if (!s.qubit_count())
        throw std::invalid_argument(std::string(who) + ": dimension is not a power of two");
    if (s.alpha != 0.5 || s.beta != 0.5)
        throw std::invalid_argument(std::string(who) +
                                    ": baker family lives on antiperiodic boundaries");
}

// Forward antiperiodic DFT, kernel d^{-1/2} exp[-2 pi i (j+1/2)(k+1/2)/d].
DenseOperator antiperiodic_dft_forward(int d) {
    DenseOperator m(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            m.at(j, k) = std::polar(scale, -2.0 * kPi * (j + 0.5) * (k + 0.5) / d);
    return m;
}

}  // namespace

BakerFamilyParams BakerFamilyParams::from_n(int N, int n) {
    if (N < 1 || N > 30) throw std::invalid_argument("BakerFamilyParams: N out of range");
    if (n < 1 || n > N)
        throw std::invalid_argument("BakerFamilyParams: position bit count must lie in [1, N]");
    return BakerFamilyParams{N, n};
}

BakerFamilyParams BakerFamilyParams::from_r(int N, int r) {
    if (r < 0) throw std::invalid_argument("BakerFamilyParams: r must be non-negative");
    return from_n(N, N - r);
}

LimitPath::LimitPath(long num, long den, int s_) : theta_num(num), theta_den(den), s(s_) {
    if (den <= 0) throw std::invalid_argument("LimitPath: theta denominator must be positive");
    if (num < 0 || num > den)
        throw std::invalid_argument("LimitPath: theta must lie in [0, 1]");
}

int LimitPath::n_of(int N) const {
    const long num = theta_num * N + static_cast<long>(s) * theta_den;
    if (num % theta_den != 0)
        throw std::invalid_argument("LimitPath: theta*N + s is not an integer for this N");
    const long n = num / theta_den;
    if (n < 1 || n > N)
        throw std::invalid_argument("LimitPath: theta*N + s falls outside [1, N]");
    return static_cast<int>(n);
}

std::vector<BakerFamilyParams> LimitPath::family(const std::vector<int>& Ns) const {
    std::vector<BakerFamilyParams> out;
    out.reserve(Ns.size());
    for (int N : Ns) out.push_back(BakerFamilyParams::from_n(N, n_of(N)));
    return out;
}

StateVector baker_apply(const StateVector& state, const BakerFamilyParams& params) {
    check_antiperiodic_register(state.space, "baker_apply");
    if (*state.space.qubit_count() != params.num_qubits)
        throw std::invalid_argument("baker_apply: state register size does not match params");
    const int n = params.position_bits;
    if (n < 1 || n > params.num_qubits)
        throw std::invalid_argument("baker_apply: position bit count out of range");
    StateVector mid = partial_fourier_inverse(state, n);
    if (n > 1) {
        // Move the leading position bit to the bottom of the kept register so
        // it joins the block the (n-1)-bit transform acts on; the other kept
        // bits slide up one slot. This makes the map the one-symbol shift
        // rather than a transform of the trailing kept bit only.
        const int N = params.num_qubits;
        const int D = 1 << N;
        const int block = 1 << (N - n);
        std::vector<Cx> rot(static_cast<std::size_t>(D));
        for (int j = 0; j < D; ++j) {
            const int t = j & (block - 1);
            const int x1 = j >> (N - 1);
            const int y = (j >> (N - n)) & ((1 << (n - 1)) - 1);
            const int dst = (y << (N - n + 1)) | (x1 << (N - n)) | t;
            rot[static_cast<std::size_t>(dst)] = mid.amps[static_cast<std::size_t>(j)];
        }
        mid.amps = std::move(rot);
    }
    return partial_fourier(mid, n - 1);
}

DenseOperator balazs_voros_dense(int N) {
    if (N < 1) throw std::invalid_argument("balazs_voros_dense: N must be at least 1");
    const int D = 1 << N;
    const int H = D / 2;
    DenseOperator half = antiperiodic_dft_forward(H);
    DenseOperator block(D);
    for (int j = 0; j < H; ++j)
        for (int k = 0; k < H; ++k) {
            block.at(j, k) = half.at(j, k);
            block.at(H + j, H + k) = half.at(j, k);
        }
    // inverse of a unitary symmetric kernel = its adjoint
    return antiperiodic_dft_forward(D).adjoint().multiply(block);
}

DenseOperator baker_dense_position_rep(const BakerFamilyParams& params) {
    const int N = params.num_qubits;
    const int n = params.position_bits;
    const int D = 1 << N;
    const int P = 1 << (N - n);       // transformed-block size before the step
    const int L = 2 * P;              // and after
    const int reps = 1 << (n - 1);    // identical copies along the kept bits

    DenseOperator out(D);
    const double pref = std::sqrt(2.0) / static_cast<double>(L);
    for (int x1 = 0; x1 <= 1; ++x1) {
        for (int j = 0; j < P; ++j) {
            for (int k = 0; k < P; ++k) {
                for (int l = 0; l < L; ++l) {
                    const double ang =
                        (kPi / P) * ((j + 0.5) * (l + 0.5) + P * x1 * (l + 0.5) -
                                     2.0 * (j + 0.5) * (k + 0.5));
                    const Cx val = std::polar(pref, ang);
                    // dyadic bra/ket labels resolve to these position indices
                    for (int m = 0; m < reps; ++m)
                        out.at(l + m * L, k + m * P + x1 * (D / 2)) += val;
                }
            }
        }
    }
    return out;
}

Cx exact_propagator(const PhasePoint& a, const PhasePoint& b,
                    const BakerFamilyParams& params, double eps,
                    bool exact_normalization) {
    const TorusSpace s = params.space();
    StateVector ket = coherent_state(s, a, eps);
    StateVector bra = coherent_state(s, b, eps);
    Cx val = inner(bra, baker_apply(ket, params));
    if (exact_normalization)
        val /= std::sqrt(normalization_sq(s, a, eps) * normalization_sq(s, b, eps));
    return val;
}

}  // namespace qbaker

#include "qbaker/torus_hilbert.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace qbaker {

namespace {

constexpr int kDenseDimCap = 1 << 10;
constexpr double kPi = std::numbers::pi;

int checked_qubit_count(const TorusSpace& s, const char* who) {
    auto N = s.qubit_count();
    if (!N) throw std::invalid_argument(std::string(who) + ": dimension is not a power of two");
    return *N;
}

void check_same_space(const StateVector& a, const StateVector& b, const char* who) {
    if (a.space != b.space)
        throw std::invalid_argument(std::string(who) + ": states live on different spaces");
}

}  // namespace

TorusSpace::TorusSpace(int D, double alpha_, double beta_)
    : dim(D), alpha(alpha_), beta(beta_) {
    if (D < 2) throw std::invalid_argument("TorusSpace: dim must be >= 2");
    if (!(alpha >= 0.0 && alpha < 1.0) || !(beta >= 0.0 && beta < 1.0))
        throw std::invalid_argument("TorusSpace: boundary phases must lie in [0,1)");
}

TorusSpace TorusSpace::qubits(int N) {
    if (N < 1 || N > 30) throw std::invalid_argument("TorusSpace::qubits: N out of range");
    return antiperiodic(1 << N);
}

double TorusSpace::hbar() const { return 1.0 / (2.0 * kPi * dim); }

std::optional<int> TorusSpace::qubit_count() const {
    if (!detail::is_pow2(static_cast<std::size_t>(dim))) return std::nullopt;
    int N = 0;
    while ((1 << N) < dim) ++N;
    return N;
}

StateVector::StateVector(const TorusSpace& s, std::vector<Cx> a)
    : space(s), amps(std::move(a)) {
    if (static_cast<int>(amps.size()) != s.dim)
        throw std::invalid_argument("StateVector: amplitude count does not match dim");
}

StateVector StateVector::basis(const TorusSpace& s, int j) {
    if (j < 0 || j >= s.dim) throw std::invalid_argument("StateVector::basis: index out of range");
    StateVector v(s);
    v.amps[j] = Cx{1.0, 0.0};
    return v;
}

Cx inner(const StateVector& lhs, const StateVector& rhs) {
    check_same_space(lhs, rhs, "inner");
    Cx acc{0.0, 0.0};
    for (int j = 0; j < lhs.dim(); ++j) acc += std::conj(lhs.amps[j]) * rhs.amps[j];
    return acc;
}

double norm(const StateVector& s) {
    double acc = 0.0;
    for (const Cx& c : s.amps) acc += std::norm(c);
    return std::sqrt(acc);
}

DenseOperator::DenseOperator(int d) : dim(d) {
    if (d < 1) throw std::invalid_argument("DenseOperator: dim must be positive");
    if (d > kDenseDimCap)
        throw std::invalid_argument("DenseOperator: dense matrices are capped at dim 1024");
    a.assign(static_cast<std::size_t>(d) * d, Cx{0.0, 0.0});
}

DenseOperator DenseOperator::identity(int d) {
    DenseOperator m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Cx{1.0, 0.0};
    return m;
}

StateVector DenseOperator::apply(const StateVector& s) const {
    if (s.dim() != dim) throw std::invalid_argument("DenseOperator::apply: dimension mismatch");
    StateVector out(s.space);
    for (int r = 0; r < dim; ++r) {
        Cx acc{0.0, 0.0};
        const Cx* row = a.data() + static_cast<std::size_t>(r) * dim;
        for (int c = 0; c < dim; ++c) acc += row[c] * s.amps[c];
        out.amps[r] = acc;
    }
    return out;
}

DenseOperator DenseOperator::multiply(const DenseOperator& rhs) const {
    if (rhs.dim != dim) throw std::invalid_argument("DenseOperator::multiply: dimension mismatch");
    DenseOperator out(dim);
    for (int r = 0; r < dim; ++r) {
        const Cx* lrow = a.data() + static_cast<std::size_t>(r) * dim;
        Cx* orow = out.a.data() + static_cast<std::size_t>(r) * dim;
        for (int k = 0; k < dim; ++k) {
            const Cx l = lrow[k];
            if (l == Cx{0.0, 0.0}) continue;
            const Cx* rrow = rhs.a.data() + static_cast<std::size_t>(k) * dim;
            for (int c = 0; c < dim; ++c) orow[c] += l * rrow[c];
        }
    }
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

double DenseOperator::max_abs_diff(const DenseOperator& rhs) const {
    if (rhs.dim != dim) throw std::invalid_argument("DenseOperator::max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - rhs.a[i]));
    return m;
}

double DenseOperator::unitarity_error() const {
    return adjoint().multiply(*this).max_abs_diff(identity(dim));
}

void DenseOperator::write_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("DenseOperator::write_csv: cannot open " + path);
    f << "# dim=" << dim << " row-major re,im pairs\n";
    char buf[64];
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            const Cx& v = at(r, c);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
            f << buf << (c + 1 == dim ? '\n' : ',');
        }
    }
    if (!f) throw std::runtime_error("DenseOperator::write_csv: write failed for " + path);
}

namespace {

// Shared worker for the full transform and its inverse. sign = +1 forward.
StateVector fourier_full_impl(const StateVector& s, int sign) {
    const int D = s.dim();
    const double alpha = s.space.alpha, beta = s.space.beta;
    // forward kernel (j+beta)(k+alpha) = jk + j*alpha + k*beta + alpha*beta;
    // the inverse is the adjoint, which transposes the kernel and therefore
    // swaps which boundary phase rides on the input vs the output index
    const double pre = sign > 0 ? beta : alpha;
    const double post = sign > 0 ? alpha : beta;
    std::vector<Cx> work(s.amps);
    for (int k = 0; k < D; ++k)
        work[k] *= std::polar(1.0, sign * 2.0 * kPi * k * pre / D);
    detail::dft(work.data(), static_cast<std::size_t>(D), sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(D));
    const Cx global = std::polar(scale, sign * 2.0 * kPi * alpha * beta / D);
    for (int j = 0; j < D; ++j)
        work[j] *= global * std::polar(1.0, sign * 2.0 * kPi * j * post / D);
    return StateVector(s.space, std::move(work));
}

// Half-integer-offset transform on each least-significant block of size M.
// (a+1/2)(x+1/2) = ax + a/2 + x/2 + 1/4
StateVector partial_fourier_impl(const StateVector& s, int n, int sign) {
    const int N = checked_qubit_count(s.space, "partial_fourier");
    if (n < 0 || n > N) throw std::invalid_argument("partial_fourier: n out of range");
    const int M = 1 << (N - n);
    const int blocks = 1 << n;

    std::vector<Cx> half_phase(M);
    for (int t = 0; t < M; ++t)
        half_phase[t] = std::polar(1.0, sign * kPi * t / static_cast<double>(M));

    std::vector<Cx> work(s.amps);
    for (int b = 0; b < blocks; ++b) {
        Cx* blk = work.data() + static_cast<std::size_t>(b) * M;
        for (int t = 0; t < M; ++t) blk[t] *= half_phase[t];
        detail::dft(blk, static_cast<std::size_t>(M), sign);
        for (int t = 0; t < M; ++t) blk[t] *= half_phase[t];
    }
    const Cx global =
        std::polar(1.0 / std::sqrt(static_cast<double>(M)), sign * kPi / (2.0 * M));
    for (Cx& c : work) c *= global;
    return StateVector(s.space, std::move(work));
}

}  // namespace

StateVector fourier_full(const StateVector& s) { return fourier_full_impl(s, +1); }
StateVector fourier_full_inverse(const StateVector& s) { return fourier_full_impl(s, -1); }

StateVector partial_fourier(const StateVector& s, int n) {
    return partial_fourier_impl(s, n, +1);
}
StateVector partial_fourier_inverse(const StateVector& s, int n) {
    return partial_fourier_impl(s, n, -1);
}

StateVector pf_basis_state(const TorusSpace& s, const std::vector<int>& x_bits,
                           const std::vector<int>& a_bits) {
    const int N = checked_qubit_count(s, "pf_basis_state");
    const int n = static_cast<int>(x_bits.size());
    if (n + static_cast<int>(a_bits.size()) != N)
        throw std::invalid_argument("pf_basis_state: bit counts must sum to the qubit count");
    int j = 0;
    for (int b : x_bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("pf_basis_state: bits must be 0 or 1");
        j = (j << 1) | b;
    }
    for (int b : a_bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("pf_basis_state: bits must be 0 or 1");
        j = (j << 1) | b;
    }
    return partial_fourier(StateVector::basis(s, j), n);
}

DenseOperator fourier_full_dense_kernel(const TorusSpace& s) {
    DenseOperator m(s.dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(s.dim));
    for (int j = 0; j < s.dim; ++j)
        for (int k = 0; k < s.dim; ++k)
            m.at(j, k) =
                std::polar(scale, 2.0 * kPi * (j + s.beta) * (k + s.alpha) / s.dim);
    return m;
}

DenseOperator partial_fourier_dense_kernel(const TorusSpace& s, int n) {
    const int N = checked_qubit_count(s, "partial_fourier_dense_kernel");
    if (n < 0 || n > N) throw std::invalid_argument("partial_fourier_dense_kernel: n out of range");
    const int M = 1 << (N - n);
    const int blocks = 1 << n;
    DenseOperator m(s.dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(M));
    for (int b = 0; b < blocks; ++b)
        for (int x = 0; x < M; ++x)
            for (int a = 0; a < M; ++a)
                m.at(b * M + x, b * M + a) =
                    std::polar(scale, 2.0 * kPi * (x + 0.5) * (a + 0.5) / M);
    return m;
}

DenseOperator dense_from_apply(const TorusSpace& s,
                               const std::function<StateVector(const StateVector&)>& op) {
    DenseOperator m(s.dim);
    for (int c = 0; c < s.dim; ++c) {
        StateVector col = op(StateVector::basis(s, c));
        for (int r = 0; r < s.dim; ++r) m.at(r, c) = col.amps[r];
    }
    return m;
}

}  // namespace qbaker

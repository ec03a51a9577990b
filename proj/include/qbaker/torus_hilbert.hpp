#ifndef QBAKER_TORUS_HILBERT_HPP
#define QBAKER_TORUS_HILBERT_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qbaker {

using Cx = std::complex<double>;

// Finite position representation of a particle on the unit torus.
//
// Dimension D fixes the effective Planck constant through 2*pi*hbar*D = 1.
// Position eigenvalues sit at q_j = (j + beta)/D and momentum eigenvalues at
// p_k = (k + alpha)/D; alpha and beta are the boundary phases picked up on
// winding once around the torus in momentum resp. position. The quantized
// baker family lives on the antiperiodic member alpha = beta = 1/2 with
// D = 2^N.
struct TorusSpace {
    int dim;        // D >= 2
    double alpha;   // momentum boundary phase, in [0, 1)
    double beta;    // position boundary phase, in [0, 1)

    TorusSpace(int D, double alpha_, double beta_);

    static TorusSpace antiperiodic(int D) { return TorusSpace(D, 0.5, 0.5); }
    // D = 2^N qubit register, antiperiodic boundaries.
    static TorusSpace qubits(int N);

    double hbar() const;
    // N such that D = 2^N, when D is a power of two.
    std::optional<int> qubit_count() const;

    double position_value(int j) const { return (j + beta) / dim; }
    double momentum_value(int k) const { return (k + alpha) / dim; }

    bool operator==(const TorusSpace& o) const {
        return dim == o.dim && alpha == o.alpha && beta == o.beta;
    }
    bool operator!=(const TorusSpace& o) const { return !(*this == o); }
};

// Wavefunction in the position basis: amps[j] = <q_j|psi>.
struct StateVector {
    TorusSpace space;
    std::vector<Cx> amps;

    explicit StateVector(const TorusSpace& s) : space(s), amps(s.dim) {}
    StateVector(const TorusSpace& s, std::vector<Cx> a);

    static StateVector basis(const TorusSpace& s, int j);

    int dim() const { return space.dim; }
};

Cx inner(const StateVector& lhs, const StateVector& rhs);  // <lhs|rhs>
double norm(const StateVector& s);

// Row-major dense matrix in the position basis. Verification-path only;
// construction is refused above dim 2^10.
struct DenseOperator {
    int dim;
    std::vector<Cx> a;

    explicit DenseOperator(int d);
    static DenseOperator identity(int d);

    Cx& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    const Cx& at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }

    StateVector apply(const StateVector& s) const;
    DenseOperator multiply(const DenseOperator& rhs) const;
    DenseOperator adjoint() const;

    double max_abs_diff(const DenseOperator& rhs) const;
    // max-entry deviation of A^dagger A from the identity
    double unitarity_error() const;

    // Row-major "re,im" pairs, one matrix row per CSV row.
    void write_csv(const std::string& path) const;
};

// Full finite Fourier transform: amps'[j] = sum_k D^{-1/2}
// exp[2 pi i (j+beta)(k+alpha)/D] amps[k]. Maps the k-th position basis
// vector onto the k-th momentum eigenvector.
StateVector fourier_full(const StateVector& s);
StateVector fourier_full_inverse(const StateVector& s);

// Partial Fourier transform on a D = 2^N register: the n most significant
// qubits pass through untouched, the least significant block of size
// M = 2^{N-n} is transformed with the half-integer-offset kernel
// M^{-1/2} exp[2 pi i (a+1/2)(x+1/2)/M]. n = 0 is the full transform,
// n = N multiplies by the global phase i.
StateVector partial_fourier(const StateVector& s, int n);
StateVector partial_fourier_inverse(const StateVector& s, int n);

// Basis state labeled by n pass-through bits x (position side) and N-n
// transformed bits a (momentum side): the computational basis vector with
// index built from bits [x_1..x_n a_1..a_{N-n}] (most significant first),
// pushed through the partial transform that keeps n bits.
StateVector pf_basis_state(const TorusSpace& s, const std::vector<int>& x_bits,
                           const std::vector<int>& a_bits);

// Literal kernel constructions, kept free of the fast transform path so the
// two can be compared as independent routes.
DenseOperator fourier_full_dense_kernel(const TorusSpace& s);
DenseOperator partial_fourier_dense_kernel(const TorusSpace& s, int n);

// Dense matrix of an arbitrary operator, column by column.
DenseOperator dense_from_apply(const TorusSpace& s,
                               const std::function<StateVector(const StateVector&)>& op);

}  // namespace qbaker

#endif

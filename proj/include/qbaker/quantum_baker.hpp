#ifndef QBAKER_QUANTUM_BAKER_HPP
#define QBAKER_QUANTUM_BAKER_HPP

#include <vector>

#include "qbaker/coherent.hpp"
#include "qbaker/torus_hilbert.hpp"

namespace qbaker {

// One member of the quantized baker family on N qubits: n of them stay in the
// position representation, the remaining N - n are transformed. n = 1 is the
// Balazs-Voros map, n = N the purely classical-shift end of the family.
struct BakerFamilyParams {
    int num_qubits;     // N
    int position_bits;  // n, 1 <= n <= N

    static BakerFamilyParams from_n(int N, int n);
    // theta = 1 family slice: n = N - r
    static BakerFamilyParams from_r(int N, int r);

    int momentum_bits() const { return num_qubits - position_bits; }
    TorusSpace space() const { return TorusSpace::qubits(num_qubits); }
};

// Semiclassical limit n = theta N + s walked along a sequence of register
// sizes. theta is kept rational so membership is exact; N values for which
// theta N + s is not an integer in [1, N] are rejected, never rounded.
struct LimitPath {
    long theta_num;
    long theta_den;
    int s;

    LimitPath(long num, long den, int s_);

    int n_of(int N) const;
    std::vector<BakerFamilyParams> family(const std::vector<int>& Ns) const;
};

// Matrix-free application of the family member: undo the n-bit partial
// transform, rotate the leading position bit down to the transformed block,
// redo the (n-1)-bit transform. On mixed basis states this is exactly the
// one-symbol shift: (x1..xn; a1..) -> (x2..xn; x1, a1, ..). O(D log D).
StateVector baker_apply(const StateVector& state, const BakerFamilyParams& params);

// Original block construction: inverse full DFT times two half-size DFT
// blocks, all with the antiperiodic half-integer offsets and the forward
// (negative-exponent) transform convention. Equals the n = 1 family member.
DenseOperator balazs_voros_dense(int N);

// Position-representation matrix assembled from the literal quadruple sum
// over bra/ket dyadic labels; independent of the transform pipeline, so it
// serves as the dense oracle for baker_apply.
DenseOperator baker_dense_position_rep(const BakerFamilyParams& params);

// Coherent-state matrix element <b| B |a>. With exact_normalization each
// packet is divided by its theta-product norm instead of the unity
// convention.
Cx exact_propagator(const PhasePoint& a, const PhasePoint& b,
                    const BakerFamilyParams& params, double eps = kDefaultEps,
                    bool exact_normalization = false);

}  // namespace qbaker

#endif

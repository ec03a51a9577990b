#ifndef QBAKER_CLASSICAL_HPP
#define QBAKER_CLASSICAL_HPP

#include <complex>
#include <vector>

namespace qbaker {

// Classical baker's map on the unit torus and its complexified bookkeeping.

struct ClassicalPoint {
    double q;
    double p;
};

// (q, p) -> (2q - floor(2q), (p + floor(2q))/2). The discontinuity q = 1/2
// belongs to the upper branch: floor(2q) = 1 there.
ClassicalPoint baker_step(const ClassicalPoint& pt);

// Same map on a = q + ip: b = (5/4) a + (3/4) conj(a) + (i/2 - 1) floor(a + conj(a)).
std::complex<double> baker_step_complex(std::complex<double> a);

// Generating function of one baker step as a function of the independent
// variables (bstar, a). Holomorphic in each argument on either side of the
// branch line; a + conj(a) integral is out of domain. Its mixed second
// derivative is the constant 4/5.
std::complex<double> generating_W(std::complex<double> bstar, std::complex<double> a);

// Finite two-sided symbol string  b[0] .. b[dot-1] . b[dot] .. b[len-1],
// momentum bits to the left of the dot (nearest bit most significant),
// position bits to the right. Bits beyond the window are simply absent:
// precision is limited to the window length by construction.
struct SymbolWindow {
    std::vector<int> bits;
    int dot;  // 0 <= dot <= bits.size(); number of bits left of the dot
};

// One baker step = move the dot right by one. The window does not grow;
// shifting with the dot already at the right end is an error.
SymbolWindow shift_symbols(const SymbolWindow& w);

}  // namespace qbaker

#endif

#include "qbaker/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace qbaker {

ClassicalPoint baker_step(const ClassicalPoint& pt) {
    if (!(pt.q >= 0.0 && pt.q < 1.0) || !(pt.p >= 0.0 && pt.p < 1.0))
        throw std::invalid_argument("baker_step: point must lie in [0,1)^2");
    const double s = std::floor(2.0 * pt.q);
    return {2.0 * pt.q - s, (pt.p + s) / 2.0};
}

std::complex<double> baker_step_complex(std::complex<double> a) {
    const double s = std::floor(2.0 * a.real());
    return 1.25 * a + 0.75 * std::conj(a) +
           std::complex<double>(-1.0, 0.5) * s;
}

std::complex<double> generating_W(std::complex<double> bstar, std::complex<double> a) {
    const double twice_q = 2.0 * a.real();  // a + conj(a)
    if (twice_q == std::nearbyint(twice_q))
        throw std::domain_error("generating_W: a + conj(a) is integral (branch line)");
    const double s = std::floor(twice_q);
    const std::complex<double> i{0.0, 1.0};
    return (3.0 * bstar * bstar + 8.0 * a * bstar - 3.0 * a * a) / 10.0 +
           0.8 * (1.0 + 0.5 * i) * (a + i * bstar - 0.5) * s;
}

SymbolWindow shift_symbols(const SymbolWindow& w) {
    if (w.dot < 0 || w.dot > static_cast<int>(w.bits.size()))
        throw std::invalid_argument("shift_symbols: dot outside the window");
    for (int b : w.bits)
        if (b != 0 && b != 1) throw std::invalid_argument("shift_symbols: bits must be 0 or 1");
    if (w.dot == static_cast<int>(w.bits.size()))
        throw std::invalid_argument("shift_symbols: dot already at the right end");
    return SymbolWindow{w.bits, w.dot + 1};
}

}  // namespace qbaker

#ifndef QBAKER_SELFTEST_HPP
#define QBAKER_SELFTEST_HPP

#include <string>
#include <vector>

namespace qbaker {

struct SelftestOptions {
    int max_qubits = 10;         // matrix-free checks run up to this register size
    double eps = 1e-14;          // packet/theta truncation tolerance
    unsigned long seed = 12345;  // random phase-space points and states
};

struct SelftestRow {
    std::string name;
    double worst;      // largest residual seen by the check
    double tolerance;  // pinned pass threshold
    bool pass;
};

// Runs the whole invariant suite: transform unitarity and endpoints, dense
// oracles for the map family, packet identities, generating-function finite
// differences, propagator-form equivalence and hump normalization. Dense
// checks are capped at min(max_qubits, their own cost ceiling).
std::vector<SelftestRow> run_selftest(const SelftestOptions& opt);

bool all_pass(const std::vector<SelftestRow>& rows);

}  // namespace qbaker

#endif

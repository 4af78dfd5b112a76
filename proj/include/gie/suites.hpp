#ifndef GIE_SUITES_HPP
#define GIE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gie {

struct CheckResult {
    std::string name;
    int passed = 0;
    int total = 0;
    std::string detail;

    bool ok() const { return total > 0 && passed == total; }
};

// Compound-matrix, star and 3x3 Cayley-Hamilton identities on random matrices.
std::vector<CheckResult> matrix_identity_suite(std::uint64_t seed, int trials);

// Gaussian partition towers for n = 1..4: supplementary compounds and the
// product identity with the unstarred levels.
std::vector<CheckResult> tower_suite(std::uint64_t seed, int trials);

// Closed form versus brute force, all blocks and A0, on regular random specs.
CheckResult oracle_equivalence(int n, int trials, std::uint64_t seed);

} // namespace gie

#endif

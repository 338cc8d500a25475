#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rlk {

struct VerifyOptions {
    int max_n = 9;
    int max_j = 15;
    std::uint64_t seed = 0x524c4b;
};

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;  // first failing case, empty when clean

    bool pass() const { return failures == 0; }
};

/**
 * Replays every identity the library is built on, exactly:
 *   1. mod-2 Conway closed form, odd n (through the recursive expansions)
 *   2. mod-2 Conway closed form, even n (direct notation)
 *   3. torus-link Conway polynomials and the Fibonacci matrix-power identity
 *   4. Alexander alternating form, symmetry, and |value at 1| = 1
 *   5. the Moebius matrix identities behind the expansions
 *   6. the three Fibonacci-ratio continued-fraction families
 *   7. even-expansion round trip on random fractions
 *   8. knot/link classification against determinant parity
 *   9. Lissajous obstruction coverage and open cases
 * Sweeps 1, 2 and 9 scale with max_n/max_j; the others run at fixed ranges.
 */
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace rlk

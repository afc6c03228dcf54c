#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Full oracle verification sweep: compares the analytic spectra and entropies
// against the brute-force path across chain lengths, sectors, block sizes and
// block placements, and checks the Hamiltonian and symmetry claims.

namespace heisentropy::oracle {

struct FamilyResult {
    std::string name;
    bool passed = false;
    long cases = 0;
    double worst = 0.0;      // largest deviation encountered
    double tolerance = 0.0;
    std::string detail;      // context of the worst deviation
};

struct VerificationReport {
    std::vector<FamilyResult> families;
    bool all_passed() const;
};

struct VerifyOptions {
    int max_chain_length = 12;          // capped at kMaxChainLength
    unsigned seed = 0x5eed5u;           // drives random blocks and weights
    double eigenvalue_tolerance = 1e-10;
    double entropy_tolerance = 1e-9;
};

// Runs every family; when `progress` is non-null, one line per family is
// streamed as it completes. The sweep over cases is deterministic for a
// fixed seed.
VerificationReport run_verification(const VerifyOptions& options = {},
                                    std::ostream* progress = nullptr);

}  // namespace heisentropy::oracle

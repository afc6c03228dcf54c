#pragma once

#include <cstdint>
#include <span>

#include "heisentropy/spectrum.hpp"

// Von Neumann / Shannon block entropies in bits, the closed-form large-block
// asymptotics, and the log-prefactor fit that exposes how the growth rate
// moves between 1/2 (fixed sector) and 1 (equal-weight mixture).

namespace heisentropy {

// Base-2 entropy. For any block spectrum of size n, 0 <= bits <= log2(n+1).
struct EntropyValue {
    double bits;
};

// -sum lambda_k log2 lambda_k, with 0 log 0 = 0. Zero entries are skipped and
// the remaining terms are summed in a canonical (sorted) order, so spectra
// with identical nonzero multisets produce identical bits.
// Throws std::invalid_argument when |sum lambda - 1| > 1e-9.
EntropyValue shannon_entropy_bits(const Spectrum& s);

// Large-block closed form for a fixed sector at filling p in a chain of
// length L: (1/2) log2(2 pi e p q) + (1/2) log2(n (L-n) / L).
// Accuracy degrades when effective_npq(L, n, p) drops below
// small_npq_threshold; callers that care should check that flag.
// Throws std::domain_error for p outside (0, 1) or n outside [1, L-1].
EntropyValue asymptotic_entropy_finite(std::int64_t chain_length, std::int64_t block_size,
                                       double filling);

// L -> infinity limit: (1/2) log2(2 pi e p q) + (1/2) log2 n.
EntropyValue asymptotic_entropy_infinite(std::int64_t block_size, double filling);

// log2(n+1): the equal-weight mixture entropy, exact for every n and L.
EntropyValue equal_weight_entropy(std::int64_t block_size);

// Validity scale of the normal approximation behind the asymptotic forms.
double effective_npq(std::int64_t chain_length, std::int64_t block_size, double filling);
double effective_npq(std::int64_t block_size, double filling);
inline constexpr double kSmallNpqThreshold = 10.0;

struct FitPoint {
    std::int64_t block_size;
    double entropy_bits;
};

struct LogFit {
    double gamma;      // slope of S against log2 n
    double intercept;
};

// Ordinary least squares of S = gamma log2 n + c. Needs >= 3 points with
// block sizes >= 2 and non-degenerate abscissae.
LogFit fit_log_prefactor(std::span<const FitPoint> points);

}  // namespace heisentropy

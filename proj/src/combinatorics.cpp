#include "heisentropy/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace heisentropy {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr long double kHalfLogTwoPi = 0.918938533204672741780329736406L;

// Largest total for which binom(total, chosen) fits in 64 bits with headroom.
constexpr std::int64_t kExactPathLimit = 60;

// binom(total, chosen) in exact integer arithmetic; requires total <= 60
// and 0 <= chosen <= total. Every intermediate product stays below 2^62.
std::uint64_t exact_binomial(std::int64_t total, std::int64_t chosen) {
    chosen = std::min(chosen, total - chosen);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= chosen; ++i) {
        r = r * static_cast<std::uint64_t>(total - chosen + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// ln Gamma(x) carried in extended precision. Differences of values as large
// as 1.3e7 must come out with ~1e-12 absolute error for spectra at L ~ 1e6
// to normalize to 1e-9; rounding each term to double first would already
// cost ~1e-9 per term.
long double log_gamma_extended(double x) {
    const double zm = x - 1.0;
    // The series cancellation costs ~6 ulp; everything else about it is benign.
    double series = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) {
        series += kLanczosCoef[i] / (zm + i);
    }
    const long double t = static_cast<long double>(zm) + 7.5L;
    long double r = (static_cast<long double>(zm) + 0.5L) * std::log(t) - t;
    r += kHalfLogTwoPi + static_cast<long double>(std::log(series));
    return r;
}

// ln(m!) for integer m, cached for the small arguments that dominate scan
// and mixture workloads. Cached values are bit-identical to live calls.
constexpr std::int64_t kLogFactorialCacheLimit = 16384;

const std::vector<long double>& log_factorial_cache() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(kLogFactorialCacheLimit + 1);
        for (std::int64_t m = 0; m <= kLogFactorialCacheLimit; ++m) {
            t[static_cast<std::size_t>(m)] = log_gamma_extended(static_cast<double>(m + 1));
        }
        return t;
    }();
    return table;
}

long double log_factorial(std::int64_t m) {
    if (m <= kLogFactorialCacheLimit) {
        return log_factorial_cache()[static_cast<std::size_t>(m)];
    }
    return log_gamma_extended(static_cast<double>(m + 1));
}

// ln binom(total, chosen) in extended precision, for callers that combine
// several binomials before rounding to double. Requires 0 <= chosen <= total.
long double log_binomial_extended(std::int64_t total, std::int64_t chosen) {
    if (chosen == 0 || chosen == total) {
        return 0.0L;
    }
    if (total <= kExactPathLimit) {
        return std::log(static_cast<long double>(exact_binomial(total, chosen)));
    }
    return log_factorial(total) - log_factorial(chosen) - log_factorial(total - chosen);
}

}  // namespace

double log_gamma(double x) {
    if (!(x >= 1.0)) {
        throw std::domain_error("log_gamma: argument must be >= 1");
    }
    return static_cast<double>(log_gamma_extended(x));
}

LogProb log_binomial(std::int64_t total, std::int64_t chosen) {
    if (total < 0) {
        throw std::domain_error("log_binomial: total must be nonnegative");
    }
    if (chosen < 0 || chosen > total) {
        return LogProb::zero();
    }
    return LogProb(static_cast<double>(log_binomial_extended(total, chosen)));
}

LogProb hypergeometric_log_pmf(std::int64_t chain_length, std::int64_t up_spins,
                               std::int64_t block_size, std::int64_t block_up_spins) {
    if (chain_length < 0 || up_spins < 0 || up_spins > chain_length) {
        throw std::domain_error("hypergeometric_log_pmf: need 0 <= N <= L");
    }
    if (block_size < 0 || block_size > chain_length) {
        throw std::domain_error("hypergeometric_log_pmf: need 0 <= n <= L");
    }
    const std::int64_t lo = std::max<std::int64_t>(0, block_size + up_spins - chain_length);
    const std::int64_t hi = std::min(block_size, up_spins);
    if (block_up_spins < lo || block_up_spins > hi) {
        return LogProb::zero();
    }
    // One rounding at the end: the result is a log-probability of modest
    // magnitude, while the intermediate binomials reach ~7e5.
    return LogProb(static_cast<double>(
        log_binomial_extended(block_size, block_up_spins) +
        log_binomial_extended(chain_length - block_size, up_spins - block_up_spins) -
        log_binomial_extended(chain_length, up_spins)));
}

LogProb binomial_log_pmf(std::int64_t block_size, double filling, std::int64_t count) {
    if (block_size < 0) {
        throw std::domain_error("binomial_log_pmf: block size must be nonnegative");
    }
    if (!(filling > 0.0 && filling < 1.0)) {
        throw std::domain_error("binomial_log_pmf: filling must lie in (0, 1)");
    }
    if (count < 0 || count > block_size) {
        return LogProb::zero();
    }
    return LogProb(static_cast<double>(
        log_binomial_extended(block_size, count) +
        static_cast<long double>(count) * static_cast<long double>(std::log(filling)) +
        static_cast<long double>(block_size - count) *
            static_cast<long double>(std::log1p(-filling))));
}

}  // namespace heisentropy

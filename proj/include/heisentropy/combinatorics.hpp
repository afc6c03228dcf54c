#pragma once

#include <cstdint>

#include "heisentropy/log_prob.hpp"

// Log-domain binomial coefficients and classical PMFs.
//
// Convention used throughout: binom(total, chosen) = total! / (chosen! (total-chosen)!).
// Out-of-range `chosen` is a defined probability zero (-inf), not an error, so
// sums over impossible terms vanish silently.

namespace heisentropy {

// ln Gamma(x) for x >= 1. Lanczos approximation evaluated with extended
// internal precision; |relative error| < 1e-12 over the whole range
// (absolute error stays below ~1e-11 even near x = 1e6 + 1).
double log_gamma(double x);

// ln binom(total, chosen). Exact 64-bit integer evaluation for total <= 60,
// log-gamma above. -inf when chosen < 0 or chosen > total.
LogProb log_binomial(std::int64_t total, std::int64_t chosen);

// ln of the hypergeometric PMF binom(n,k) binom(L-n, N-k) / binom(L,N):
// probability that a block of n sites holds k of the N up-spins.
// -inf outside the support [max(0, n+N-L), min(n, N)].
// Throws std::domain_error unless 0 <= N <= L and 0 <= n <= L.
LogProb hypergeometric_log_pmf(std::int64_t chain_length, std::int64_t up_spins,
                               std::int64_t block_size, std::int64_t block_up_spins);

// ln of binom(n,k) p^k (1-p)^(n-k). -inf outside [0, n].
// Throws std::domain_error for p outside (0, 1) or n < 0.
LogProb binomial_log_pmf(std::int64_t block_size, double filling, std::int64_t count);

}  // namespace heisentropy

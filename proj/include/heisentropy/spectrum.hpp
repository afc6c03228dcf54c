#pragma once

#include <cstdint>
#include <vector>

#include "heisentropy/log_prob.hpp"

// Eigenvalue spectra of the reduced density matrix of a block of n spins in
// the symmetric ground-state manifold: fixed sector, general mixture,
// equal-weight mixture, and the L -> infinity limit at fixed filling.

namespace heisentropy {

// Coordinates of a ground-state sector computation: chain of L spins,
// N of them up, block of n sites.
struct SectorSpec {
    std::int64_t chain_length;  // L >= 1
    std::int64_t up_spins;      // N, 0 <= N <= L
    std::int64_t block_size;    // n, 0 <= n <= L

    SectorSpec(std::int64_t length, std::int64_t ups, std::int64_t block);

    double filling() const;                // p = N/L
    double hole_filling() const;           // q = 1 - p
    double magnetization_per_site() const; // y = p - 1/2
    // n = 0 and n = L carry zero entropy; allowed, but flagged here.
    bool trivial_block() const { return block_size == 0 || block_size == chain_length; }
};

// Ensemble weights alpha_0..alpha_L over the ground-state multiplet.
class WeightVector {
public:
    // Requires every entry >= 0 and sum within 1e-12 of 1.
    explicit WeightVector(std::vector<double> alphas);

    // Point mass on sector N: isolates a single multiplet component.
    static WeightVector delta(std::int64_t chain_length, std::int64_t up_spins);
    // Uniform 1/(L+1) over all components; the SU(2)-preserving choice.
    static WeightVector uniform(std::int64_t chain_length);
    // Rescales arbitrary nonnegative weights to unit sum.
    static WeightVector normalized(std::vector<double> raw);

    std::int64_t chain_length() const { return static_cast<std::int64_t>(alphas_.size()) - 1; }
    double at(std::int64_t up_spins) const { return alphas_[static_cast<std::size_t>(up_spins)]; }
    const std::vector<double>& alphas() const { return alphas_; }

private:
    struct already_valid {};
    WeightVector(std::vector<double> alphas, already_valid) : alphas_(std::move(alphas)) {}
    std::vector<double> alphas_;
};

enum class Provenance { sector, mixed, equal_weight, thermodynamic, oracle };

// Reduced-density-matrix eigenvalues, stored in the log domain over the full
// index range k = 0..n with explicit zeros outside the support.
class Spectrum {
public:
    Spectrum(std::vector<LogProb> log_values, Provenance origin)
        : log_values_(std::move(log_values)), origin_(origin) {}

    std::size_t size() const { return log_values_.size(); }
    LogProb log_at(std::size_t k) const { return log_values_[k]; }
    double prob_at(std::size_t k) const { return log_values_[k].prob(); }
    const std::vector<LogProb>& log_values() const { return log_values_; }
    Provenance origin() const { return origin_; }

    std::vector<double> probabilities() const;
    std::size_t nonzero_count() const;
    double normalization_error() const;  // |sum of probabilities - 1|

private:
    std::vector<LogProb> log_values_;
    Provenance origin_;
};

// Entry k = hypergeometric PMF of k up-spins in the block, k = 0..n.
Spectrum sector_spectrum(const SectorSpec& spec);

// Entry k = log(sum_N alpha_N lambda_k(L, n, N)) by max-shifted log-sum-exp;
// valid because every sector's reduced matrix is diagonal in the same
// symmetric block basis. Throws std::invalid_argument on length mismatch.
Spectrum mixed_spectrum(std::int64_t chain_length, std::int64_t block_size,
                        const WeightVector& weights);

// n + 1 identical entries 1/(n+1).
Spectrum equal_weight_spectrum(std::int64_t block_size);

// Entry k = binomial PMF at filling p; the L -> infinity sector spectrum.
Spectrum thermodynamic_spectrum(std::int64_t block_size, double filling);

}  // namespace heisentropy

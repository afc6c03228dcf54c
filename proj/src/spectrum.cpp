#include "heisentropy/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "heisentropy/combinatorics.hpp"

namespace heisentropy {

SectorSpec::SectorSpec(std::int64_t length, std::int64_t ups, std::int64_t block)
    : chain_length(length), up_spins(ups), block_size(block) {
    if (chain_length < 1) {
        throw std::domain_error("SectorSpec: chain length must be positive");
    }
    if (up_spins < 0 || up_spins > chain_length) {
        throw std::domain_error("SectorSpec: need 0 <= N <= L");
    }
    if (block_size < 0 || block_size > chain_length) {
        throw std::domain_error("SectorSpec: need 0 <= n <= L");
    }
}

double SectorSpec::filling() const {
    return static_cast<double>(up_spins) / static_cast<double>(chain_length);
}

double SectorSpec::hole_filling() const { return 1.0 - filling(); }

double SectorSpec::magnetization_per_site() const { return filling() - 0.5; }

namespace {

constexpr double kWeightSumTolerance = 1e-12;

void check_weights(const std::vector<double>& alphas) {
    if (alphas.empty()) {
        throw std::invalid_argument("WeightVector: needs at least one entry");
    }
    double sum = 0.0;
    for (double a : alphas) {
        if (!(a >= 0.0)) {
            throw std::domain_error("WeightVector: weights must be nonnegative");
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        throw std::domain_error("WeightVector: weights must sum to 1 (got " +
                                std::to_string(sum) + ")");
    }
}

}  // namespace

WeightVector::WeightVector(std::vector<double> alphas) : alphas_(std::move(alphas)) {
    check_weights(alphas_);
}

WeightVector WeightVector::delta(std::int64_t chain_length, std::int64_t up_spins) {
    if (chain_length < 0 || up_spins < 0 || up_spins > chain_length) {
        throw std::domain_error("WeightVector::delta: need 0 <= N <= L");
    }
    std::vector<double> a(static_cast<std::size_t>(chain_length) + 1, 0.0);
    a[static_cast<std::size_t>(up_spins)] = 1.0;
    return WeightVector(std::move(a), already_valid{});
}

WeightVector WeightVector::uniform(std::int64_t chain_length) {
    if (chain_length < 0) {
        throw std::domain_error("WeightVector::uniform: chain length must be nonnegative");
    }
    std::vector<double> a(static_cast<std::size_t>(chain_length) + 1,
                          1.0 / static_cast<double>(chain_length + 1));
    return WeightVector(std::move(a), already_valid{});
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
    double sum = 0.0;
    for (double a : raw) {
        if (!(a >= 0.0)) {
            throw std::domain_error("WeightVector::normalized: weights must be nonnegative");
        }
        sum += a;
    }
    if (!(sum > 0.0)) {
        throw std::domain_error("WeightVector::normalized: weights must not be all zero");
    }
    for (double& a : raw) a /= sum;
    return WeightVector(std::move(raw), already_valid{});
}

std::vector<double> Spectrum::probabilities() const {
    std::vector<double> p(log_values_.size());
    for (std::size_t k = 0; k < log_values_.size(); ++k) p[k] = log_values_[k].prob();
    return p;
}

std::size_t Spectrum::nonzero_count() const {
    std::size_t c = 0;
    for (const LogProb& l : log_values_) c += l.is_zero() ? 0 : 1;
    return c;
}

double Spectrum::normalization_error() const {
    // Compensated sum; spectra at L ~ 1e6 have 5e5+1 entries.
    double sum = 0.0, carry = 0.0;
    for (const LogProb& l : log_values_) {
        double y = l.prob() - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return std::abs(sum - 1.0);
}

Spectrum sector_spectrum(const SectorSpec& spec) {
    std::vector<LogProb> vals(static_cast<std::size_t>(spec.block_size) + 1);
    for (std::int64_t k = 0; k <= spec.block_size; ++k) {
        vals[static_cast<std::size_t>(k)] =
            hypergeometric_log_pmf(spec.chain_length, spec.up_spins, spec.block_size, k);
    }
    return Spectrum(std::move(vals), Provenance::sector);
}

Spectrum mixed_spectrum(std::int64_t chain_length, std::int64_t block_size,
                        const WeightVector& weights) {
    if (weights.chain_length() != chain_length) {
        throw std::invalid_argument("mixed_spectrum: weight vector must have L+1 entries");
    }
    if (block_size < 0 || block_size > chain_length) {
        throw std::domain_error("mixed_spectrum: need 0 <= n <= L");
    }

    std::vector<double> log_alpha(static_cast<std::size_t>(chain_length) + 1);
    for (std::int64_t N = 0; N <= chain_length; ++N) {
        double a = weights.at(N);
        log_alpha[static_cast<std::size_t>(N)] =
            a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
    }

    std::vector<LogProb> vals(static_cast<std::size_t>(block_size) + 1);
    std::vector<double> terms(static_cast<std::size_t>(chain_length) + 1);
    for (std::int64_t k = 0; k <= block_size; ++k) {
        // Max-shifted log-sum-exp keeps the normalization at 1e-12 even for
        // mixtures over 1e4+1 sectors.
        double shift = -std::numeric_limits<double>::infinity();
        std::size_t count = 0;
        for (std::int64_t N = 0; N <= chain_length; ++N) {
            double la = log_alpha[static_cast<std::size_t>(N)];
            if (std::isinf(la)) continue;
            LogProb lp = hypergeometric_log_pmf(chain_length, N, block_size, k);
            if (lp.is_zero()) continue;
            double t = la + lp.value;
            terms[count++] = t;
            if (t > shift) shift = t;
        }
        if (count == 0) {
            vals[static_cast<std::size_t>(k)] = LogProb::zero();
            continue;
        }
        double sum = 0.0, carry = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            double y = std::exp(terms[i] - shift) - carry;
            double t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
        vals[static_cast<std::size_t>(k)] = LogProb(shift + std::log(sum));
    }
    return Spectrum(std::move(vals), Provenance::mixed);
}

Spectrum equal_weight_spectrum(std::int64_t block_size) {
    if (block_size < 0) {
        throw std::domain_error("equal_weight_spectrum: block size must be nonnegative");
    }
    std::vector<LogProb> vals(static_cast<std::size_t>(block_size) + 1,
                              LogProb(-std::log(static_cast<double>(block_size + 1))));
    return Spectrum(std::move(vals), Provenance::equal_weight);
}

Spectrum thermodynamic_spectrum(std::int64_t block_size, double filling) {
    if (block_size < 0) {
        throw std::domain_error("thermodynamic_spectrum: block size must be nonnegative");
    }
    if (!(filling > 0.0 && filling < 1.0)) {
        throw std::domain_error("thermodynamic_spectrum: filling must lie in (0, 1)");
    }
    std::vector<LogProb> vals(static_cast<std::size_t>(block_size) + 1);
    for (std::int64_t k = 0; k <= block_size; ++k) {
        vals[static_cast<std::size_t>(k)] = binomial_log_pmf(block_size, filling, k);
    }
    return Spectrum(std::move(vals), Provenance::thermodynamic);
}

}  // namespace heisentropy

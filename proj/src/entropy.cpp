#include "heisentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace heisentropy {

namespace {

constexpr double kNormalizationTolerance = 1e-9;

double half_log2_gaussian_prefactor(double filling) {
    if (!(filling > 0.0 && filling < 1.0)) {
        throw std::domain_error("asymptotic entropy: filling must lie in (0, 1)");
    }
    const double pq = filling * (1.0 - filling);
    return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * pq);
}

}  // namespace

EntropyValue shannon_entropy_bits(const Spectrum& s) {
    std::vector<double> logs;
    logs.reserve(s.size());
    for (const LogProb& l : s.log_values()) {
        if (!l.is_zero()) logs.push_back(l.value);
    }
    std::sort(logs.begin(), logs.end());

    double norm = 0.0, norm_c = 0.0;
    double acc = 0.0, acc_c = 0.0;
    for (double l : logs) {
        const double p = std::exp(l);
        double y = p - norm_c;
        double t = norm + y;
        norm_c = (t - norm) - y;
        norm = t;

        y = p * l - acc_c;
        t = acc + y;
        acc_c = (t - acc) - y;
        acc = t;
    }
    if (std::abs(norm - 1.0) > kNormalizationTolerance) {
        throw std::invalid_argument("shannon_entropy_bits: spectrum is not normalized");
    }
    const double bits = -acc / std::numbers::ln2;
    return EntropyValue{bits < 0.0 ? 0.0 : bits};
}

EntropyValue asymptotic_entropy_finite(std::int64_t chain_length, std::int64_t block_size,
                                       double filling) {
    if (block_size < 1 || block_size > chain_length - 1) {
        throw std::domain_error("asymptotic_entropy_finite: need 1 <= n <= L-1");
    }
    const double geometric = static_cast<double>(block_size) *
                             static_cast<double>(chain_length - block_size) /
                             static_cast<double>(chain_length);
    return EntropyValue{half_log2_gaussian_prefactor(filling) + 0.5 * std::log2(geometric)};
}

EntropyValue asymptotic_entropy_infinite(std::int64_t block_size, double filling) {
    if (block_size < 1) {
        throw std::domain_error("asymptotic_entropy_infinite: need n >= 1");
    }
    return EntropyValue{half_log2_gaussian_prefactor(filling) +
                        0.5 * std::log2(static_cast<double>(block_size))};
}

EntropyValue equal_weight_entropy(std::int64_t block_size) {
    if (block_size < 0) {
        throw std::domain_error("equal_weight_entropy: need n >= 0");
    }
    return EntropyValue{std::log2(static_cast<double>(block_size + 1))};
}

double effective_npq(std::int64_t chain_length, std::int64_t block_size, double filling) {
    return static_cast<double>(block_size) * filling * (1.0 - filling) *
           static_cast<double>(chain_length - block_size) / static_cast<double>(chain_length);
}

double effective_npq(std::int64_t block_size, double filling) {
    return static_cast<double>(block_size) * filling * (1.0 - filling);
}

LogFit fit_log_prefactor(std::span<const FitPoint> points) {
    if (points.size() < 3) {
        throw std::invalid_argument("fit_log_prefactor: need at least 3 points");
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (const FitPoint& p : points) {
        if (p.block_size < 2) {
            throw std::domain_error("fit_log_prefactor: block sizes must be >= 2");
        }
        mean_x += std::log2(static_cast<double>(p.block_size));
        mean_y += p.entropy_bits;
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());

    double sxx = 0.0, sxy = 0.0;
    for (const FitPoint& p : points) {
        const double dx = std::log2(static_cast<double>(p.block_size)) - mean_x;
        sxx += dx * dx;
        sxy += dx * (p.entropy_bits - mean_y);
    }
    if (!(sxx > 0.0)) {
        throw std::domain_error("fit_log_prefactor: degenerate abscissae");
    }
    const double gamma = sxy / sxx;
    return LogFit{gamma, mean_y - gamma * mean_x};
}

}  // namespace heisentropy

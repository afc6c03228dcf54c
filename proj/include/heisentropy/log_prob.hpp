#pragma once

#include <cmath>
#include <limits>

namespace heisentropy {

// A probability (or probability ratio) stored on the natural-log scale.
// -infinity encodes an exact zero; intermediate ratios may exceed log(1).
struct LogProb {
    double value = -std::numeric_limits<double>::infinity();

    constexpr LogProb() = default;
    constexpr explicit LogProb(double log_value) : value(log_value) {}

    static constexpr LogProb zero() { return LogProb{}; }

    bool is_zero() const { return std::isinf(value) && value < 0; }
    double prob() const { return is_zero() ? 0.0 : std::exp(value); }

    friend bool operator==(LogProb a, LogProb b) { return a.value == b.value; }
};

// log(exp(a) + exp(b)) without leaving the log domain.
inline double log_add(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace heisentropy

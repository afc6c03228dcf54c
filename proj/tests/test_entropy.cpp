#include <stdexcept>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "heisentropy/entropy.hpp"
#include "heisentropy/spectrum.hpp"

using namespace heisentropy;

namespace {

Spectrum raw_spectrum(std::vector<double> probabilities) {
    std::vector<LogProb> logs;
    logs.reserve(probabilities.size());
    for (double p : probabilities) {
        logs.push_back(p > 0.0 ? LogProb(std::log(p)) : LogProb::zero());
    }
    return Spectrum(std::move(logs), Provenance::oracle);
}

double sector_entropy(std::int64_t length, std::int64_t ups, std::int64_t block) {
    return shannon_entropy_bits(sector_spectrum(SectorSpec(length, ups, block))).bits;
}

}  // namespace

TEST_CASE("shannon entropy basics") {
    CHECK(shannon_entropy_bits(raw_spectrum({1.0})).bits == 0.0);
    CHECK(shannon_entropy_bits(raw_spectrum({0.5, 0.5})).bits ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shannon_entropy_bits(raw_spectrum({1.0, 0.0, 0.0})).bits == 0.0);

    // (1/3) log2 6 + (2/3) log2 (3/2), the 4-site half-block value.
    const double expected = std::log2(6.0) / 3.0 + 2.0 / 3.0 * std::log2(1.5);
    CHECK(expected == doctest::Approx(1.2516291673878228).epsilon(1e-15));
    CHECK(shannon_entropy_bits(sector_spectrum(SectorSpec(4, 2, 2))).bits ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("shannon entropy rejects an unnormalized spectrum") {
    CHECK_THROWS_AS(shannon_entropy_bits(raw_spectrum({0.5, 0.49})), std::invalid_argument);
    CHECK_THROWS_AS(shannon_entropy_bits(raw_spectrum({0.7, 0.7})), std::invalid_argument);
    CHECK_NOTHROW(shannon_entropy_bits(raw_spectrum({0.5, 0.5 + 1e-10})));
}

TEST_CASE("asymptotic entropy, finite chain") {
    // 0.5 log2(pi e / 2) + 0.5 log2 50 at the half-filled half block of 200.
    const double expected =
        0.5 * std::log2(std::numbers::pi * std::numbers::e / 2.0) + 0.5 * std::log2(50.0);
    CHECK(asymptotic_entropy_finite(200, 100, 0.5).bits ==
          doctest::Approx(expected).epsilon(1e-15));
    CHECK(expected == doctest::Approx(3.869).epsilon(1e-4));

    CHECK(asymptotic_entropy_finite(200, 100, 0.5).bits ==
          asymptotic_entropy_finite(200, 100, 1.0 - 0.5).bits);
    const double lhs = asymptotic_entropy_finite(500, 70, 0.37).bits;
    const double rhs = asymptotic_entropy_finite(500, 70, 1.0 - 0.37).bits;
    CHECK(std::abs(lhs - rhs) <= 1e-13);

    CHECK_THROWS_AS(asymptotic_entropy_finite(200, 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(asymptotic_entropy_finite(200, 200, 0.5), std::domain_error);
    CHECK_THROWS_AS(asymptotic_entropy_finite(200, 100, 0.0), std::domain_error);
    CHECK_THROWS_AS(asymptotic_entropy_finite(200, 100, 1.0), std::domain_error);
}

TEST_CASE("asymptotic entropy grows with the total length at fixed n, p") {
    double previous = -1.0;
    for (std::int64_t length : {40, 60, 100, 200, 400, 1000}) {
        const double value = asymptotic_entropy_finite(length, 20, 0.5).bits;
        CHECK(value > previous);
        previous = value;
    }
    // The exact sector entropy follows the same ordering.
    previous = -1.0;
    for (std::int64_t length : {40, 60, 100, 200, 400, 1000}) {
        const double value = sector_entropy(length, length / 2, 20);
        CHECK(value > previous);
        previous = value;
    }
}

TEST_CASE("asymptotic entropy, thermodynamic limit") {
    const double expected =
        0.5 * std::log2(std::numbers::pi * std::numbers::e / 2.0) + 0.5 * std::log2(1000.0);
    CHECK(asymptotic_entropy_infinite(1000, 0.5).bits ==
          doctest::Approx(expected).epsilon(1e-15));
    CHECK(expected == doctest::Approx(6.030).epsilon(1e-4));

    // Finite minus infinite is exactly (1/2) log2((L-n)/L), vanishing with L.
    for (std::int64_t length : {100, 1000, 100000}) {
        const double difference = asymptotic_entropy_finite(length, 10, 0.25).bits -
                                  asymptotic_entropy_infinite(10, 0.25).bits;
        const double closed = 0.5 * std::log2(static_cast<double>(length - 10) /
                                              static_cast<double>(length));
        CHECK(difference == doctest::Approx(closed).epsilon(1e-12));
        CHECK(std::abs(difference) < 0.08);
    }
    CHECK(std::abs(asymptotic_entropy_finite(100000, 10, 0.25).bits -
                   asymptotic_entropy_infinite(10, 0.25).bits) < 1e-4);

    // The p-dependence factorizes: a constant offset of (1/2) log2(25/9).
    const double offset = 0.5 * std::log2(25.0 / 9.0);
    for (std::int64_t block : {1, 10, 100, 1000}) {
        CHECK(asymptotic_entropy_infinite(block, 0.5).bits -
                  asymptotic_entropy_infinite(block, 0.1).bits ==
              doctest::Approx(offset).epsilon(1e-12));
    }

    CHECK_THROWS_AS(asymptotic_entropy_infinite(0, 0.5), std::domain_error);
    CHECK_THROWS_AS(asymptotic_entropy_infinite(10, -0.1), std::domain_error);
}

TEST_CASE("equal-weight entropy closed form") {
    CHECK(equal_weight_entropy(0).bits == 0.0);
    CHECK(equal_weight_entropy(1).bits == 1.0);
    CHECK(equal_weight_entropy(7).bits == 3.0);
    CHECK_THROWS_AS(equal_weight_entropy(-1), std::domain_error);

    // Strictly increasing in n, with its maximum at the whole system; the
    // sector entropy instead peaks at the half block.
    const std::int64_t length = 12;
    double previous = -1.0;
    for (std::int64_t block = 0; block <= length; ++block) {
        const double value = equal_weight_entropy(block).bits;
        CHECK(value > previous);
        previous = value;
    }
    CHECK(sector_entropy(length, 6, length / 2) > sector_entropy(length, 6, length - 1));
}

TEST_CASE("effective npq flags the small-npq regime") {
    CHECK(effective_npq(200, 100, 0.5) == doctest::Approx(12.5).epsilon(1e-15));
    CHECK(effective_npq(1000, 0.5) == doctest::Approx(250.0).epsilon(1e-15));
    CHECK(effective_npq(200, 10, 0.5) < kSmallNpqThreshold);
    CHECK(effective_npq(200, 100, 0.5) >= kSmallNpqThreshold);
}

TEST_CASE("entropy stays within the n+1 eigenvalue bound") {
    for (std::int64_t length : {6, 9, 14, 33}) {
        for (std::int64_t ups = 0; ups <= length; ++ups) {
            for (std::int64_t block = 1; block <= length - 1; ++block) {
                const double bits = sector_entropy(length, ups, block);
                const std::int64_t cap = std::min(block, ups) + 1;
                CHECK(bits >= 0.0);
                CHECK(bits <= std::log2(static_cast<double>(cap)) + 1e-9);
                CHECK(bits <= std::log2(static_cast<double>(block + 1)) + 1e-9);
            }
        }
    }
}

TEST_CASE("sector entropy peaks at the central block and the central sector") {
    // Even length: strict argmax at L/2 for both scans.
    {
        const std::int64_t length = 12;
        std::int64_t best_block = -1;
        double best = -1.0;
        for (std::int64_t block = 1; block <= length - 1; ++block) {
            const double bits = sector_entropy(length, 6, block);
            if (bits > best) {
                best = bits;
                best_block = block;
            }
        }
        CHECK(best_block == length / 2);

        std::int64_t best_ups = -1;
        best = -1.0;
        for (std::int64_t ups = 0; ups <= length; ++ups) {
            const double bits = sector_entropy(length, ups, 6);
            if (bits > best) {
                best = bits;
                best_ups = ups;
            }
        }
        CHECK(best_ups == length / 2);
    }
    // Odd length: the two central blocks and sectors tie.
    {
        const std::int64_t length = 11;
        CHECK(sector_entropy(length, 5, 5) == sector_entropy(length, 5, 6));
        CHECK(std::abs(sector_entropy(length, 5, 4) - sector_entropy(length, 6, 4)) <= 1e-12);
        for (std::int64_t block = 1; block <= 4; ++block) {
            CHECK(sector_entropy(length, 5, block) < sector_entropy(length, 5, block + 1));
        }
    }
}

TEST_CASE("S(n) equals S(L-n) bitwise through the shared nonzero multiset") {
    for (std::int64_t length : {9, 16, 101}) {
        for (std::int64_t ups : {1L, length / 3, length / 2}) {
            for (std::int64_t block = 1; block <= length / 2; ++block) {
                CHECK(sector_entropy(length, ups, block) ==
                      sector_entropy(length, ups, length - block));
            }
        }
    }
}

TEST_CASE("asymptotic error shrinks as npq_eff grows (p = 1/10 family)") {
    // Grid kept inside the regime where the normal-approximation error
    // dominates; past its zero crossing (n ~ 65 here) the absolute error
    // saturates at the small finite-L variance-mismatch plateau instead.
    const std::int64_t length = 200;
    const std::int64_t ups = 20;
    double previous_error = 1e9;
    for (std::int64_t block : {5, 10, 20, 30, 40, 50, 60}) {
        const double exact = sector_entropy(length, ups, block);
        const double asym = asymptotic_entropy_finite(length, block, 0.1).bits;
        const double error = std::abs(exact - asym);
        CHECK(error < previous_error);
        previous_error = error;
    }
}

TEST_CASE("log-prefactor fit") {
    std::vector<FitPoint> equal_weight_points;
    for (std::int64_t block = 100; block <= 1000; block += 100) {
        equal_weight_points.push_back({block, equal_weight_entropy(block).bits});
    }
    const LogFit ew = fit_log_prefactor(equal_weight_points);
    CHECK(std::abs(ew.gamma - 1.0) <= 0.01);

    std::vector<FitPoint> asym_points;
    for (std::int64_t block = 100; block <= 1000; block += 100) {
        asym_points.push_back({block, asymptotic_entropy_infinite(block, 0.5).bits});
    }
    const LogFit half = fit_log_prefactor(asym_points);
    CHECK(std::abs(half.gamma - 0.5) <= 1e-12);
    CHECK(std::abs(half.intercept -
                   0.5 * std::log2(std::numbers::pi * std::numbers::e / 2.0)) <= 1e-12);

    // Sector entropies at L = 1e4 grow just under (1/2) log2 n across this
    // window: the n/(L-n) depletion term drags the fitted slope to 0.4793.
    std::vector<FitPoint> sector_points;
    for (std::int64_t block = 100; block <= 1000; block += 100) {
        sector_points.push_back({block, sector_entropy(10000, 5000, block)});
    }
    const LogFit sector = fit_log_prefactor(sector_points);
    CHECK(sector.gamma == doctest::Approx(0.479277).epsilon(1e-3));
}

TEST_CASE("log-prefactor fit error paths") {
    CHECK_THROWS_AS(fit_log_prefactor(std::vector<FitPoint>{{4, 1.0}, {8, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        fit_log_prefactor(std::vector<FitPoint>{{1, 0.5}, {4, 1.0}, {8, 2.0}}),
        std::domain_error);
    CHECK_THROWS_AS(
        fit_log_prefactor(std::vector<FitPoint>{{4, 1.0}, {4, 1.1}, {4, 0.9}}),
        std::domain_error);
}

#include <stdexcept>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "heisentropy/entropy.hpp"
#include "heisentropy/oracle.hpp"
#include "heisentropy/spectrum.hpp"
#include "heisentropy/verify.hpp"

using namespace heisentropy;
using namespace heisentropy::oracle;

TEST_CASE("ground state construction") {
    const StateVector single = build_ground_state(1, 1);
    REQUIRE(single.amplitudes.size() == 2);
    CHECK(single.amplitudes[0] == 0.0);
    CHECK(single.amplitudes[1] == 1.0);

    const StateVector pair = build_ground_state(2, 1);
    CHECK(pair.amplitudes[0b01] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(pair.amplitudes[0b10] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(pair.amplitudes[0b00] == 0.0);
    CHECK(pair.amplitudes[0b11] == 0.0);

    const StateVector six = build_ground_state(4, 2);
    int support = 0;
    for (unsigned m = 0; m < 16; ++m) {
        if (six.amplitudes[m] != 0.0) {
            ++support;
            CHECK(six.amplitudes[m] == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-15));
            CHECK(__builtin_popcount(m) == 2);
        }
    }
    CHECK(support == 6);
    CHECK(six.norm() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(build_ground_state(15, 7), std::domain_error);
    CHECK_THROWS_AS(build_ground_state(4, 5), std::domain_error);
    CHECK_THROWS_AS(build_ground_state(4, -1), std::domain_error);
}

TEST_CASE("zero-energy residual of the symmetric states, and a broken state") {
    CHECK(verify_zero_energy(build_ground_state(4, 2)) <= 1e-12);
    CHECK(verify_zero_energy(build_ground_state(6, 3)) <= 1e-12);
    CHECK(verify_zero_energy(build_ground_state(7, 2)) <= 1e-12);

    // Flipping one amplitude's sign must light the residual up.
    StateVector broken = build_ground_state(4, 2);
    broken.amplitudes[0b0011] = -broken.amplitudes[0b0011];
    CHECK(verify_zero_energy(broken) > 0.1);
}

TEST_CASE("partial trace basics") {
    const DensityMatrix half = reduce(build_ground_state(2, 1), 0b01u);
    REQUIRE(half.dim() == 2);
    CHECK(half.at(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half.at(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half.at(0, 1) == 0.0);
    CHECK(half.at(1, 0) == 0.0);

    const StateVector state = build_ground_state(4, 2);
    const DensityMatrix contiguous = reduce(state, 0b0011u);
    const DensityMatrix split = reduce(state, 0b0101u);
    CHECK(contiguous.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(contiguous.max_asymmetry() <= 1e-13);

    // Block choice cannot matter: identical eigenvalue multisets.
    const std::vector<double> a = eigenvalues_symmetric(contiguous);
    const std::vector<double> b = eigenvalues_symmetric(split);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }

    // And they are {4/6, 1/6, 1/6, 0}.
    CHECK(a[0] == doctest::Approx(4.0 / 6).epsilon(1e-13));
    CHECK(a[1] == doctest::Approx(1.0 / 6).epsilon(1e-13));
    CHECK(a[2] == doctest::Approx(1.0 / 6).epsilon(1e-13));
    CHECK(std::abs(a[3]) <= 1e-12);

    CHECK_THROWS_AS(reduce(state, 0b0000u), std::domain_error);
    CHECK_THROWS_AS(reduce(state, 0b1111u), std::domain_error);
    CHECK_THROWS_AS(reduce(state, 0b10001u), std::domain_error);
}

TEST_CASE("all eigenvalues are nonnegative and PSD holds") {
    const StateVector state = build_ground_state(8, 3);
    const DensityMatrix rho = reduce(state, 0b00011100u);
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-12));
    for (double eig : eigenvalues_symmetric(rho)) {
        CHECK(eig >= -1e-10);
    }
}

TEST_CASE("mixed density matrix") {
    // Uniform mixture of a 2-site block in 4 sites: eigenvalues {1/3, 1/3, 1/3, 0}.
    const DensityMatrix uniform = mixed_density(4, WeightVector::uniform(4), 0b0011u);
    const std::vector<double> eig = eigenvalues_symmetric(uniform);
    REQUIRE(eig.size() == 4);
    CHECK(eig[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(eig[2] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(std::abs(eig[3]) <= 1e-12);
    CHECK(uniform.trace() == doctest::Approx(1.0).epsilon(1e-12));

    // A point mass reproduces the plain partial trace.
    const DensityMatrix point = mixed_density(4, WeightVector::delta(4, 2), 0b0011u);
    const DensityMatrix direct = reduce(build_ground_state(4, 2), 0b0011u);
    for (int i = 0; i < point.dim(); ++i) {
        for (int j = 0; j < point.dim(); ++j) {
            CHECK(point.at(i, j) == doctest::Approx(direct.at(i, j)).epsilon(1e-15));
        }
    }
}

TEST_CASE("jacobi eigensolver on known matrices") {
    DensityMatrix diag{2, {0.75, 0.0, 0.0, 0.0, 0.0, 0.125, 0.0, 0.0, 0.0, 0.0, 0.0625, 0.0,
                           0.0, 0.0, 0.0, 0.0625}};
    const std::vector<double> d = eigenvalues_symmetric(diag);
    CHECK(d[0] == 0.75);
    CHECK(d[1] == 0.125);
    CHECK(d[2] == 0.0625);
    CHECK(d[3] == 0.0625);

    DensityMatrix projector{1, {0.5, 0.5, 0.5, 0.5}};
    const std::vector<double> p = eigenvalues_symmetric(projector);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(p[1]) <= 1e-13);

    // Eigenvalue sum matches the trace.
    const DensityMatrix rho = reduce(build_ground_state(9, 4), 0b010011001u);
    const std::vector<double> eig = eigenvalues_symmetric(rho);
    double sum = 0.0;
    for (double v : eig) sum += v;
    CHECK(std::abs(sum - rho.trace()) <= 1e-11);
}

TEST_CASE("oracle eigenvalues match the analytic spectrum (spot checks)") {
    const StateVector state = build_ground_state(8, 3);
    for (unsigned mask : {0b00000111u, 0b10100001u}) {
        const std::vector<double> eig = eigenvalues_symmetric(reduce(state, mask));
        const Spectrum analytic = sector_spectrum(SectorSpec(8, 3, 3));
        std::vector<double> expected = analytic.probabilities();
        std::sort(expected.begin(), expected.end(), std::greater<>());
        expected.resize(eig.size(), 0.0);
        for (std::size_t i = 0; i < eig.size(); ++i) {
            CHECK(std::abs(eig[i] - expected[i]) <= 1e-10);
        }
        CHECK(std::abs(entropy_bits(eig) - shannon_entropy_bits(analytic).bits) <= 1e-9);
    }

    // One case at the memory ceiling.
    const StateVector big = build_ground_state(14, 7);
    const std::vector<double> eig = eigenvalues_symmetric(reduce(big, 0x7fu));
    const Spectrum analytic = sector_spectrum(SectorSpec(14, 7, 7));
    std::vector<double> expected = analytic.probabilities();
    std::sort(expected.begin(), expected.end(), std::greater<>());
    expected.resize(eig.size(), 0.0);
    for (std::size_t i = 0; i < eig.size(); ++i) {
        CHECK(std::abs(eig[i] - expected[i]) <= 1e-10);
    }
}

TEST_CASE("staggered flip") {
    const StateVector state = build_ground_state(6, 2);
    const StateVector flipped = staggered_flip(state);
    CHECK(flipped.norm() == doctest::Approx(1.0).epsilon(1e-14));

    const StateVector twice = staggered_flip(flipped);
    for (std::size_t m = 0; m < state.amplitudes.size(); ++m) {
        CHECK(twice.amplitudes[m] == state.amplitudes[m]);
    }

    for (unsigned mask : {0b000011u, 0b010101u, 0b001110u}) {
        const double before = entropy_bits(eigenvalues_symmetric(reduce(state, mask)));
        const double after = entropy_bits(eigenvalues_symmetric(reduce(flipped, mask)));
        CHECK(std::abs(before - after) <= 1e-12);
    }

    CHECK_THROWS_AS(staggered_flip(build_ground_state(5, 2)), std::domain_error);
}

TEST_CASE("verification sweep passes at small sizes") {
    VerifyOptions options;
    options.max_chain_length = 6;
    const VerificationReport report = run_verification(options);
    CHECK(report.all_passed());
    CHECK(report.families.size() == 7);
    for (const FamilyResult& family : report.families) {
        CHECK(family.cases > 0);
        CHECK(family.passed);
    }
}

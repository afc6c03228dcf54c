#include "heisentropy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "heisentropy/entropy.hpp"
#include "heisentropy/oracle.hpp"
#include "heisentropy/spectrum.hpp"

namespace heisentropy::oracle {

namespace {

constexpr double kRankCutoff = 1e-10;
constexpr double kResidualTolerance = 1e-12;
constexpr double kFlipTolerance = 1e-12;

// Deviation tracker: keeps the single worst case for reporting.
struct Worst {
    double value = 0.0;
    std::string where;

    void offer(double v, const std::string& context) {
        if (v > value) {
            value = v;
            where = context;
        }
    }
};

std::string case_tag(int length, int ups, int block, unsigned mask) {
    char buf[64];
    if (ups >= 0) {
        std::snprintf(buf, sizeof buf, "L=%d N=%d n=%d mask=0x%x", length, ups, block, mask);
    } else {
        std::snprintf(buf, sizeof buf, "L=%d n=%d mask=0x%x", length, block, mask);
    }
    return std::string(buf);
}

// A block of `block` consecutive sites starting at `s` on the periodic chain.
unsigned cyclic_block_mask(int length, int block, int s) {
    const unsigned full = (1u << length) - 1u;
    const unsigned run = (1u << block) - 1u;
    return ((run << s) | (run >> (length - s))) & full;
}

bool is_contiguous(unsigned mask, int length, int block) {
    for (int s = 0; s < length; ++s) {
        if (mask == cyclic_block_mask(length, block, s)) return true;
    }
    return false;
}

unsigned random_block_mask(int length, int block, std::mt19937& rng) {
    std::vector<int> sites(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) sites[static_cast<std::size_t>(i)] = i;
    // On the ring, singletons and (L-1)-sets are always contiguous; sizes in
    // [2, L-2] have non-window placements once L >= 4.
    const bool noncontiguous_exists = block >= 2 && block <= length - 2 && length >= 4;
    for (int attempt = 0; attempt < 256; ++attempt) {
        for (int i = 0; i < block; ++i) {
            std::uniform_int_distribution<int> pick(i, length - 1);
            std::swap(sites[static_cast<std::size_t>(i)],
                      sites[static_cast<std::size_t>(pick(rng))]);
        }
        unsigned mask = 0;
        for (int i = 0; i < block; ++i) mask |= 1u << sites[static_cast<std::size_t>(i)];
        if (!noncontiguous_exists || !is_contiguous(mask, length, block)) return mask;
    }
    return contiguous_block_mask(0, block);  // unreachable for the sizes used here
}

// Oracle eigenvalues of the block selected by `mask` for a pure state.
// Blocks beyond half the chain are reduced through their complement, whose
// nonzero spectrum matches (Schmidt decomposition of a pure state).
std::vector<double> pure_block_eigenvalues(const StateVector& state, unsigned mask) {
    const unsigned full = (1u << state.sites) - 1u;
    const unsigned use = popcount(mask) * 2 > state.sites ? (full & ~mask) : mask;
    return eigenvalues_symmetric(reduce(state, use));
}

double padded_max_difference(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t len = std::max(a.size(), b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double av = i < a.size() ? a[i] : 0.0;
        const double bv = i < b.size() ? b[i] : 0.0;
        worst = std::max(worst, std::abs(av - bv));
    }
    return worst;
}

std::vector<double> sorted_probabilities(const Spectrum& s) {
    std::vector<double> p = s.probabilities();
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

long rank_above_cutoff(const std::vector<double>& eigenvalues) {
    long r = 0;
    for (double l : eigenvalues) r += l > kRankCutoff ? 1 : 0;
    return r;
}

// Eigenvalues of a density matrix carrying the fixed-magnetization block
// structure: entries joining configurations of different up-spin count must
// vanish, which is asserted numerically before the cheaper block-wise Jacobi
// runs. Falls back to the dense solve if the structure is absent.
std::vector<double> blocked_eigenvalues(const DensityMatrix& rho) {
    constexpr double kStructureTolerance = 1e-13;
    const int dim = rho.dim();
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            if (std::popcount(static_cast<unsigned>(a)) !=
                    std::popcount(static_cast<unsigned>(b)) &&
                std::abs(rho.at(a, b)) > kStructureTolerance) {
                return eigenvalues_symmetric(rho);
            }
        }
    }
    std::vector<double> eig;
    eig.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k <= rho.block_sites; ++k) {
        std::vector<int> members;
        for (int a = 0; a < dim; ++a) {
            if (std::popcount(static_cast<unsigned>(a)) == k) members.push_back(a);
        }
        const int bdim = static_cast<int>(members.size());
        std::vector<double> sub(static_cast<std::size_t>(bdim) * bdim);
        for (int i = 0; i < bdim; ++i) {
            for (int j = 0; j < bdim; ++j) {
                sub[static_cast<std::size_t>(i) * bdim + j] =
                    rho.at(members[static_cast<std::size_t>(i)],
                           members[static_cast<std::size_t>(j)]);
            }
        }
        std::vector<double> part = detail::jacobi_eigenvalues(sub, bdim);
        eig.insert(eig.end(), part.begin(), part.end());
    }
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

// Every contiguous placement on the ring (wrap-around included) plus one
// random non-contiguous set of the same size.
std::vector<unsigned> blocks_for_size(int length, int block, std::mt19937& rng) {
    std::vector<unsigned> masks;
    for (int s = 0; s < length; ++s) masks.push_back(cyclic_block_mask(length, block, s));
    masks.push_back(random_block_mask(length, block, rng));
    return masks;
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const FamilyResult& f : families) {
        if (!f.passed) return false;
    }
    return true;
}

VerificationReport run_verification(const VerifyOptions& options, std::ostream* progress) {
    const int max_length = std::min(options.max_chain_length, kMaxChainLength);
    VerificationReport report;

    auto emit = [&](FamilyResult f, const Worst& w) {
        f.worst = w.value;
        f.detail = w.where;
        if (progress != nullptr) {
            (*progress) << (f.passed ? "[PASS] " : "[FAIL] ") << f.name << ": " << f.cases
                        << " cases, worst deviation " << f.worst << " (tolerance " << f.tolerance
                        << ")" << (f.detail.empty() ? "" : " at " + f.detail) << "\n";
        }
        report.families.push_back(std::move(f));
    };

    // Closed-form sector spectra against the brute-force path, plus the rank
    // bound collected along the way.
    {
        FamilyResult eig{"sector-equivalence (eigenvalues)", true, 0, 0.0,
                         options.eigenvalue_tolerance, ""};
        FamilyResult ent{"sector-equivalence (entropies)", true, 0, 0.0,
                         options.entropy_tolerance, ""};
        FamilyResult rank{"rank-bound (nonzero eigenvalues <= n+1)", true, 0, 0.0, 0.0, ""};
        Worst weig, went, wrank;
        for (int length = 2; length <= max_length; ++length) {
            for (int ups = 0; ups <= length; ++ups) {
                const StateVector state = build_ground_state(length, ups);
                for (int block = 1; block <= length - 1; ++block) {
                    std::mt19937 rng(options.seed ^ (static_cast<unsigned>(length) * 1000003u +
                                                     static_cast<unsigned>(block) * 7919u));
                    const Spectrum analytic = sector_spectrum(SectorSpec(length, ups, block));
                    const std::vector<double> analytic_sorted = sorted_probabilities(analytic);
                    const double analytic_entropy = shannon_entropy_bits(analytic).bits;
                    for (unsigned mask : blocks_for_size(length, block, rng)) {
                        const std::vector<double> eigenvalues =
                            pure_block_eigenvalues(state, mask);
                        const std::string tag = case_tag(length, ups, block, mask);
                        weig.offer(padded_max_difference(eigenvalues, analytic_sorted), tag);
                        went.offer(std::abs(entropy_bits(eigenvalues) - analytic_entropy), tag);
                        const long excess = rank_above_cutoff(eigenvalues) - (block + 1);
                        wrank.offer(static_cast<double>(excess), tag);
                        ++eig.cases;
                        ++ent.cases;
                        ++rank.cases;
                    }
                }
            }
        }
        eig.passed = weig.value <= eig.tolerance;
        ent.passed = went.value <= ent.tolerance;
        rank.passed = wrank.value <= 0.0;
        emit(eig, weig);
        emit(ent, went);
        emit(rank, wrank);
    }

    // Mixed-ensemble equivalence: uniform weights plus 5 random draws per L.
    {
        FamilyResult eig{"mixed-equivalence (eigenvalues)", true, 0, 0.0,
                         options.eigenvalue_tolerance, ""};
        FamilyResult ent{"mixed-equivalence (entropies)", true, 0, 0.0,
                         options.entropy_tolerance, ""};
        Worst weig, went;
        const int cap = std::min(max_length, 10);
        for (int length = 2; length <= cap; ++length) {
            std::mt19937 rng(options.seed ^ (0x9e3779b9u + static_cast<unsigned>(length)));
            std::vector<WeightVector> weights;
            weights.push_back(WeightVector::uniform(length));
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            for (int draw = 0; draw < 5; ++draw) {
                std::vector<double> raw(static_cast<std::size_t>(length) + 1);
                for (double& w : raw) w = unit(rng);
                weights.push_back(WeightVector::normalized(std::move(raw)));
            }
            for (const WeightVector& w : weights) {
                for (int block = 1; block <= length - 1; ++block) {
                    const Spectrum analytic = mixed_spectrum(length, block, w);
                    const std::vector<double> analytic_sorted = sorted_probabilities(analytic);
                    const double analytic_entropy = shannon_entropy_bits(analytic).bits;
                    for (unsigned mask : blocks_for_size(length, block, rng)) {
                        const DensityMatrix rho = mixed_density(length, w, mask);
                        const std::vector<double> eigenvalues = blocked_eigenvalues(rho);
                        const std::string tag = case_tag(length, -1, block, mask);
                        weig.offer(padded_max_difference(eigenvalues, analytic_sorted), tag);
                        went.offer(std::abs(entropy_bits(eigenvalues) - analytic_entropy), tag);
                        ++eig.cases;
                        ++ent.cases;
                    }
                }
            }
        }
        eig.passed = weig.value <= eig.tolerance;
        ent.passed = went.value <= ent.tolerance;
        emit(eig, weig);
        emit(ent, went);
    }

    // Zero-energy residual of every sector state.
    {
        FamilyResult fam{"zero-energy residual", true, 0, 0.0, kResidualTolerance, ""};
        Worst worst;
        for (int length = 2; length <= max_length; ++length) {
            for (int ups = 0; ups <= length; ++ups) {
                const double residual = verify_zero_energy(build_ground_state(length, ups));
                worst.offer(residual, case_tag(length, ups, 0, 0));
                ++fam.cases;
            }
        }
        fam.passed = worst.value <= fam.tolerance;
        emit(fam, worst);
    }

    // Staggered-flip invariance: block entropies untouched by overturning
    // every second spin.
    {
        FamilyResult fam{"staggered-flip entropy invariance", true, 0, 0.0, kFlipTolerance, ""};
        Worst worst;
        for (int length = 2; length <= max_length; length += 2) {
            for (int ups = 0; ups <= length; ++ups) {
                const StateVector state = build_ground_state(length, ups);
                const StateVector flipped = staggered_flip(state);
                std::mt19937 rng(options.seed ^
                                 (0x7f4a7c15u + static_cast<unsigned>(length) * 31u +
                                  static_cast<unsigned>(ups)));
                for (int block = 1; block <= length / 2; ++block) {
                    std::vector<unsigned> masks{contiguous_block_mask(0, block),
                                                random_block_mask(length, block, rng)};
                    for (unsigned mask : masks) {
                        const double before =
                            entropy_bits(eigenvalues_symmetric(reduce(state, mask)));
                        const double after =
                            entropy_bits(eigenvalues_symmetric(reduce(flipped, mask)));
                        worst.offer(std::abs(before - after), case_tag(length, ups, block, mask));
                        ++fam.cases;
                    }
                }
            }
        }
        fam.passed = worst.value <= fam.tolerance;
        emit(fam, worst);
    }

    return report;
}

}  // namespace heisentropy::oracle

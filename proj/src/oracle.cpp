#include "heisentropy/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace heisentropy::oracle {

namespace {

void check_chain_length(int chain_length) {
    if (chain_length < 1 || chain_length > kMaxChainLength) {
        throw std::domain_error("oracle: chain length must lie in [1, 14]");
    }
}

// Positions of set bits, ascending.
std::vector<int> mask_sites(unsigned mask) {
    std::vector<int> sites;
    for (int i = 0; mask >> i; ++i) {
        if ((mask >> i) & 1u) sites.push_back(i);
    }
    return sites;
}

// Table scattering compressed sub-configurations back onto the given sites.
std::vector<unsigned> scatter_table(const std::vector<int>& sites) {
    const std::size_t count = 1ull << sites.size();
    std::vector<unsigned> table(count, 0u);
    for (std::size_t c = 0; c < count; ++c) {
        unsigned m = 0;
        for (std::size_t j = 0; j < sites.size(); ++j) {
            if ((c >> j) & 1u) m |= 1u << sites[j];
        }
        table[c] = m;
    }
    return table;
}

}  // namespace

double StateVector::norm() const {
    double s = 0.0;
    for (double a : amplitudes) s += a * a;
    return std::sqrt(s);
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (int a = 0; a < dim(); ++a) t += at(a, a);
    return t;
}

double DensityMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int a = 0; a < dim(); ++a) {
        for (int b = a + 1; b < dim(); ++b) {
            worst = std::max(worst, std::abs(at(a, b) - at(b, a)));
        }
    }
    return worst;
}

StateVector build_ground_state(int chain_length, int up_spins) {
    check_chain_length(chain_length);
    if (up_spins < 0 || up_spins > chain_length) {
        throw std::domain_error("build_ground_state: need 0 <= N <= L");
    }
    const unsigned size = 1u << chain_length;
    std::size_t matching = 0;
    for (unsigned m = 0; m < size; ++m) {
        if (std::popcount(m) == up_spins) ++matching;
    }
    StateVector state{chain_length, std::vector<double>(size, 0.0)};
    const double amp = 1.0 / std::sqrt(static_cast<double>(matching));
    for (unsigned m = 0; m < size; ++m) {
        if (std::popcount(m) == up_spins) state.amplitudes[m] = amp;
    }
    return state;
}

double verify_zero_energy(const StateVector& state) {
    const int length = state.sites;
    check_chain_length(length);
    const unsigned size = 1u << length;
    std::vector<double> residual(size, 0.0);
    for (int i = 0; i < length; ++i) {
        const int j = (i + 1) % length;  // periodic closure
        const unsigned bond = (1u << i) | (1u << j);
        for (unsigned m = 0; m < size; ++m) {
            const bool up_i = (m >> i) & 1u;
            const bool up_j = (m >> j) & 1u;
            if (up_i == up_j) continue;  // aligned bond annihilated by sigma.sigma - I
            residual[m] += 2.0 * state.amplitudes[m] - 2.0 * state.amplitudes[m ^ bond];
        }
    }
    double worst = 0.0;
    for (double r : residual) worst = std::max(worst, std::abs(r));
    return worst;
}

DensityMatrix reduce(const StateVector& state, unsigned block_mask) {
    const int length = state.sites;
    check_chain_length(length);
    const unsigned full = (1u << length) - 1u;
    if (block_mask & ~full) {
        throw std::domain_error("reduce: block mask selects sites outside the chain");
    }
    if (block_mask == 0u || block_mask == full) {
        throw std::domain_error("reduce: block must be a proper nonempty subset");
    }

    const std::vector<unsigned> block_scatter = scatter_table(mask_sites(block_mask));
    const std::vector<unsigned> env_scatter = scatter_table(mask_sites(full & ~block_mask));
    const int block_count = popcount(block_mask);
    const int dim = 1 << block_count;

    DensityMatrix rho{block_count,
                      std::vector<double>(static_cast<std::size_t>(dim) * dim, 0.0)};
    std::vector<double> slice(static_cast<std::size_t>(dim));
    for (unsigned env : env_scatter) {
        for (int a = 0; a < dim; ++a) {
            slice[static_cast<std::size_t>(a)] =
                state.amplitudes[block_scatter[static_cast<std::size_t>(a)] | env];
        }
        for (int a = 0; a < dim; ++a) {
            const double sa = slice[static_cast<std::size_t>(a)];
            if (sa == 0.0) continue;
            for (int b = a; b < dim; ++b) {
                rho.at(a, b) += sa * slice[static_cast<std::size_t>(b)];
            }
        }
    }
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            rho.at(b, a) = rho.at(a, b);
        }
    }
    return rho;
}

DensityMatrix mixed_density(int chain_length, const WeightVector& weights, unsigned block_mask) {
    check_chain_length(chain_length);
    if (weights.chain_length() != chain_length) {
        throw std::invalid_argument("mixed_density: weight vector must have L+1 entries");
    }
    DensityMatrix acc;
    bool first = true;
    for (int N = 0; N <= chain_length; ++N) {
        const double alpha = weights.at(N);
        if (alpha == 0.0) continue;
        DensityMatrix part = reduce(build_ground_state(chain_length, N), block_mask);
        if (first) {
            acc = DensityMatrix{part.block_sites,
                                std::vector<double>(part.entries.size(), 0.0)};
            first = false;
        }
        for (std::size_t i = 0; i < part.entries.size(); ++i) {
            acc.entries[i] += alpha * part.entries[i];
        }
    }
    if (first) {
        throw std::domain_error("mixed_density: all weights vanish");
    }
    return acc;
}

namespace detail {

// Cyclic Jacobi on a dense symmetric matrix held row-major in `a`.
// Diagonalizes in place; returns eigenvalues in descending order.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int dim) {
    constexpr double kOffTolerance = 1e-13;
    constexpr int kSweepCap = 64;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < dim; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                const double v = a[static_cast<std::size_t>(p) * dim + q];
                s += 2.0 * v * v;
            }
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() >= kOffTolerance) {
        if (++sweep > kSweepCap) {
            throw std::runtime_error("jacobi_eigenvalues: sweep cap exceeded");
        }
        for (int p = 0; p < dim; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * dim + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * dim + p];
                const double aqq = a[static_cast<std::size_t>(q) * dim + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < dim; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[static_cast<std::size_t>(r) * dim + p];
                    const double arq = a[static_cast<std::size_t>(r) * dim + q];
                    const double np = c * arp - s * arq;
                    const double nq = s * arp + c * arq;
                    a[static_cast<std::size_t>(r) * dim + p] = np;
                    a[static_cast<std::size_t>(p) * dim + r] = np;
                    a[static_cast<std::size_t>(r) * dim + q] = nq;
                    a[static_cast<std::size_t>(q) * dim + r] = nq;
                }
                a[static_cast<std::size_t>(p) * dim + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * dim + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * dim + q] = 0.0;
                a[static_cast<std::size_t>(q) * dim + p] = 0.0;
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(dim));
    for (int p = 0; p < dim; ++p) eig[static_cast<std::size_t>(p)] = a[static_cast<std::size_t>(p) * dim + p];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace detail

std::vector<double> eigenvalues_symmetric(const DensityMatrix& m) {
    std::vector<double> a = m.entries;
    return detail::jacobi_eigenvalues(a, m.dim());
}

StateVector staggered_flip(const StateVector& state) {
    const int length = state.sites;
    check_chain_length(length);
    if (length % 2 != 0) {
        throw std::domain_error("staggered_flip: chain length must be even");
    }
    unsigned flip = 0;
    for (int i = 0; i < length; i += 2) flip |= 1u << i;
    StateVector out{length, std::vector<double>(state.amplitudes.size())};
    for (unsigned m = 0; m < state.amplitudes.size(); ++m) {
        out.amplitudes[m] = state.amplitudes[m ^ flip];
    }
    return out;
}

double entropy_bits(const std::vector<double>& eigenvalues) {
    std::vector<double> positive;
    positive.reserve(eigenvalues.size());
    for (double l : eigenvalues) {
        if (l > 0.0) positive.push_back(l);
    }
    std::sort(positive.begin(), positive.end());
    double acc = 0.0;
    for (double l : positive) acc += l * std::log2(l);
    return acc > 0.0 ? 0.0 : -acc;
}

unsigned contiguous_block_mask(int first_site, int block_size) {
    return ((1u << block_size) - 1u) << first_site;
}

int popcount(unsigned mask) { return std::popcount(mask); }

}  // namespace heisentropy::oracle

#pragma once

#include <cstdint>
#include <vector>

#include "heisentropy/spectrum.hpp"

// Brute-force verification path: dense 2^L state vectors, literal partial
// traces, and an in-repo Jacobi eigensolver. Shares no combinatorics code
// with the analytic modules, so agreement between the two is evidence.

namespace heisentropy::oracle {

// Dense 2^L vector is the memory guard behind this ceiling.
inline constexpr int kMaxChainLength = 14;

// Real amplitudes indexed by spin configuration bitmask: bit i set means
// spin up at site i.
struct StateVector {
    int sites = 0;
    std::vector<double> amplitudes;

    double norm() const;
};

// Dense real symmetric 2^n x 2^n reduced density matrix, row-major.
struct DensityMatrix {
    int block_sites = 0;
    std::vector<double> entries;

    int dim() const { return 1 << block_sites; }
    double at(int a, int b) const { return entries[static_cast<std::size_t>(a) * dim() + b]; }
    double& at(int a, int b) { return entries[static_cast<std::size_t>(a) * dim() + b]; }
    double trace() const;
    double max_asymmetry() const;
};

// The normalized equal superposition of all configurations with N up-spins.
// Throws std::domain_error for L > 14 or N outside [0, L].
StateVector build_ground_state(int chain_length, int up_spins);

// Max-norm of H |state> for the ferromagnetic Heisenberg chain with periodic
// closure, J = 1, bond term -(sigma_i . sigma_{i+1} - I); the symmetric
// states are exact zero modes of this form.
double verify_zero_energy(const StateVector& state);

// Partial trace onto the sites selected by block_mask:
// entries[a][b] = sum_e psi(a,e) psi(b,e) over environment configurations.
// Rejects empty and full blocks.
DensityMatrix reduce(const StateVector& state, unsigned block_mask);

// sum_N alpha_N reduce(|Psi(L,N)>), the reduced matrix of a weighted mixture
// over the multiplet.
DensityMatrix mixed_density(int chain_length, const WeightVector& weights, unsigned block_mask);

// All 2^n eigenvalues, descending, by cyclic Jacobi rotations carried to an
// off-diagonal Frobenius norm below 1e-13. Throws std::runtime_error if the
// sweep cap is exceeded (matrices here are at most 128 x 128).
std::vector<double> eigenvalues_symmetric(const DensityMatrix& m);

// Overturns every second spin: amplitudes permuted by XOR with 0101...;
// maps the staggered chain onto the uniform one without touching any block
// entropy. Requires even L.
StateVector staggered_flip(const StateVector& state);

// -sum lambda log2 lambda over positive eigenvalues.
double entropy_bits(const std::vector<double>& eigenvalues);

// Site-set helpers; masks keep non-contiguous blocks cheap to express.
unsigned contiguous_block_mask(int first_site, int block_size);
int popcount(unsigned mask);

namespace detail {
// The raw Jacobi loop behind eigenvalues_symmetric, for callers holding
// symmetric matrices of arbitrary dimension. Destroys `a`.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int dim);
}  // namespace detail

}  // namespace heisentropy::oracle

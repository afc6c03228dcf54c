#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

// Parameter sweeps over block sizes with exact and asymptotic entropy
// columns, and their CSV emission.

namespace heisentropy {

// One sweep record. `chain_length` empty means the thermodynamic limit
// (emitted as the literal "inf"); `up_spins` is absent for those rows.
// For finite rows `filling` is the snapped value N/L actually used by the
// exact column.
struct ScanRow {
    std::optional<std::int64_t> chain_length;
    std::int64_t block_size = 0;
    double filling = 0.0;
    std::optional<std::int64_t> up_spins;
    double exact_bits = 0.0;
    double asymptotic_bits = 0.0;
    double abs_error = 0.0;
    double npq_effective = 0.0;  // n p q (L-n)/L, or n p q when L is infinite
};

// Sweeps block sizes n_from..n_to (inclusive) in the given stride. The
// requested filling is snapped to N = round(p L); degenerate snaps
// (N = 0 or N = L) are a domain error. Throws std::invalid_argument on an
// empty range.
std::vector<ScanRow> scan_finite(std::int64_t chain_length, double filling,
                                 std::int64_t n_from, std::int64_t n_to, std::int64_t step = 1);

// Same sweep against the thermodynamic spectrum and its closed form.
std::vector<ScanRow> scan_infinite(double filling, std::int64_t n_from, std::int64_t n_to,
                                   std::int64_t step = 1);

// Header line `L,n,p,N,S_exact,S_asymptotic,abs_error,npq_eff`, then one row
// per record; decimal fields carry 12 significant digits, LF newlines, no
// quoting. Returns the number of data rows written; throws std::runtime_error
// on stream failure.
std::size_t emit_csv(std::span<const ScanRow> rows, std::ostream& out);

// Shortest decimal form with the given significant digits, locale-free.
std::string format_significant(double value, int digits = 12);

}  // namespace heisentropy

#include "heisentropy/scan.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "heisentropy/entropy.hpp"
#include "heisentropy/spectrum.hpp"

namespace heisentropy {

namespace {

void check_range(std::int64_t n_from, std::int64_t n_to, std::int64_t step) {
    if (step < 1) {
        throw std::invalid_argument("scan: step must be positive");
    }
    if (n_from > n_to) {
        throw std::invalid_argument("scan: empty block-size range");
    }
}

}  // namespace

std::vector<ScanRow> scan_finite(std::int64_t chain_length, double filling, std::int64_t n_from,
                                 std::int64_t n_to, std::int64_t step) {
    check_range(n_from, n_to, step);
    if (chain_length < 2) {
        throw std::domain_error("scan_finite: chain length must be at least 2");
    }
    if (n_from < 1 || n_to > chain_length - 1) {
        throw std::invalid_argument("scan_finite: block sizes must lie in [1, L-1]");
    }
    if (!(filling > 0.0 && filling < 1.0)) {
        throw std::domain_error("scan_finite: filling must lie in (0, 1)");
    }
    const std::int64_t ups = std::llround(filling * static_cast<double>(chain_length));
    if (ups <= 0 || ups >= chain_length) {
        throw std::domain_error("scan_finite: filling snaps to a degenerate sector (N = 0 or L)");
    }
    // The exact column lives at the snapped filling; quoting the requested
    // one would book rounding as approximation error.
    const double snapped = static_cast<double>(ups) / static_cast<double>(chain_length);

    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>((n_to - n_from) / step) + 1);
    for (std::int64_t n = n_from; n <= n_to; n += step) {
        ScanRow row;
        row.chain_length = chain_length;
        row.block_size = n;
        row.filling = snapped;
        row.up_spins = ups;
        row.exact_bits =
            shannon_entropy_bits(sector_spectrum(SectorSpec(chain_length, ups, n))).bits;
        row.asymptotic_bits = asymptotic_entropy_finite(chain_length, n, snapped).bits;
        row.abs_error = std::abs(row.exact_bits - row.asymptotic_bits);
        row.npq_effective = effective_npq(chain_length, n, snapped);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScanRow> scan_infinite(double filling, std::int64_t n_from, std::int64_t n_to,
                                   std::int64_t step) {
    check_range(n_from, n_to, step);
    if (n_from < 1) {
        throw std::invalid_argument("scan_infinite: block sizes must be positive");
    }
    if (!(filling > 0.0 && filling < 1.0)) {
        throw std::domain_error("scan_infinite: filling must lie in (0, 1)");
    }
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>((n_to - n_from) / step) + 1);
    for (std::int64_t n = n_from; n <= n_to; n += step) {
        ScanRow row;
        row.block_size = n;
        row.filling = filling;
        row.exact_bits = shannon_entropy_bits(thermodynamic_spectrum(n, filling)).bits;
        row.asymptotic_bits = asymptotic_entropy_infinite(n, filling).bits;
        row.abs_error = std::abs(row.exact_bits - row.asymptotic_bits);
        row.npq_effective = effective_npq(n, filling);
        rows.push_back(row);
    }
    return rows;
}

std::string format_significant(double value, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

std::size_t emit_csv(std::span<const ScanRow> rows, std::ostream& out) {
    out << "L,n,p,N,S_exact,S_asymptotic,abs_error,npq_eff\n";
    for (const ScanRow& row : rows) {
        if (row.chain_length.has_value()) {
            out << *row.chain_length;
        } else {
            out << "inf";
        }
        out << ',' << row.block_size << ',' << format_significant(row.filling) << ',';
        if (row.up_spins.has_value()) {
            out << *row.up_spins;
        }
        out << ',' << format_significant(row.exact_bits) << ','
            << format_significant(row.asymptotic_bits) << ',' << format_significant(row.abs_error)
            << ',' << format_significant(row.npq_effective) << '\n';
    }
    if (!out.good()) {
        throw std::runtime_error("emit_csv: stream write failure");
    }
    return rows.size();
}

}  // namespace heisentropy

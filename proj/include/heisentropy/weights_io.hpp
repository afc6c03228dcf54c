#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "heisentropy/spectrum.hpp"

namespace heisentropy {

// Reads ensemble weights: one nonnegative real per line, exactly L+1 lines.
// A total within 1e-6 of 1 is rescaled to exact normalization; anything
// further off is rejected (std::runtime_error), as are negative, non-finite
// or malformed entries.
WeightVector load_weights(std::istream& in, std::int64_t chain_length);
WeightVector load_weights_file(const std::string& path, std::int64_t chain_length);

}  // namespace heisentropy

#include "heisentropy/weights_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace heisentropy {

namespace {
constexpr double kLoaderSumTolerance = 1e-6;
}

WeightVector load_weights(std::istream& in, std::int64_t chain_length) {
    std::vector<double> raw;
    raw.reserve(static_cast<std::size_t>(chain_length) + 1);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream parse(line);
        double value = 0.0;
        if (!(parse >> value)) {
            std::istringstream recheck(line);
            std::string token;
            if (recheck >> token) {
                throw std::runtime_error("weights: malformed entry at line " +
                                         std::to_string(line_number));
            }
            continue;  // blank line
        }
        std::string trailing;
        if (parse >> trailing) {
            throw std::runtime_error("weights: trailing content at line " +
                                     std::to_string(line_number));
        }
        if (!std::isfinite(value) || value < 0.0) {
            throw std::runtime_error("weights: entries must be finite and nonnegative (line " +
                                     std::to_string(line_number) + ")");
        }
        raw.push_back(value);
    }
    if (raw.size() != static_cast<std::size_t>(chain_length) + 1) {
        throw std::runtime_error("weights: expected " + std::to_string(chain_length + 1) +
                                 " entries, found " + std::to_string(raw.size()));
    }
    double sum = 0.0;
    for (double v : raw) sum += v;
    if (std::abs(sum - 1.0) > kLoaderSumTolerance) {
        throw std::runtime_error("weights: sum deviates from 1 by more than 1e-6 (sum = " +
                                 std::to_string(sum) + ")");
    }
    return WeightVector::normalized(std::move(raw));
}

WeightVector load_weights_file(const std::string& path, std::int64_t chain_length) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("weights: cannot open " + path);
    }
    return load_weights(in, chain_length);
}

}  // namespace heisentropy

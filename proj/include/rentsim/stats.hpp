#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rentsim/accounting.hpp"

namespace rentsim {

/// Replication statistics in the shape the result figures report:
/// total, sd, mean, variance, min, max over n days. sd is the sample
/// standard deviation (n-1 denominator), defined as 0 for n <= 1.
struct StatBlock {
    std::size_t n = 0;
    double total = 0.0;
    double mean = 0.0;
    double sd = 0.0;
    double variance = 0.0;
    double min = 0.0;
    double max = 0.0;

    bool operator==(const StatBlock&) const = default;
};

StatBlock stat_block(std::span<const double> xs);
StatBlock stat_block(std::span<const Money> xs);
StatBlock stat_block(std::span<const int> xs);

}  // namespace rentsim

#include "rentsim/stats.hpp"

#include <algorithm>
#include <cmath>

namespace rentsim {

StatBlock stat_block(std::span<const double> xs) {
    StatBlock b;
    b.n = xs.size();
    if (xs.empty()) return b;

    double sum = 0.0;
    b.min = xs[0];
    b.max = xs[0];
    for (const double x : xs) {  // fixed index order, reproducible totals
        sum += x;
        b.min = std::min(b.min, x);
        b.max = std::max(b.max, x);
    }
    b.total = sum;
    b.mean = sum / static_cast<double>(b.n);
    if (b.n >= 2) {
        double ss = 0.0;
        for (const double x : xs) {
            const double d = x - b.mean;
            ss += d * d;
        }
        b.variance = ss / static_cast<double>(b.n - 1);
        b.sd = std::sqrt(b.variance);
    }
    return b;
}

namespace {

template <typename T>
StatBlock stat_block_of(std::span<const T> xs) {
    std::vector<double> v(xs.begin(), xs.end());
    return stat_block(std::span<const double>(v));
}

}  // namespace

StatBlock stat_block(std::span<const Money> xs) { return stat_block_of(xs); }

StatBlock stat_block(std::span<const int> xs) { return stat_block_of(xs); }

}  // namespace rentsim

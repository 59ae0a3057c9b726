#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace cusp {

struct Extrapolation {
    double value = 0.0;
    double error = 0.0;  // difference of the last two diagonal entries
};

/// Richardson extrapolation of g(h) -> g(0) for g(h) = g0 + c1 h^p + c2 h^(p+q) + ...,
/// sampled at h0, h0/2, ..., h0/2^(levels-1).
inline Extrapolation richardson(const std::function<double(double)>& g, double h0, int levels, int p = 2, int q = 2) {
    std::vector<std::vector<double>> R(static_cast<std::size_t>(levels));
    double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5) {
        auto& row = R[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(i) + 1);
        row[0] = g(h);
        for (int k = 1; k <= i; ++k) {
            const double factor = std::ldexp(1.0, p + q * (k - 1)) - 1.0;
            const double a = row[static_cast<std::size_t>(k - 1)];
            const double b = R[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k)] = a + (a - b) / factor;
        }
    }
    Extrapolation out;
    const auto& last = R.back();
    out.value = last.back();
    if (levels > 1) out.error = std::abs(last.back() - R[R.size() - 2].back());
    return out;
}

}  // namespace cusp

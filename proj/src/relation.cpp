#include "cwire/relation.hpp"

#include <map>

namespace cwire {

namespace {

void check_points(const std::vector<std::pair<std::uint64_t, BigInt>>& points,
                  const char* which) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].second < 0) {
            throw RelationError(std::string(which) + " value at n = " +
                                std::to_string(points[i].first) + " is negative");
        }
        if (i > 0 && points[i].first <= points[i - 1].first) {
            throw RelationError(std::string(which) +
                                " sample indices must be strictly increasing");
        }
    }
}

} // namespace

bool check_precedes(const RelationSample& sample) {
    if (sample.C < 1) throw RelationError("constant C must be >= 1");
    check_points(sample.f_points, "f");
    check_points(sample.g_points, "g");

    std::map<std::uint64_t, BigInt> g;
    for (const auto& [n, value] : sample.g_points) g.emplace(n, value);

    for (const auto& [n, fv] : sample.f_points) {
        const std::uint64_t scaled = n * sample.C;
        auto it = g.find(scaled);
        if (it == g.end()) {
            throw RelationError("g is not sampled at C*n = " + std::to_string(scaled) +
                                " (needed for n = " + std::to_string(n) + ")");
        }
        if (fv > BigInt(sample.C) * it->second + sample.C) return false;
    }
    return true;
}

} // namespace cwire

#include "lvmb/config.hpp"

#include <set>

namespace lvmb {

std::vector<std::string> validate(const Configuration& config) {
    std::vector<std::string> v;
    const int m = config.m, n = config.n;
    if (m < 1) v.push_back("m: must be positive");
    if (n < 2 * m) v.push_back("n: n < 2m");
    if (static_cast<int>(config.points.size()) != n + 1)
        v.push_back("L: point count != n+1");
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        const Point2m& p = config.points[i];
        if (static_cast<int>(p.size()) != 2 * m) {
            v.push_back("L[" + std::to_string(i) + "]: coordinate count != 2m");
            continue;
        }
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (!p[c].is_linear())
                v.push_back("L[" + std::to_string(i) + "][" + std::to_string(c) +
                            "]: coordinate is not a linear combination of generators");
            else if (p[c].max_generator() >= config.table.size())
                v.push_back("L[" + std::to_string(i) + "][" + std::to_string(c) +
                            "]: unknown generator index");
        }
    }
    if (config.family.sets.empty()) v.push_back("E: family is empty");
    std::set<std::vector<int>> seen;
    for (std::size_t a = 0; a < config.family.sets.size(); ++a) {
        const auto& s = config.family.sets[a];
        const std::string tag = "E[" + std::to_string(a) + "]";
        if (static_cast<int>(s.size()) != 2 * m + 1) v.push_back(tag + ": cardinality != 2m+1");
        bool increasing = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] >= s[i + 1]) increasing = false;
        if (!increasing) v.push_back(tag + ": indices not strictly increasing (duplicate index?)");
        for (int i : s)
            if (i < 0 || i > n) {
                v.push_back(tag + ": index out of range [0, n]");
                break;
            }
        if (!seen.insert(s).second) v.push_back(tag + ": duplicate set");
    }
    return v;
}

bool points_equal(const Point2m& a, const Point2m& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool distinct_points(const Configuration& config) {
    for (std::size_t i = 0; i < config.points.size(); ++i)
        for (std::size_t j = i + 1; j < config.points.size(); ++j)
            if (points_equal(config.points[i], config.points[j])) return false;
    return true;
}

bool is_rational_configuration(const Configuration& config) {
    for (const auto& p : config.points)
        for (const auto& c : p)
            if (!c.is_rational()) return false;
    return true;
}

} // namespace lvmb

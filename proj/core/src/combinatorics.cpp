#include "lvmb/combinatorics.hpp"

#include <algorithm>
#include <set>

namespace lvmb {

CompResult check_comp(const Configuration& config) {
    std::set<std::vector<int>> all(config.family.sets.begin(), config.family.sets.end());
    for (std::size_t a = 0; a < config.family.sets.size(); ++a) {
        const auto& ea = config.family.sets[a];
        for (int i = 0; i <= config.n; ++i) {
            if (std::binary_search(ea.begin(), ea.end(), i)) continue; // j = i
            bool ok = false;
            for (int j : ea) {
                std::vector<int> swapped;
                swapped.reserve(ea.size());
                for (int x : ea)
                    if (x != j) swapped.push_back(x);
                swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), i), i);
                if (all.count(swapped)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return {false, std::make_pair(a, i)};
        }
    }
    return {true, std::nullopt};
}

std::vector<int> essential_intersection(const IndexFamily& family) {
    if (family.sets.empty()) throw std::invalid_argument("essential_intersection: empty family");
    std::vector<int> acc = family.sets[0];
    for (std::size_t a = 1; a < family.sets.size() && !acc.empty(); ++a) {
        std::vector<int> next;
        std::set_intersection(acc.begin(), acc.end(), family.sets[a].begin(),
                              family.sets[a].end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

namespace {

bool hits_all(const std::vector<std::vector<int>>& sets, const std::vector<int>& chosen) {
    for (const auto& s : sets) {
        bool hit = false;
        for (int c : chosen)
            if (std::binary_search(s.begin(), s.end(), c)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool search_transversal(const std::vector<std::vector<int>>& sets, int n, int size,
                        std::vector<int>& chosen, int from) {
    if (static_cast<int>(chosen.size()) == size) return hits_all(sets, chosen);
    for (int i = from; i <= n; ++i) {
        chosen.push_back(i);
        if (search_transversal(sets, n, size, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

int min_transversal(const IndexFamily& family, int n) {
    if (family.sets.empty()) throw std::invalid_argument("min_transversal: empty family");
    for (int size = 1; size <= n + 1; ++size) {
        std::vector<int> chosen;
        if (search_transversal(family.sets, n, size, chosen, 0)) return size;
    }
    throw std::logic_error("min_transversal: no transversal found"); // unreachable for nonempty sets
}

std::optional<Configuration> restrict(const Configuration& config, const std::vector<int>& survivors) {
    std::vector<int> s = survivors;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s)
        if (i < 0 || i > config.n) throw std::invalid_argument("restrict: survivor index out of range");

    const int n_prime = static_cast<int>(s.size()) - 1;
    if (n_prime < 2 * config.m) return std::nullopt;

    std::vector<int> new_index(config.n + 1, -1);
    for (std::size_t k = 0; k < s.size(); ++k) new_index[s[k]] = static_cast<int>(k);

    IndexFamily family;
    for (const auto& ea : config.family.sets) {
        bool contained = std::all_of(ea.begin(), ea.end(), [&](int i) { return new_index[i] >= 0; });
        if (!contained) continue;
        std::vector<int> mapped;
        mapped.reserve(ea.size());
        for (int i : ea) mapped.push_back(new_index[i]);
        family.sets.push_back(std::move(mapped));
    }
    if (family.sets.empty()) return std::nullopt;

    Configuration out;
    out.m = config.m;
    out.n = n_prime;
    out.table = config.table;
    out.points.reserve(s.size());
    for (int i : s) out.points.push_back(config.points[i]);
    out.family = std::move(family);
    return out;
}

std::vector<std::pair<std::vector<int>, Configuration>> minimal_standard_submanifolds(
    const Configuration& config) {
    std::vector<std::pair<std::vector<int>, Configuration>> out;
    for (const auto& ea : config.family.sets) {
        auto r = restrict(config, ea);
        if (!r) throw std::logic_error("minimal standard submanifold restriction must exist");
        out.emplace_back(ea, std::move(*r));
    }
    return out;
}

} // namespace lvmb

#ifndef LVMB_GENERATORS_HPP
#define LVMB_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lvmb/interval.hpp"

namespace lvmb {

struct Generator {
    std::string name;
    Interval enclosure;
};

/// Ordered table of real-number generators assumed (not verified) to be
/// Q-linearly independent. Index 0 is the constant 1 with enclosure [1,1];
/// the others carry caller-supplied rational enclosures of their values.
class GeneratorTable {
public:
    GeneratorTable() { gens_.push_back({"1", Interval::point(Rational(1))}); }

    std::size_t add(const std::string& name, const Interval& enclosure) {
        if (!enclosure.valid())
            throw std::invalid_argument("generator '" + name + "': enclosure lower > upper");
        if (find(name)) throw std::invalid_argument("duplicate generator name '" + name + "'");
        gens_.push_back({name, enclosure});
        return gens_.size() - 1;
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& at(std::size_t i) const { return gens_.at(i); }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        return std::nullopt;
    }

    bool operator==(const GeneratorTable& o) const {
        if (gens_.size() != o.gens_.size()) return false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name != o.gens_[i].name) return false;
            if (gens_[i].enclosure.lo != o.gens_[i].enclosure.lo) return false;
            if (gens_[i].enclosure.hi != o.gens_[i].enclosure.hi) return false;
        }
        return true;
    }

private:
    std::vector<Generator> gens_;
};

} // namespace lvmb

#endif

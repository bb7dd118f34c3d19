#include "lvmb/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace lvmb {

SymbolicReal::SymbolicReal(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

SymbolicReal SymbolicReal::generator(std::uint32_t index) {
    SymbolicReal x;
    if (index == 0) {
        x.terms_.push_back({Monomial{}, Rational(1)});
    } else {
        x.terms_.push_back({Monomial{index}, Rational(1)});
    }
    return x;
}

int SymbolicReal::mono_cmp(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void SymbolicReal::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& s, const Term& t) { return mono_cmp(s.mono, t.mono) < 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && mono_cmp(out.back().mono, t.mono) == 0) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

bool SymbolicReal::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

bool SymbolicReal::is_linear() const {
    for (const auto& t : terms_)
        if (t.mono.size() > 1) return false;
    return true;
}

Rational SymbolicReal::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono.empty()) return terms_[0].coeff;
    throw std::logic_error("symbolic value is not rational");
}

std::map<std::uint32_t, Rational> SymbolicReal::linear_coeffs() const {
    std::map<std::uint32_t, Rational> out;
    for (const auto& t : terms_) {
        if (t.mono.empty())
            out[0] = t.coeff;
        else if (t.mono.size() == 1)
            out[t.mono[0]] = t.coeff;
        else
            throw std::logic_error("symbolic value is not linear");
    }
    return out;
}

SymbolicReal SymbolicReal::operator-() const {
    SymbolicReal r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

SymbolicReal SymbolicReal::operator+(const SymbolicReal& o) const {
    // merge of two sorted term lists
    SymbolicReal r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c < 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c > 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

SymbolicReal SymbolicReal::operator-(const SymbolicReal& o) const { return *this + (-o); }

SymbolicReal SymbolicReal::operator*(const SymbolicReal& o) const {
    SymbolicReal r;
    if (terms_.empty() || o.terms_.empty()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Monomial m;
            m.reserve(s.mono.size() + t.mono.size());
            std::merge(s.mono.begin(), s.mono.end(), t.mono.begin(), t.mono.end(),
                       std::back_inserter(m));
            r.terms_.push_back({std::move(m), s.coeff * t.coeff});
        }
    }
    r.normalize();
    return r;
}

bool SymbolicReal::operator==(const SymbolicReal& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (mono_cmp(terms_[i].mono, o.terms_[i].mono) != 0) return false;
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

namespace {

// b as a sub-multiset of a -> remainder, else nullopt.
std::optional<SymbolicReal::Monomial> mono_div(const SymbolicReal::Monomial& a,
                                               const SymbolicReal::Monomial& b) {
    SymbolicReal::Monomial out;
    std::size_t i = 0;
    for (std::uint32_t g : b) {
        while (i < a.size() && a[i] < g) out.push_back(a[i++]);
        if (i == a.size() || a[i] != g) return std::nullopt;
        ++i;
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    return out;
}

} // namespace

SymbolicReal SymbolicReal::exact_div(const SymbolicReal& num, const SymbolicReal& den) {
    if (den.terms_.empty()) throw std::logic_error("symbolic division by zero");
    if (num.terms_.empty()) return {};
    // Fast path: constant divisor.
    if (den.is_rational()) {
        SymbolicReal q = num;
        const Rational& d = den.terms_[0].coeff;
        for (auto& t : q.terms_) t.coeff /= d;
        return q;
    }
    SymbolicReal rem = num, quot;
    const Term& dlt = den.terms_.back(); // leading term under graded-lex
    while (!rem.terms_.empty()) {
        const Term& rlt = rem.terms_.back();
        auto m = mono_div(rlt.mono, dlt.mono);
        if (!m) throw std::logic_error("inexact symbolic division");
        Term t{std::move(*m), rlt.coeff / dlt.coeff};
        SymbolicReal tp;
        tp.terms_.push_back(t);
        quot.terms_.push_back(std::move(t));
        rem = rem - tp * den;
    }
    quot.normalize();
    return quot;
}

Interval SymbolicReal::evaluate(const GeneratorTable& table) const {
    Interval acc = Interval::point(Rational(0));
    for (const auto& t : terms_) {
        Interval m = Interval::point(Rational(1));
        std::size_t i = 0;
        while (i < t.mono.size()) {
            std::size_t j = i;
            while (j < t.mono.size() && t.mono[j] == t.mono[i]) ++j;
            m = m * table.at(t.mono[i]).enclosure.pow(static_cast<unsigned>(j - i));
            i = j;
        }
        acc = acc + m.scaled(t.coeff);
    }
    return acc;
}

std::uint32_t SymbolicReal::max_generator() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_)
        for (std::uint32_t g : t.mono) m = std::max(m, g);
    return m;
}

std::string SymbolicReal::to_string(const GeneratorTable& table) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += lvmb::to_string(terms_[i].coeff);
        for (std::uint32_t g : terms_[i].mono) {
            out += "*";
            out += g < table.size() ? table.at(g).name : ("g" + std::to_string(g));
        }
    }
    return out;
}

Sign sign_of(const SymbolicReal& x, const GeneratorTable& table) {
    if (x.is_zero()) return Sign::Zero;
    if (x.is_rational()) return sign_of(x.rational_value());
    if (x.max_generator() >= table.size())
        throw std::invalid_argument("symbolic value mentions a generator absent from the table");
    Interval v = x.evaluate(table);
    if (v.lo > 0) return Sign::Positive;
    if (v.hi < 0) return Sign::Negative;
    throw PrecisionExhausted("sign of nonzero symbolic value not certified by enclosures: " +
                             x.to_string(table));
}

} // namespace lvmb

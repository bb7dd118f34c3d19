#ifndef LVMB_ERRORS_HPP
#define LVMB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lvmb {

/// Thrown when an interval evaluation straddles zero, so the sign of a
/// nonzero symbolic quantity cannot be certified. Enclosures are caller
/// data; the caller must supply tighter ones and retry.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

class SingularMatrix : public std::runtime_error {
public:
    explicit SingularMatrix(const std::string& what = "singular matrix") : std::runtime_error(what) {}
};

/// Effective-action hypothesis fails: homogenized weight matrix has
/// deficient rank.
class RankDeficient : public std::runtime_error {
public:
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

/// Kernel degenerate with respect to the index family: a zero Gale vector
/// sits at an index that is missing from some index set.
class InconsistentDatum : public std::runtime_error {
public:
    explicit InconsistentDatum(const std::string& what) : std::runtime_error(what) {}
};

class NotSimplicial : public std::runtime_error {
public:
    explicit NotSimplicial(const std::string& what = "fan is not simplicial") : std::runtime_error(what) {}
};

class NotComplete : public std::runtime_error {
public:
    explicit NotComplete(const std::string& what = "fan is not complete") : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural invariant violations found while reading a datum. Carries the
/// full violation list from validate().
class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(const std::string& what, std::vector<std::string> violations)
        : std::runtime_error(what), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Internal fast-path overflow; callers retry with arbitrary precision.
class ArithmeticOverflow : public std::runtime_error {
public:
    ArithmeticOverflow() : std::runtime_error("checked integer overflow") {}
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

} // namespace lvmb

#endif

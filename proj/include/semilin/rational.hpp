#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace semilin {

/// Exact rational scalar, always held in lowest terms with a positive
/// denominator. Expression templates are disabled so that `auto` behaves.
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws ParseError.
Rat parse_rat(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_rat(const Rat& value);

/// A rational or one of the two infinities.
class Extended {
public:
    enum class Kind { NegInf, Finite, PosInf };

    Extended() = default;
    Extended(Rat value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT implicit
    Extended(int value) : Extended(Rat(value)) {}                            // NOLINT implicit

    static Extended neg_inf() { return Extended(Kind::NegInf); }
    static Extended pos_inf() { return Extended(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    /// Precondition: is_finite().
    const Rat& value() const;

    friend bool operator==(const Extended& a, const Extended& b);
    friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

private:
    explicit Extended(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Finite;
    Rat value_{0};
};

/// "-inf", "+inf"/"inf", or a rational.
Extended parse_extended(std::string_view text);
std::string format_extended(const Extended& value);

std::ostream& operator<<(std::ostream& os, const Extended& value);

/// Extended arithmetic used for lengths and images; the caller must not form
/// an indeterminate (inf - inf) expression.
Extended operator+(const Extended& a, const Rat& b);
Extended operator-(const Extended& a, const Extended& b);
/// Multiplication by a nonzero rational.
Extended scale(const Extended& a, const Rat& q);

inline std::strong_ordering compare(const Rat& a, const Rat& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace semilin

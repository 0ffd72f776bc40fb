#include "semilin/rational.hpp"

#include "semilin/error.hpp"

#include <cctype>
#include <ostream>

namespace semilin {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

cpp_int parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!all_digits(text)) fail(ErrorTag::ParseError, "not a rational: \"" + std::string(whole) + "\"");
    cpp_int value{std::string(text)};
    return negative ? cpp_int(-value) : value;
}

}  // namespace

std::string_view to_string(ErrorTag tag) {
    switch (tag) {
        case ErrorTag::ParseError: return "ParseError";
        case ErrorTag::MalformedInterval: return "MalformedInterval";
        case ErrorTag::MalformedCell: return "MalformedCell";
        case ErrorTag::MalformedFamily: return "MalformedFamily";
        case ErrorTag::InvalidArgument: return "InvalidArgument";
        case ErrorTag::PreconditionViolation: return "PreconditionViolation";
        case ErrorTag::NoIsolatingShift: return "NoIsolatingShift";
        case ErrorTag::IterationCapExceeded: return "IterationCapExceeded";
        case ErrorTag::DanglingRef: return "DanglingRef";
        case ErrorTag::DimensionMismatch: return "DimensionMismatch";
        case ErrorTag::PointNotInSet: return "PointNotInSet";
        case ErrorTag::UnboundedFiber: return "UnboundedFiber";
        case ErrorTag::UnknownName: return "UnknownName";
        case ErrorTag::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Unknown";
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
    cpp_int num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) fail(ErrorTag::ParseError, "bad denominator in \"" + std::string(text) + "\"");
    cpp_int den(std::string{den_text});
    if (den == 0) fail(ErrorTag::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    return Rat(num, den);
}

std::string format_rat(const Rat& value) {
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

const Rat& Extended::value() const {
    if (kind_ != Kind::Finite) fail(ErrorTag::InvalidArgument, "value() of an infinite endpoint");
    return value_;
}

bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Extended::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Extended::Kind::Finite) return std::strong_ordering::equal;
    return compare(a.value_, b.value_);
}

Extended parse_extended(std::string_view text) {
    if (text == "-inf") return Extended::neg_inf();
    if (text == "+inf" || text == "inf") return Extended::pos_inf();
    return Extended(parse_rat(text));
}

std::string format_extended(const Extended& value) {
    if (value.is_neg_inf()) return "-inf";
    if (value.is_pos_inf()) return "+inf";
    return format_rat(value.value());
}

std::ostream& operator<<(std::ostream& os, const Extended& value) {
    return os << format_extended(value);
}

Extended operator+(const Extended& a, const Rat& b) {
    if (!a.is_finite()) return a;
    return Extended(a.value() + b);
}

Extended operator-(const Extended& a, const Extended& b) {
    if (a.is_finite() && b.is_finite()) return Extended(a.value() - b.value());
    if ((a.is_pos_inf() && b.is_pos_inf()) || (a.is_neg_inf() && b.is_neg_inf()))
        fail(ErrorTag::InvalidArgument, "indeterminate inf - inf");
    if (a.is_pos_inf() || b.is_neg_inf()) return Extended::pos_inf();
    return Extended::neg_inf();
}

Extended scale(const Extended& a, const Rat& q) {
    if (q == 0) fail(ErrorTag::InvalidArgument, "scale by zero");
    if (a.is_finite()) return Extended(a.value() * q);
    const bool flip = q < 0;
    if (a.is_pos_inf()) return flip ? Extended::neg_inf() : Extended::pos_inf();
    return flip ? Extended::pos_inf() : Extended::neg_inf();
}

}  // namespace semilin

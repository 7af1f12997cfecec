#pragma once

#include <cstdint>
#include <string>
#include <ostream>

namespace sboxkit {

/// Unreduced ratio. Keeps the numerator/denominator the metric was computed
/// from ("8/32", "64/128"); comparison is by value.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num * b.den == b.num * a.den; }
    friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }
};

} // namespace sboxkit

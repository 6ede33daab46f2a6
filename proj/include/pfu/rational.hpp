#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pfu {

/// Exact fraction with int64 parts kept in lowest terms, denominator > 0.
/// Products and comparisons go through 128-bit intermediates.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Accepts "p/q" or an integer "p". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// floor(this * m) without rounding error.
    std::int64_t floor_times(std::int64_t m) const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace pfu

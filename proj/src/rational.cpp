#include "pfu/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pfu {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den)
{
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t Rational::floor_times(std::int64_t m) const
{
    Wide p = static_cast<Wide>(num_) * m;
    Wide q = p / den_;
    if (p % den_ != 0 && p < 0) --q;
    return narrow(q);
}

Rational Rational::operator+(const Rational& o) const
{
    return make(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_, static_cast<Wide>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const
{
    return make(static_cast<Wide>(num_) * o.den_ - static_cast<Wide>(o.num_) * den_, static_cast<Wide>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const
{
    return make(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const
{
    return make(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const
{
    Wide lhs = static_cast<Wide>(num_) * o.den_;
    Wide rhs = static_cast<Wide>(o.num_) * den_;
    return lhs <=> rhs;
}

std::string Rational::to_string() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace pfu

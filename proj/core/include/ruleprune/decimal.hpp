#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ruleprune {

/// Exact decimal number: unscaled * 10^-scale.
///
/// Always kept normalized (no trailing fractional zeros, zero has scale 0),
/// so str() is a canonical form and two equal values print identically.
/// Division rounds to kQuotientScale fractional digits, half to even; all
/// other operations are exact.
class Decimal {
public:
    using Int = boost::multiprecision::cpp_int;

    static constexpr int kQuotientScale = 12;

    Decimal() = default;
    Decimal(Int unscaled, int scale) : unscaled_(std::move(unscaled)), scale_(scale) {
        normalize();
    }

    /// Accepts `-? digits (. digits)?`; no exponent, no '+'. Empty on any
    /// other shape.
    static std::optional<Decimal> parse(std::string_view text);

    static Decimal from_int(long long v) { return Decimal(Int(v), 0); }

    Decimal operator+(const Decimal& o) const;
    Decimal operator-(const Decimal& o) const;
    Decimal operator*(const Decimal& o) const;

    /// Quotient at kQuotientScale fractional digits, round half to even.
    /// Empty when the divisor is zero.
    static std::optional<Decimal> divide(const Decimal& num, const Decimal& den);

    int compare(const Decimal& o) const;
    bool operator==(const Decimal& o) const { return compare(o) == 0; }
    std::strong_ordering operator<=>(const Decimal& o) const {
        int c = compare(o);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    bool is_zero() const { return unscaled_ == 0; }
    const Int& unscaled() const { return unscaled_; }
    int scale() const { return scale_; }

    std::string str() const;

private:
    void normalize();

    Int unscaled_ = 0;
    int scale_ = 0;
};

}  // namespace ruleprune

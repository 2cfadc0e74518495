#include "ruleprune/decimal.hpp"

#include <algorithm>
#include <cctype>

namespace ruleprune {

namespace {

Decimal::Int pow10(int e) {
    static const Decimal::Int kTen = 10;
    Decimal::Int r = 1;
    for (int i = 0; i < e; ++i) r *= kTen;
    return r;
}

// Magnitude quotient with round-half-to-even; sign applied afterwards.
Decimal::Int div_half_even(const Decimal::Int& num, const Decimal::Int& den) {
    const bool neg = (num < 0) != (den < 0);
    Decimal::Int n = abs(num);
    Decimal::Int d = abs(den);
    Decimal::Int q = n / d;
    Decimal::Int r = n % d;
    Decimal::Int twice = r * 2;
    if (twice > d || (twice == d && (q & 1) != 0)) ++q;
    if (neg) q = -q;
    return q;
}

}  // namespace

void Decimal::normalize() {
    if (unscaled_ == 0) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && unscaled_ % 10 == 0) {
        unscaled_ /= 10;
        --scale_;
    }
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (text[0] == '-') {
        neg = true;
        i = 1;
    }
    size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) return std::nullopt;
    Int unscaled = 0;
    for (size_t j = digits_start; j < i; ++j) unscaled = unscaled * 10 + (text[j] - '0');
    int scale = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        size_t frac_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == frac_start) return std::nullopt;
        for (size_t j = frac_start; j < i; ++j) unscaled = unscaled * 10 + (text[j] - '0');
        scale = static_cast<int>(i - frac_start);
    }
    if (i != text.size()) return std::nullopt;
    if (neg) unscaled = -unscaled;
    return Decimal(std::move(unscaled), scale);
}

Decimal Decimal::operator+(const Decimal& o) const {
    int s = std::max(scale_, o.scale_);
    Int a = unscaled_ * pow10(s - scale_);
    Int b = o.unscaled_ * pow10(s - o.scale_);
    return Decimal(a + b, s);
}

Decimal Decimal::operator-(const Decimal& o) const {
    int s = std::max(scale_, o.scale_);
    Int a = unscaled_ * pow10(s - scale_);
    Int b = o.unscaled_ * pow10(s - o.scale_);
    return Decimal(a - b, s);
}

Decimal Decimal::operator*(const Decimal& o) const {
    return Decimal(unscaled_ * o.unscaled_, scale_ + o.scale_);
}

std::optional<Decimal> Decimal::divide(const Decimal& num, const Decimal& den) {
    if (den.is_zero()) return std::nullopt;
    // num/den * 10^k = num.unscaled * 10^(k - num.scale + den.scale) / den.unscaled
    int e = kQuotientScale - num.scale_ + den.scale_;
    Int n = num.unscaled_;
    Int d = den.unscaled_;
    if (e >= 0)
        n *= pow10(e);
    else
        d *= pow10(-e);
    return Decimal(div_half_even(n, d), kQuotientScale);
}

int Decimal::compare(const Decimal& o) const {
    int s = std::max(scale_, o.scale_);
    Int a = unscaled_ * pow10(s - scale_);
    Int b = o.unscaled_ * pow10(s - o.scale_);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

std::string Decimal::str() const {
    Int mag = abs(unscaled_);
    std::string digits = mag.str();
    std::string out;
    if (unscaled_ < 0) out += '-';
    if (scale_ == 0) {
        out += digits;
        return out;
    }
    if (static_cast<int>(digits.size()) <= scale_)
        digits.insert(0, static_cast<size_t>(scale_) - digits.size() + 1, '0');
    out += digits.substr(0, digits.size() - scale_);
    out += '.';
    out += digits.substr(digits.size() - scale_);
    return out;
}

}  // namespace ruleprune

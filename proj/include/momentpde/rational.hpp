#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace momentpde {

// Exact rational with canonical form: gcd(num, den) == 1, den > 0.
// Used wherever slopes and orders must compare exactly; parsing enforces
// a denominator cap so inputs stay within the supported grid of orders.
class Rational {
public:
    static constexpr std::int64_t kInputDenominatorCap = 64;

    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den);
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design

    // Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed
    // input or a (reduced) denominator above kInputDenominatorCap.
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const;
    std::string to_string() const;  // "p" when den == 1, else "p/q"

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on division by zero

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace momentpde

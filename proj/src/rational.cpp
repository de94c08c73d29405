#include "momentpde/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace momentpde {

namespace {

std::int64_t checked(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : den;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
            return Rational(n);
        }
        const std::int64_t n = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("trailing characters");
        const std::string dtext = text.substr(slash + 1);
        const std::int64_t d = std::stoll(dtext, &pos);
        if (pos != dtext.size()) throw std::invalid_argument("trailing characters");
        Rational r(n, d);
        if (r.den_ > kInputDenominatorCap) {
            throw std::invalid_argument("denominator above cap");
        }
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    }
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked(n, "+"), checked(d, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num_) * o.num_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    return Rational(checked(n, "*"), checked(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    const __int128 n = static_cast<__int128>(num_) * o.den_;
    const __int128 d = static_cast<__int128>(den_) * o.num_;
    return Rational(checked(n, "/"), checked(d, "/"));
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace momentpde

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tempvote {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Values stay tiny here (harmonic sums over at most a few
// dozen voters and rounds), but every operation still checks that the
// reduced result fits, so silent wraparound is impossible.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        return fromI128(n, d);
    }
    Rational operator-(const Rational& o) const {
        __int128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        return fromI128(n, d);
    }
    Rational operator*(const Rational& o) const {
        return fromI128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Sum of 1/1 + 1/2 + ... + 1/k.
    static Rational harmonic(int k) {
        Rational h;
        for (int j = 1; j <= k; ++j) h += Rational(1, j);
        return h;
    }

    // Parses "NUM/DEN" or a bare integer.
    static Rational parse(const std::string& text);

private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static Rational fromI128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    void normalize() { *this = fromI128(i128(num_), i128(den_)); }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(std::stoll(text));
        }
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        if (d == 0) throw std::domain_error("zero denominator");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + text);
    }
}

}  // namespace tempvote

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace imcn {

// Exact reduced fraction with den > 0. All chromatic values and concurrency
// measures are carried as Rationals; comparisons cross-multiply in 128 bits
// so ties like 5/2 vs 10/4 are decided exactly.
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational reciprocal() const {
        if (num_ == 0) throw std::invalid_argument("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace imcn

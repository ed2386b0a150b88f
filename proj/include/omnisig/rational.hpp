#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace omnisig {

// Thrown when a 64-bit checked operation would wrap. All characteristic
// arithmetic is exact; overflow is an error, never silent.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace detail

/// Exact fraction with 64-bit checked arithmetic. Always stored reduced
/// with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) { n = detail::checked_sub(0, n); d = detail::checked_sub(0, d); }
        const std::int64_t g = std::gcd(n, d);
        num_ = g ? n / g : n;
        den_ = g ? d / g : d;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t as_integer() const {
        if (!is_integer()) throw std::logic_error("Rational: not an integer");
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::checked_add;
        using detail::checked_mul;
        const std::int64_t g = std::gcd(a.den_, b.den_);
        // n = a.num*(b.den/g) + b.num*(a.den/g), d = a.den*(b.den/g)
        return Rational(
            checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g)),
            checked_mul(a.den_, b.den_ / g));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(detail::checked_sub(0, b.num_), b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
        const std::int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace omnisig

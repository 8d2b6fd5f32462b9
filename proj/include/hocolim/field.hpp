// Exact coefficient fields: arbitrary-precision rationals and prime fields.
// The field is a global run parameter; all structure constants in the library
// are integral, so every construction works verbatim over either field.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hocolim {

class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : v_(n) {}
    explicit Rational(rep v) : v_(std::move(v)) {}

    static Rational from_int(long long n) { return Rational(n); }

    bool is_zero() const { return v_ == 0; }

    Rational operator-() const { return Rational(rep(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(rep(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(rep(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(rep(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational(rep(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return Rational(rep(1) / v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.str(); }
    static const char* field_name() { return "rat"; }

private:
    rep v_{};
};

// Prime field with a run-global modulus, set once before any Fp value is made.
class Fp {
public:
    Fp() = default;
    Fp(long long n) {
        long long m = n % static_cast<long long>(modulus());
        if (m < 0) m += static_cast<long long>(modulus());
        v_ = static_cast<std::uint64_t>(m);
    }

    static void set_modulus(std::uint64_t p) {
        if (p < 2 || !is_prime(p)) throw std::domain_error("modulus must be prime: " + std::to_string(p));
        if (p >= (1ull << 31)) throw std::domain_error("modulus too large");
        p_ = p;
    }
    static std::uint64_t modulus() { return p_; }

    static Fp from_int(long long n) { return Fp(n); }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
    Fp operator+(const Fp& o) const { std::uint64_t s = v_ + o.v_; return raw(s >= p_ ? s - p_ : s); }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const { return raw((v_ * o.v_) % p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("division by zero");
        return raw(powmod(v_, p_ - 2));
    }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }
    static std::string field_name() { return "fp:" + std::to_string(p_); }

private:
    static Fp raw(std::uint64_t v) { Fp x; x.v_ = v; return x; }
    static std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = (r * b) % p_;
            b = (b * b) % p_;
            e >>= 1;
        }
        return r;
    }
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t v_ = 0;
    inline static std::uint64_t p_ = 2;
};

template <class K>
concept Scalar = requires(K a, K b) {
    { K(0LL) };
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inv() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

// (-1)^n as a field element
template <Scalar K>
K sign_pow(long long n) {
    return (n % 2 == 0) ? K(1) : K(-1);
}

}  // namespace hocolim

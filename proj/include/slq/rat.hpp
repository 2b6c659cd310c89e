#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>

namespace slq {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with positive
// denominator. Construction from floating point is forbidden; every value in
// the engine is built from integers or parsed from "p/q" text.
class Rat {
public:
    Rat() = default;
    template <std::integral T>
    Rat(T n) : value_(static_cast<long long>(n)) {}
    Rat(BigInt n) : value_(std::move(n)) {}
    Rat(long long num, long long den);
    Rat(BigInt num, BigInt den);

    template <std::floating_point T>
    Rat(T) = delete;

    static Rat parse(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return value_ < 0; }
    bool is_positive() const { return value_ > 0; }

    int sign() const { return value_ < 0 ? -1 : value_ > 0 ? 1 : 0; }

    // Integral value, valid only when is_integer() and within long long range.
    long long as_integer() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rat abs() const { return value_ < 0 ? -*this : *this; }

    // Renders "p/q", or just "p" for integers.
    std::string str() const;

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& q);

// A value b + a*eps, where eps stands for an arbitrarily small positive
// quantity. Sign queries resolve "for all sufficiently small eps > 0".
class EpsLinear {
public:
    EpsLinear() = default;
    EpsLinear(Rat constant) : constant_(std::move(constant)) {}
    EpsLinear(Rat constant, Rat eps_coeff)
        : constant_(std::move(constant)), eps_coeff_(std::move(eps_coeff)) {}

    static EpsLinear eps() { return EpsLinear(Rat(0), Rat(1)); }

    const Rat& constant() const { return constant_; }
    const Rat& eps_coeff() const { return eps_coeff_; }

    enum class Sign { Negative, Zero, Positive };
    Sign sign() const;

    bool is_positive() const { return sign() == Sign::Positive; }
    bool is_zero() const { return sign() == Sign::Zero; }
    bool is_negative() const { return sign() == Sign::Negative; }

    EpsLinear operator-() const { return {-constant_, -eps_coeff_}; }
    EpsLinear& operator+=(const EpsLinear& o) {
        constant_ += o.constant_;
        eps_coeff_ += o.eps_coeff_;
        return *this;
    }
    EpsLinear& operator-=(const EpsLinear& o) { return *this += -o; }

    friend EpsLinear operator+(EpsLinear a, const EpsLinear& b) { return a += b; }
    friend EpsLinear operator-(EpsLinear a, const EpsLinear& b) { return a -= b; }
    friend EpsLinear operator*(const Rat& c, const EpsLinear& v) {
        return {c * v.constant(), c * v.eps_coeff()};
    }

    friend bool operator==(const EpsLinear& a, const EpsLinear& b) = default;

    // Renders e.g. "0", "eps", "3*eps", "1/6 + eps", "2/3 - 5*eps".
    std::string str() const;

private:
    Rat constant_;
    Rat eps_coeff_;
};

std::ostream& operator<<(std::ostream& os, const EpsLinear& v);

}  // namespace slq

#pragma once

// Cost values: exact rationals where the protocol yields dyadic probabilities,
// doubles otherwise. Arithmetic stays exact while both operands are exact and
// degrades to double as soon as one is not. Comparisons involving an inexact
// operand use a relative tolerance of Number::tolerance.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace qpigou {

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);

/// "n/d", or "n" when d == 1.
std::string to_string(const Rational& r);

/// Snaps p to the nearest of {0, 1/4, 1/2, 3/4, 1} if within tol.
std::optional<Rational> snap_probability(double p, double tol = 1e-10);

class Number
{
public:
    static constexpr double tolerance = 1e-12;

    Number() : exact_(Rational(0)) {}
    Number(Rational r) : exact_(r) {}
    Number(std::int64_t n) : exact_(Rational(n)) {}
    Number(std::int64_t num, std::int64_t den) : exact_(Rational(num, den)) {}

    static Number inexact(double value);

    bool is_exact() const noexcept { return exact_.has_value(); }

    /// Throws std::logic_error when inexact.
    const Rational& rational() const;

    double value() const { return exact_ ? to_double(*exact_) : approx_; }

    /// Rational text when exact, shortest round-trip decimal otherwise.
    std::string to_string() const;

    Number operator-() const;
    Number& operator+=(const Number& o) { return *this = *this + o; }
    Number& operator-=(const Number& o) { return *this = *this - o; }
    Number& operator*=(const Number& o) { return *this = *this * o; }

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    /// Throws DomainError on division by (near) zero.
    friend Number operator/(const Number& a, const Number& b);

    friend std::weak_ordering operator<=>(const Number& a, const Number& b);
    friend bool operator==(const Number& a, const Number& b) { return (a <=> b) == 0; }

    bool is_zero() const { return *this == Number(0); }

private:
    std::optional<Rational> exact_;
    double approx_ = 0.0;
};

} // namespace qpigou

#include "qpigou/number.hpp"

#include "qpigou/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qpigou {

double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return fmt::format("{}/{}", r.numerator(), r.denominator());
}

std::optional<Rational> snap_probability(double p, double tol)
{
    static const std::array<Rational, 5> anchors{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                                 Rational(1)};
    for (const auto& anchor : anchors) {
        if (std::abs(p - to_double(anchor)) <= tol) {
            return anchor;
        }
    }
    return std::nullopt;
}

Number Number::inexact(double value)
{
    if (!std::isfinite(value)) {
        throw DomainError("value", "non-finite number");
    }
    Number n;
    n.exact_.reset();
    n.approx_ = value;
    return n;
}

const Rational& Number::rational() const
{
    if (!exact_) {
        throw std::logic_error("Number::rational() called on an inexact value");
    }
    return *exact_;
}

std::string Number::to_string() const
{
    if (exact_) {
        return qpigou::to_string(*exact_);
    }
    return fmt::format("{}", approx_);
}

Number Number::operator-() const
{
    if (exact_) {
        return Number(-*exact_);
    }
    return inexact(-approx_);
}

Number operator+(const Number& a, const Number& b)
{
    if (a.exact_ && b.exact_) {
        return Number(*a.exact_ + *b.exact_);
    }
    return Number::inexact(a.value() + b.value());
}

Number operator-(const Number& a, const Number& b)
{
    if (a.exact_ && b.exact_) {
        return Number(*a.exact_ - *b.exact_);
    }
    return Number::inexact(a.value() - b.value());
}

Number operator*(const Number& a, const Number& b)
{
    if (a.exact_ && b.exact_) {
        return Number(*a.exact_ * *b.exact_);
    }
    return Number::inexact(a.value() * b.value());
}

Number operator/(const Number& a, const Number& b)
{
    if (b.is_zero()) {
        throw DomainError("divisor", "division by zero");
    }
    if (a.exact_ && b.exact_) {
        return Number(*a.exact_ / *b.exact_);
    }
    return Number::inexact(a.value() / b.value());
}

std::weak_ordering operator<=>(const Number& a, const Number& b)
{
    if (a.exact_ && b.exact_) {
        if (*a.exact_ < *b.exact_) return std::weak_ordering::less;
        if (*b.exact_ < *a.exact_) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }
    const double x = a.value();
    const double y = b.value();
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x - y) <= Number::tolerance * scale) {
        return std::weak_ordering::equivalent;
    }
    return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
}

} // namespace qpigou

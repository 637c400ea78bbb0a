#pragma once

// Fixed-size dense complex linear algebra for the two-qubit protocol:
// 2x2 single-qubit operators, 4x4 two-qubit operators and length-4 states.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace qpigou {

using Complex = std::complex<double>;

/// Square complex matrix of compile-time order N, stored row-major.
/// Only N = 2 and N = 4 are instantiated.
template <std::size_t N>
class SquareMatrix
{
public:
    static constexpr std::size_t order = N;

    SquareMatrix() = default;

    /// Builds from N*N entries in row-major order. Non-finite entries are
    /// rejected with DomainError.
    SquareMatrix(std::initializer_list<Complex> row_major);

    static SquareMatrix identity();
    static SquareMatrix zero() { return SquareMatrix{}; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * N + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * N + col]; }

    const std::array<Complex, N * N>& entries() const noexcept { return entries_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::array<Complex, N * N> entries_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// Two-qubit state in the basis |00>, |01>, |10>, |11>; the first bit is
/// Alice's qubit, the second Bob's.
struct StateVector4
{
    std::array<Complex, 4> amplitudes{};

    static StateVector4 basis(std::size_t index);

    const Complex& operator[](std::size_t i) const { return amplitudes[i]; }
    Complex& operator[](std::size_t i) { return amplitudes[i]; }

    double norm_squared() const;
};

template <std::size_t N>
SquareMatrix<N> operator*(const SquareMatrix<N>& a, const SquareMatrix<N>& b);
template <std::size_t N>
SquareMatrix<N> operator*(Complex scale, const SquareMatrix<N>& m);
template <std::size_t N>
SquareMatrix<N> operator+(const SquareMatrix<N>& a, const SquareMatrix<N>& b);
template <std::size_t N>
SquareMatrix<N> operator-(const SquareMatrix<N>& a, const SquareMatrix<N>& b);

/// Kronecker product: entry (2i+k, 2j+l) = a(i,j) * b(k,l).
Mat4 tensor_product(const Mat2& a, const Mat2& b);

StateVector4 apply(const Mat4& m, const StateVector4& v);

/// Conjugate transpose.
template <std::size_t N>
SquareMatrix<N> dagger(const SquareMatrix<N>& m);

Complex determinant(const Mat2& m);

/// True iff m * dagger(m) is within tol of the identity in every entry.
/// tol must be positive.
template <std::size_t N>
bool is_unitary(const SquareMatrix<N>& m, double tol);

/// Largest entry-wise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b);

} // namespace qpigou

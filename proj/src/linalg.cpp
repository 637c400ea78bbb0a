#include "qpigou/linalg.hpp"

#include "qpigou/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qpigou {

namespace {

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

template <std::size_t N>
SquareMatrix<N>::SquareMatrix(std::initializer_list<Complex> row_major)
{
    if (row_major.size() != N * N) {
        throw DomainError("entries", "expected " + std::to_string(N * N) + " entries");
    }
    std::copy(row_major.begin(), row_major.end(), entries_.begin());
    if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
        throw DomainError("entries", "matrix entries must be finite");
    }
}

template <std::size_t N>
SquareMatrix<N> SquareMatrix<N>::identity()
{
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

StateVector4 StateVector4::basis(std::size_t index)
{
    if (index >= 4) {
        throw DomainError("index", "basis index must be in 0..3");
    }
    StateVector4 v;
    v.amplitudes[index] = 1.0;
    return v;
}

double StateVector4::norm_squared() const
{
    double sum = 0.0;
    for (const auto& a : amplitudes) {
        sum += std::norm(a);
    }
    return sum;
}

template <std::size_t N>
SquareMatrix<N> operator*(const SquareMatrix<N>& a, const SquareMatrix<N>& b)
{
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            Complex acc{};
            for (std::size_t t = 0; t < N; ++t) {
                acc += a(i, t) * b(t, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> operator*(Complex scale, const SquareMatrix<N>& m)
{
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = scale * m(i, j);
        }
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> operator+(const SquareMatrix<N>& a, const SquareMatrix<N>& b)
{
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = a(i, j) + b(i, j);
        }
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> operator-(const SquareMatrix<N>& a, const SquareMatrix<N>& b)
{
    return a + Complex(-1.0) * b;
}

Mat4 tensor_product(const Mat2& a, const Mat2& b)
{
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

StateVector4 apply(const Mat4& m, const StateVector4& v)
{
    StateVector4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < 4; ++j) {
            acc += m(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> dagger(const SquareMatrix<N>& m)
{
    SquareMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = std::conj(m(j, i));
        }
    }
    return out;
}

Complex determinant(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

template <std::size_t N>
bool is_unitary(const SquareMatrix<N>& m, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("tol", "tolerance must be positive");
    }
    return max_abs_diff(m * dagger(m), SquareMatrix<N>::identity()) <= tol;
}

#define QPIGOU_INSTANTIATE(N)                                                                       \
    template class SquareMatrix<N>;                                                                \
    template SquareMatrix<N> operator*(const SquareMatrix<N>&, const SquareMatrix<N>&);            \
    template SquareMatrix<N> operator*(Complex, const SquareMatrix<N>&);                           \
    template SquareMatrix<N> operator+(const SquareMatrix<N>&, const SquareMatrix<N>&);            \
    template SquareMatrix<N> operator-(const SquareMatrix<N>&, const SquareMatrix<N>&);            \
    template SquareMatrix<N> dagger(const SquareMatrix<N>&);                                       \
    template bool is_unitary(const SquareMatrix<N>&, double);                                      \
    template double max_abs_diff(const SquareMatrix<N>&, const SquareMatrix<N>&);

QPIGOU_INSTANTIATE(2)
QPIGOU_INSTANTIATE(4)

#undef QPIGOU_INSTANTIATE

} // namespace qpigou

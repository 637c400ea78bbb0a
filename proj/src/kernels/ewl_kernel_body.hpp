#pragma once

// Per-lane EWL evolution written once against a minimal vector interface
// (+, -, * on V). Instantiated with double for the scalar kernel and with an
// __m256d wrapper for AVX2. Both see the same operation order, so their
// outputs agree bit for bit when FMA contraction is disabled.
//
// With c = cos(gamma/2), s = sin(gamma/2) and a0/a1 (b0/b1) the columns of
// U_A (U_B):
//   psi1 = c (a0 (x) b0) - i s (a1 (x) b1)          (J|00> = c|00> - i s|11>)
//   psif = c psi1 + i s (P2 (x) P2) psi1,  (P2 (x) P2) v = (v3, -v2, -v1, v0)

namespace qpigou::kernels::detail {

template <class V>
struct CVec
{
    V re;
    V im;
};

template <class V>
inline CVec<V> cmul(const CVec<V>& x, const CVec<V>& y)
{
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

/// a, b: the four row-major entries of each player's matrix.
template <class V>
inline void ewl_lane(const CVec<V> (&a)[4], const CVec<V> (&b)[4], V c, V s, V (&p)[4])
{
    // Column 0 is entries (0, 2), column 1 is entries (1, 3).
    CVec<V> psi1[4];
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const CVec<V> t0 = cmul(a[2 * x], b[2 * y]);
            const CVec<V> t1 = cmul(a[2 * x + 1], b[2 * y + 1]);
            psi1[2 * x + y] = {c * t0.re + s * t1.im, c * t0.im - s * t1.re};
        }
    }

    // Entries 0/3 pick up +i s of their partner, entries 1/2 pick up -i s.
    const CVec<V> f0{c * psi1[0].re - s * psi1[3].im, c * psi1[0].im + s * psi1[3].re};
    const CVec<V> f1{c * psi1[1].re + s * psi1[2].im, c * psi1[1].im - s * psi1[2].re};
    const CVec<V> f2{c * psi1[2].re + s * psi1[1].im, c * psi1[2].im - s * psi1[1].re};
    const CVec<V> f3{c * psi1[3].re - s * psi1[0].im, c * psi1[3].im + s * psi1[0].re};

    p[0] = f0.re * f0.re + f0.im * f0.im;
    p[1] = f1.re * f1.re + f1.im * f1.im;
    p[2] = f2.re * f2.re + f2.im * f2.im;
    p[3] = f3.re * f3.re + f3.im * f3.im;
}

/// Scalar evaluation of pairs [first, last).
inline void ewl_scalar_range(const PairView& in, double c, double s, const OutcomeView& out, std::size_t first,
                             std::size_t last)
{
    for (std::size_t i = first; i < last; ++i) {
        CVec<double> a[4];
        CVec<double> b[4];
        for (int e = 0; e < 4; ++e) {
            a[e] = {in.a_re[e][i], in.a_im[e][i]};
            b[e] = {in.b_re[e][i], in.b_im[e][i]};
        }
        double p[4];
        ewl_lane(a, b, c, s, p);
        for (int e = 0; e < 4; ++e) {
            out.p[e][i] = p[e];
        }
    }
}

} // namespace qpigou::kernels::detail

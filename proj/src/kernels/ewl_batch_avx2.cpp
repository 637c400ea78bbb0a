#include "qpigou/kernels/ewl_batch.hpp"

#include "ewl_kernel_body.hpp"

#include <immintrin.h>

namespace qpigou::kernels {

namespace {

struct F64x4
{
    __m256d v;

    static F64x4 load(const double* p) { return {_mm256_loadu_pd(p)}; }
    static F64x4 broadcast(double x) { return {_mm256_set1_pd(x)}; }
    void store(double* p) const { _mm256_storeu_pd(p, v); }

    friend F64x4 operator+(F64x4 x, F64x4 y) { return {_mm256_add_pd(x.v, y.v)}; }
    friend F64x4 operator-(F64x4 x, F64x4 y) { return {_mm256_sub_pd(x.v, y.v)}; }
    friend F64x4 operator*(F64x4 x, F64x4 y) { return {_mm256_mul_pd(x.v, y.v)}; }
};

} // namespace

void ewl_outcomes_avx2(const PairView& in, double cos_half, double sin_half, const OutcomeView& out)
{
    const F64x4 c = F64x4::broadcast(cos_half);
    const F64x4 s = F64x4::broadcast(sin_half);

    std::size_t i = 0;
    for (; i + 4 <= in.count; i += 4) {
        detail::CVec<F64x4> a[4];
        detail::CVec<F64x4> b[4];
        for (int e = 0; e < 4; ++e) {
            a[e] = {F64x4::load(in.a_re[e] + i), F64x4::load(in.a_im[e] + i)};
            b[e] = {F64x4::load(in.b_re[e] + i), F64x4::load(in.b_im[e] + i)};
        }
        F64x4 p[4];
        detail::ewl_lane(a, b, c, s, p);
        for (int e = 0; e < 4; ++e) {
            p[e].store(out.p[e] + i);
        }
    }
    detail::ewl_scalar_range(in, cos_half, sin_half, out, i, in.count);
}

} // namespace qpigou::kernels

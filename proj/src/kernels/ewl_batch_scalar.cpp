#include "qpigou/kernels/ewl_batch.hpp"

#include "ewl_kernel_body.hpp"

namespace qpigou::kernels {

void ewl_outcomes_scalar(const PairView& in, double cos_half, double sin_half, const OutcomeView& out)
{
    detail::ewl_scalar_range(in, cos_half, sin_half, out, 0, in.count);
}

} // namespace qpigou::kernels

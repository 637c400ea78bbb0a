#include "qpigou/kernels/ewl_batch.hpp"

#include "qpigou/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qpigou::kernels {

namespace {

bool cpu_has_avx2()
{
#if defined(QPIGOU_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool scalar_forced()
{
    const char* value = std::getenv("QPIGOU_FORCE_SCALAR");
    return value != nullptr && std::string(value) == "1";
}

} // namespace

#if !defined(QPIGOU_HAVE_AVX2_KERNEL)
void ewl_outcomes_avx2(const PairView&, double, double, const OutcomeView&)
{
    throw DomainError("isa", "AVX2 kernel not built for this target");
}
#endif

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
    }
    return false;
}

Isa best_isa()
{
    static const Isa chosen = (!scalar_forced() && isa_available(Isa::Avx2)) ? Isa::Avx2 : Isa::Scalar;
    return chosen;
}

void StrategyPairBatch::reserve(std::size_t count)
{
    for (auto* group : {&a_re_, &a_im_, &b_re_, &b_im_}) {
        for (auto& column : *group) {
            column.reserve(count);
        }
    }
}

void StrategyPairBatch::push_back(const Mat2& ua, const Mat2& ub)
{
    for (std::size_t e = 0; e < 4; ++e) {
        a_re_[e].push_back(ua.entries()[e].real());
        a_im_[e].push_back(ua.entries()[e].imag());
        b_re_[e].push_back(ub.entries()[e].real());
        b_im_[e].push_back(ub.entries()[e].imag());
    }
}

void OutcomeBatch::resize(std::size_t count)
{
    for (auto& column : p_) {
        column.assign(count, 0.0);
    }
}

OutcomeDistribution OutcomeBatch::at(std::size_t pair) const
{
    return {p_[0].at(pair), p_[1].at(pair), p_[2].at(pair), p_[3].at(pair)};
}

void ewl_outcomes_batch(const StrategyPairBatch& pairs, EntanglementParam g, OutcomeBatch& out, Isa isa)
{
    if (!isa_available(isa)) {
        throw DomainError("isa", std::string(isa_name(isa)) + " kernel is not available on this CPU");
    }
    out.resize(pairs.size());

    PairView in{};
    for (std::size_t e = 0; e < 4; ++e) {
        in.a_re[e] = pairs.a_re(e);
        in.a_im[e] = pairs.a_im(e);
        in.b_re[e] = pairs.b_re(e);
        in.b_im[e] = pairs.b_im(e);
    }
    in.count = pairs.size();
    const OutcomeView view{{out.outcome(0), out.outcome(1), out.outcome(2), out.outcome(3)}};

    const double half = g.gamma() / 2;
    switch (isa) {
    case Isa::Scalar: ewl_outcomes_scalar(in, std::cos(half), std::sin(half), view); break;
    case Isa::Avx2: ewl_outcomes_avx2(in, std::cos(half), std::sin(half), view); break;
    }
}

void ewl_outcomes_batch(const StrategyPairBatch& pairs, EntanglementParam g, OutcomeBatch& out)
{
    ewl_outcomes_batch(pairs, g, out, best_isa());
}

} // namespace qpigou::kernels

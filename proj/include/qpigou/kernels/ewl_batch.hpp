#pragma once

// Batched EWL outcome evaluation over many (U_A, U_B) pairs at one gamma.
//
// Strategy matrices are stored structure-of-arrays so a vector lane holds one
// pair. The scalar kernel is the reference; the AVX2 kernel performs the same
// operation sequence four pairs at a time (no FMA contraction) and is selected
// at runtime when the CPU supports it.

#include "qpigou/ewl.hpp"
#include "qpigou/linalg.hpp"

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qpigou::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Whether this build contains the kernel and the running CPU can execute it.
bool isa_available(Isa isa);

/// Best available kernel; QPIGOU_FORCE_SCALAR=1 in the environment pins Scalar.
Isa best_isa();

class StrategyPairBatch
{
public:
    void reserve(std::size_t count);
    void push_back(const Mat2& ua, const Mat2& ub);
    std::size_t size() const noexcept { return a_re_[0].size(); }

    // Entry e in row-major order (00, 01, 10, 11).
    const double* a_re(std::size_t e) const { return a_re_[e].data(); }
    const double* a_im(std::size_t e) const { return a_im_[e].data(); }
    const double* b_re(std::size_t e) const { return b_re_[e].data(); }
    const double* b_im(std::size_t e) const { return b_im_[e].data(); }

private:
    std::array<std::vector<double>, 4> a_re_, a_im_, b_re_, b_im_;
};

class OutcomeBatch
{
public:
    void resize(std::size_t count);
    std::size_t size() const noexcept { return p_[0].size(); }

    double* outcome(std::size_t index) { return p_[index].data(); }
    const double* outcome(std::size_t index) const { return p_[index].data(); }

    OutcomeDistribution at(std::size_t pair) const;

private:
    std::array<std::vector<double>, 4> p_;
};

/// Raw kernel interface shared by all ISA variants.
struct PairView
{
    std::array<const double*, 4> a_re, a_im, b_re, b_im;
    std::size_t count;
};

struct OutcomeView
{
    std::array<double*, 4> p;
};

void ewl_outcomes_scalar(const PairView& in, double cos_half, double sin_half, const OutcomeView& out);
void ewl_outcomes_avx2(const PairView& in, double cos_half, double sin_half, const OutcomeView& out);

/// Fills out with one distribution per pair. Throws DomainError if isa is
/// not available. Inputs are not checked for unitarity here.
void ewl_outcomes_batch(const StrategyPairBatch& pairs, EntanglementParam g, OutcomeBatch& out, Isa isa);
void ewl_outcomes_batch(const StrategyPairBatch& pairs, EntanglementParam g, OutcomeBatch& out);

} // namespace qpigou::kernels

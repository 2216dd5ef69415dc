#ifndef TFKERNEL_MIXED_NORMS_HPP
#define TFKERNEL_MIXED_NORMS_HPP

#include <span>

#include "tfkernel/tensor.hpp"

namespace tfk {

/// (T o c~)(y_1..y_k) = T(y_c(1), .., y_c(k)). The result has extent
/// T.extent(i) on axis c(i). Throws std::invalid_argument on a rank mismatch.
[[nodiscard]] ComplexTensor permute_axes(const ComplexTensor& t, const AxisPermutation& c);

/// Nested counting-measure norm: axis 1 is reduced first with p_1, axis k
/// last with p_k; an infinite exponent takes the maximum over that axis.
///
/// Runs of adjacent axes with equal exponents are reduced as a single
/// block, and every block is summed over its sorted magnitudes with a
/// pairwise tree. The result therefore depends only on the multiset of
/// entries within each block, which makes equal-exponent norms bit-exact
/// under any axis permutation.
[[nodiscard]] double mixed_norm(const ComplexTensor& t, const ExponentVector& p);

/// l^p norm of a flat list of magnitudes (same reduction as mixed_norm).
[[nodiscard]] double lp_norm(std::span<const double> magnitudes, const Exponent& p);

/// Entrywise conjugate exponents.
[[nodiscard]] ExponentVector dual_exponents(const ExponentVector& p);

/// sum T conj(U) over all indices; shapes must agree.
[[nodiscard]] cplx pairing(const ComplexTensor& t, const ComplexTensor& u);

/// Pairwise (cascade) sum with a fixed tree.
[[nodiscard]] double pairwise_sum(std::span<const double> v) noexcept;
[[nodiscard]] cplx pairwise_sum(std::span<const cplx> v) noexcept;

} // namespace tfk

#endif

#ifndef TFKERNEL_ORACLE_HPP
#define TFKERNEL_ORACLE_HPP

// Brute-force references for the test suites and the lower-bound side of
// the certificates. Nothing here calls the modules it is used to check:
// the oracle library links against the data types only.

#include <cstdint>

#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk::oracle {

struct SearchConfig {
    std::size_t trials = 32;
    std::size_t ascent_steps = 200;
    std::uint64_t seed = 42;

    /// Throws std::invalid_argument if trials == 0.
    void validate() const;
};

/// Triple-loop STFT, O(N^3).
[[nodiscard]] ComplexTensor stft_reference(const Signal& f, const Signal& g);

/// Six-fold loop over (x1, x2, xi1, xi2, t1, t2), O(N^6).
[[nodiscard]] ComplexTensor stft_kernel_reference(const KernelMatrix& k, const Signal& g, const Signal& gamma);

/// (M a)_i = sum_j M(i, j) a_j for a rank-2 M of shape (rows, cols).
[[nodiscard]] std::vector<cplx> matvec(const ComplexTensor& m, std::span<const cplx> a);

/// Conjugate transpose of a rank-2 tensor.
[[nodiscard]] ComplexTensor adjoint(const ComplexTensor& m);

/// (A a)_{l1,l2} = sum_{m1,m2} K4(l1, l2, m1, m2) a(m1, m2), by direct summation.
[[nodiscard]] ComplexTensor apply_four_index(const ComplexTensor& k4, const ComplexTensor& a);

/// Sequential l^p norm of a vector (no sorting, no blocking).
[[nodiscard]] double vector_norm(std::span<const cplx> v, const Exponent& p);

/// Sequential (inner, outer) mixed norm of a rank-2 sequence, axis 1 inner.
[[nodiscard]] double sequence_norm(const ComplexTensor& a, const Exponent& inner, const Exponent& outer);

/// Largest singular value by power iteration on M*M. Stops once the
/// estimate changes by < 1e-12 relative; throws ConvergenceError after
/// 100000 iterations.
[[nodiscard]] double opnorm_l2(const ComplexTensor& m, const SearchConfig& cfg);

/// Lower bound for sup ||A a||_dst / ||a||_src where A is the four-index
/// operator of K4. Random starts, then alternating dual-map ascent: phase
/// alignment per coordinate and mass reallocation along the inner axis.
/// The per-trial value never decreases across steps.
[[nodiscard]] double mixed_opnorm_lower(const ComplexTensor& k4, const ExponentVector& src, const ExponentVector& dst,
                                        const SearchConfig& cfg);

/// max_j ||M e_j||_p by pushing every basis vector through M. At most 4096 columns.
[[nodiscard]] double enumerate_l1_domain_norm(const ComplexTensor& m, const Exponent& p);

/// Unit vector u in the (inner, outer) mixed norm maximizing Re <u, w>,
/// which then equals the dual mixed norm of w. w has shape (n_inner, n_outer).
[[nodiscard]] ComplexTensor norming_vector(const ComplexTensor& w, const Exponent& inner, const Exponent& outer);

} // namespace tfk::oracle

#endif

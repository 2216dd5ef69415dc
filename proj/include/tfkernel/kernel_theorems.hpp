#ifndef TFKERNEL_KERNEL_THEOREMS_HPP
#define TFKERNEL_KERNEL_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfkernel/gabor.hpp"
#include "tfkernel/oracle.hpp"
#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk {

/// Matrix of an operator A in the Gabor system of a frame:
/// K_{lambda,mu} = <A pi(mu) gamma, pi(lambda) g>, rank 4 with shape
/// (N/a, N/b, N/a, N/b) indexed (lambda1, lambda2, mu1, mu2) in lattice units.
class GaborMatrix {
public:
    GaborMatrix(ComplexTensor values, GaborFrame frame);

    [[nodiscard]] const ComplexTensor& values() const noexcept { return values_; }
    [[nodiscard]] const GaborFrame& frame() const noexcept { return frame_; }

    /// (#Lambda) x (#Lambda) view, lambda1 fastest within a row index and
    /// mu1 fastest within a column index. A pure reshape of values().
    [[nodiscard]] ComplexTensor flattened() const;

private:
    ComplexTensor values_;
    GaborFrame frame_;
};

/// Direct route: apply the kernel to every pi(mu) gamma and pair with pi(lambda) g.
[[nodiscard]] GaborMatrix gabor_matrix(const KernelMatrix& k, const GaborFrame& frame);

/// STFT route: (V_G K o c1~)(lambda1, lambda2, mu1, -mu2) with G = g (x) conj(gamma).
[[nodiscard]] GaborMatrix gabor_matrix_from_stft(const KernelMatrix& k, const GaborFrame& frame);

/// Matrix of C_g A D_gamma assembled by pushing each unit sequence through
/// synthesis, the kernel and analysis. Shape (#Lambda, #Lambda).
[[nodiscard]] ComplexTensor composed_operator_matrix(const KernelMatrix& k, const GaborFrame& frame);

/// ||M||_{l^1 -> l^p} = max_j ||column j||_p for (M a)_i = sum_j M_ij a_j.
[[nodiscard]] double exact_norm_l1_to_lp(const ComplexTensor& m, const Exponent& p);

/// ||M||_{l^p -> l^inf} = max_i ||row i||_{p'}.
[[nodiscard]] double exact_norm_lp_to_linf(const ComplexTensor& m, const Exponent& p);

enum class SchurSide {
    C3, ///< bound on l^{inf,1}
    C4, ///< bound on l^{1,inf}
};

/// ||K4 o c~||_{l^{1,inf,1,inf}} with c = c3 or c4.
[[nodiscard]] double schur_bound(const ComplexTensor& k4, SchurSide side);

struct Ingredient {
    std::string name;
    double value;
};

struct Verdict {
    std::string space;   ///< e.g. "M^{inf,1}"
    bool bounded;
    double bound;        ///< lattice-side bound for C_g A D_gamma on that space
};

/// A recorded upper bound with the norms that produced it.
struct Certificate {
    std::string source;
    std::string target;
    double bound = 0.0; ///< may be +inf
    std::string method;
    std::vector<Ingredient> ingredients;
    std::vector<Verdict> verdicts;

    [[nodiscard]] bool bounded() const noexcept;
    /// Throws std::out_of_range for an unknown name.
    [[nodiscard]] double ingredient(std::string_view name) const;
};

/// M^1 -> M^p: sup over columns of the Gabor matrix in l^p. Ingredients
/// carry the full-grid norm ||K||_{M(c1)^{p,inf}} and the ratio of the two.
[[nodiscard]] Certificate estimate_m1_to_mp(const KernelMatrix& k, const GaborFrame& frame, const Exponent& p);

/// M^p -> M^inf: sup over rows of the Gabor matrix in l^{p'}, with
/// ||K||_{M(c2)^{p',inf}} alongside.
[[nodiscard]] Certificate estimate_mp_to_minf(const KernelMatrix& k, const GaborFrame& frame, const Exponent& p);

/// Boundedness on every M^p from the two endpoint norms M(c1)^{1,inf} and
/// M(c2)^{1,inf}. The bound is the larger lattice-side endpoint, which
/// dominates every interpolated l^p bound of C_g A D_gamma.
[[nodiscard]] Certificate certify_all_mp(const KernelMatrix& k, const GaborFrame& frame);

/// Boundedness on every M^{p,q} from M(c1)^{1,inf}, M(c2)^{1,inf},
/// M(c5)^{1,inf,1,inf} and M(c6)^{1,inf,1,inf}.
[[nodiscard]] Certificate certify_all_mpq(const KernelMatrix& k, const GaborFrame& frame);

/// Unitary Fourier matrix F_{jk} = N^{-1/2} e^{-2 pi i j k / N}.
[[nodiscard]] ComplexTensor fourier_matrix(std::size_t n);

/// K4(l1, l2, m1, m2) = F(l2, m1).
[[nodiscard]] ComplexTensor fourier_tensor(std::size_t n);

struct GapReport {
    std::size_t n = 0;
    double schur = 0.0;          ///< ||K4 o c3~||_{1,inf,1,inf}
    double certified = 0.0;      ///< embedding chain sqrt(N) * ||F||_{2->2} * sqrt(N)
    double lower = 0.0;          ///< ascent lower bound on l^{inf,1}
    double l2_opnorm = 0.0;      ///< power-iteration ||F||_{2->2}
    double unitarity_defect = 0.0;
    std::uint64_t seed = 0;
};

/// Schur bound versus the sharper embedding bound for the Fourier tensor.
/// Throws std::invalid_argument for N < 2.
[[nodiscard]] GapReport fourier_gap_experiment(std::size_t n, const oracle::SearchConfig& cfg);

} // namespace tfk

#endif

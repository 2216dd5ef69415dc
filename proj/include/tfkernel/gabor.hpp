#ifndef TFKERNEL_GABOR_HPP
#define TFKERNEL_GABOR_HPP

#include <cstddef>

#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk {

/// Separable lattice {(j a, k b)} in Z_N x Z_N with a | N and b | N.
class Lattice {
public:
    /// Throws std::invalid_argument unless a, b >= 1 divide n.
    Lattice(std::size_t n, std::size_t a, std::size_t b);

    static Lattice full(std::size_t n) { return Lattice(n, 1, 1); }

    [[nodiscard]] std::size_t modulus() const noexcept { return n_; }
    [[nodiscard]] std::size_t time_step() const noexcept { return a_; }
    [[nodiscard]] std::size_t freq_step() const noexcept { return b_; }
    [[nodiscard]] std::size_t time_count() const noexcept { return n_ / a_; }
    [[nodiscard]] std::size_t freq_count() const noexcept { return n_ / b_; }
    [[nodiscard]] std::size_t size() const noexcept { return time_count() * freq_count(); }
    [[nodiscard]] bool is_full() const noexcept { return a_ == 1 && b_ == 1; }
    /// ab <= N, necessary for a frame.
    [[nodiscard]] bool dense_enough() const noexcept { return a_ * b_ <= n_; }

    [[nodiscard]] TFShift point(std::size_t j, std::size_t k) const { return TFShift{j * a_, k * b_}; }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::size_t n_;
    std::size_t a_;
    std::size_t b_;
};

struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
    [[nodiscard]] double condition() const noexcept { return upper / lower; }
};

/// A > kFrameThreshold * B declares a frame.
inline constexpr double kFrameThreshold = 1e-8;

/// S f = sum_lambda <f, pi(lambda) g> pi(lambda) g as an N x N matrix (row, col).
/// Throws std::invalid_argument for a zero window.
[[nodiscard]] ComplexTensor frame_operator(const Signal& g, const Lattice& lattice);

/// Optimal frame constants: extremal eigenvalues of S (A may be ~0).
[[nodiscard]] FrameBounds frame_bounds(const ComplexTensor& s);

/// gamma = S^{-1} g by Cholesky. Throws NotAFrame if A <= threshold * B.
[[nodiscard]] Signal canonical_dual(const ComplexTensor& s, const Signal& g);

/// (C_g f)_{j,k} = <f, pi(j a, k b) g>, shape (N/a, N/b).
[[nodiscard]] ComplexTensor analyze(const Signal& f, const Signal& g, const Lattice& lattice);

/// D_gamma c = sum_lambda c_lambda pi(lambda) gamma.
[[nodiscard]] Signal synthesize(const ComplexTensor& coeffs, const Signal& gamma, const Lattice& lattice);

/// Validated Gabor frame: window, lattice, frame operator, bounds and
/// canonical dual. Immutable after construction.
class GaborFrame {
public:
    /// Throws DensityTooLow (ab > N), NotAFrame, or std::invalid_argument.
    GaborFrame(Signal window, Lattice lattice);

    [[nodiscard]] const Signal& window() const noexcept { return window_; }
    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] const ComplexTensor& frame_operator() const noexcept { return s_; }
    [[nodiscard]] const FrameBounds& bounds() const noexcept { return bounds_; }
    [[nodiscard]] const Signal& dual() const noexcept { return dual_; }
    [[nodiscard]] std::size_t modulus() const noexcept { return lattice_.modulus(); }

private:
    Signal window_;
    Lattice lattice_;
    ComplexTensor s_;
    FrameBounds bounds_;
    Signal dual_;
};

} // namespace tfk

#endif

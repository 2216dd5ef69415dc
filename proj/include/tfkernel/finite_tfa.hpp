#ifndef TFKERNEL_FINITE_TFA_HPP
#define TFKERNEL_FINITE_TFA_HPP

#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk {

/// e^{2 pi i k / n}, with k reduced mod n before the angle is formed.
[[nodiscard]] cplx unit_root(std::size_t n, long long k);

/// (pi(x, xi) f)(t) = e^{2 pi i xi t / N} f(t - x).
[[nodiscard]] Signal tf_shift_apply(const TFShift& z, const Signal& f);

/// V_g f(x, xi) = sum_t f(t) conj(g(t - x)) e^{-2 pi i xi t / N}, shape (N, N)
/// indexed (x, xi). No 1/sqrt(N) normalization. One FFT per time shift.
[[nodiscard]] ComplexTensor stft(const Signal& f, const Signal& g);

/// Two-dimensional STFT of a kernel against G(t1, t2) = g(t1) conj(gamma(t2)),
/// shape (N, N, N, N) indexed (x1, x2, xi1, xi2).
[[nodiscard]] ComplexTensor stft_kernel(const KernelMatrix& k, const Signal& g, const Signal& gamma);

/// Upsilon_psi F(t) = (1/N) sum_w F(w) (pi(c~(w)) psi)(t).
///
/// The 1/N is the Plancherel measure of Z_N x Z_N under the unnormalized
/// character e^{2 pi i xi t / N}; with it, Upsilon_psi(V_g f o c~) = <psi, g> f
/// holds exactly for both permutations of length 2.
[[nodiscard]] Signal upsilon_apply(const ComplexTensor& f, const Signal& psi, const AxisPermutation& c);

/// (A f)(x) = sum_y K(x, y) f(y).
[[nodiscard]] Signal apply_kernel(const KernelMatrix& k, const Signal& f);

} // namespace tfk

#endif

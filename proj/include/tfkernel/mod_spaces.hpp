#ifndef TFKERNEL_MOD_SPACES_HPP
#define TFKERNEL_MOD_SPACES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfkernel/gabor.hpp"
#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk {

/// Named coordinate permutation together with the permutation matrix it is
/// defined by. Both are kept because off-by-inverse mistakes between the
/// index map and the matrix are easy to make; the tests pin them together.
struct CatalogEntry {
    std::string name;
    AxisPermutation permutation;
    std::vector<std::vector<int>> matrix;
};

namespace catalog {

/// c0 swaps time and frequency of a signal STFT (Wiener amalgam ordering).
const CatalogEntry& c0();
/// c1..c6 act on the (x1, x2, xi1, xi2) axes of a kernel STFT.
const CatalogEntry& c1();
const CatalogEntry& c2();
const CatalogEntry& c3();
const CatalogEntry& c4();
const CatalogEntry& c5();
const CatalogEntry& c6();

/// All seven entries, c0 first.
std::span<const CatalogEntry> all();
/// "c0".."c6"; throws std::invalid_argument otherwise.
const CatalogEntry& by_name(std::string_view name);

} // namespace catalog

/// Permutation + exponents of a mixed modulation norm; lengths must agree.
struct ModNormSpec {
    ModNormSpec(AxisPermutation permutation, ExponentVector exponents);
    AxisPermutation permutation;
    ExponentVector exponents;
};

/// Periodized Gaussian sum_{|m|<=3} exp(-pi (t + m N)^2 / N), unit l^2 norm.
[[nodiscard]] Signal gaussian_window(std::size_t n);

/// ||V_g f o c~||_{l^{p1,p2}}.
[[nodiscard]] double mod_norm_signal(const Signal& f, const Signal& g, const AxisPermutation& c, const ExponentVector& p);

/// ||V_G K o c~||_{l^{p1..p4}} with G = g (x) conj(gamma).
[[nodiscard]] double mod_norm_kernel(const KernelMatrix& k, const Signal& g, const Signal& gamma, const AxisPermutation& c,
                                     const ExponentVector& p);

/// Restricts an STFT table to lattice points: rank 2 over Lambda, rank 4
/// over Lambda x Lambda (axes x1, x2 on a Z, xi1, xi2 on b Z).
[[nodiscard]] ComplexTensor restrict_to_lattice(const ComplexTensor& table, const Lattice& lattice);

/// Mixed norm of the lattice samples of V_g f o c~ (g = frame window).
[[nodiscard]] double sampled_mod_norm(const Signal& f, const GaborFrame& frame, const AxisPermutation& c,
                                      const ExponentVector& p);

/// Mixed norm of V_G K o c~ sampled on Lambda x Lambda, G = g (x) conj(gamma)
/// with g the frame window and gamma its canonical dual.
[[nodiscard]] double sampled_mod_norm(const KernelMatrix& k, const GaborFrame& frame, const AxisPermutation& c,
                                      const ExponentVector& p);

/// Smallest C with every ratio in [1/C, C]. Ratios must be positive.
[[nodiscard]] double equivalence_constant(std::span<const double> ratios);

} // namespace tfk

#endif

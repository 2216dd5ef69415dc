#include "tfkernel/mod_spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkernel/finite_tfa.hpp"
#include "tfkernel/mixed_norms.hpp"

namespace tfk {

namespace catalog {

namespace {

// Matrices transcribed row by row from their block form (d = 1).
const std::array<CatalogEntry, 7>& entries() {
    static const std::array<CatalogEntry, 7> table{{
        {"c0", AxisPermutation{2, 1}, {{0, 1}, {1, 0}}},
        {"c1", AxisPermutation{1, 3, 2, 4}, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}},
        {"c2", AxisPermutation{3, 1, 4, 2}, {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}},
        {"c3", AxisPermutation{2, 3, 1, 4}, {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}},
        {"c4", AxisPermutation{1, 4, 2, 3}, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
        // c5~ = c1~ c3~, c6~ = c1~ c4~
        {"c5", AxisPermutation::compose(AxisPermutation{1, 3, 2, 4}, AxisPermutation{2, 3, 1, 4}),
         {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        {"c6", AxisPermutation::compose(AxisPermutation{1, 3, 2, 4}, AxisPermutation{1, 4, 2, 3}),
         {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}},
    }};
    return table;
}

} // namespace

const CatalogEntry& c0() { return entries()[0]; }
const CatalogEntry& c1() { return entries()[1]; }
const CatalogEntry& c2() { return entries()[2]; }
const CatalogEntry& c3() { return entries()[3]; }
const CatalogEntry& c4() { return entries()[4]; }
const CatalogEntry& c5() { return entries()[5]; }
const CatalogEntry& c6() { return entries()[6]; }

std::span<const CatalogEntry> all() { return entries(); }

const CatalogEntry& by_name(std::string_view name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown permutation name '" + std::string(name) + "' (expected c0..c6)");
}

} // namespace catalog

ModNormSpec::ModNormSpec(AxisPermutation permutation_, ExponentVector exponents_)
    : permutation(std::move(permutation_)), exponents(std::move(exponents_)) {
    if (permutation.size() != exponents.size())
        throw std::invalid_argument("permutation of length " + std::to_string(permutation.size()) + " with " +
                                    std::to_string(exponents.size()) + " exponents");
}

Signal gaussian_window(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gaussian_window: N must be positive");
    const double nd = static_cast<double>(n);
    std::vector<cplx> v(n);
    for (std::size_t t = 0; t < n; ++t) {
        double s = 0.0;
        for (int m = -3; m <= 3; ++m) {
            const double u = static_cast<double>(t) + m * nd;
            s += std::exp(-std::numbers::pi * u * u / nd);
        }
        v[t] = s;
    }
    Signal g(std::move(v));
    return (1.0 / g.norm2()) * g;
}

double mod_norm_signal(const Signal& f, const Signal& g, const AxisPermutation& c, const ExponentVector& p) {
    if (g.is_zero()) throw std::invalid_argument("mod_norm_signal: window must be nonzero");
    const ModNormSpec spec(c, p);
    return mixed_norm(permute_axes(stft(f, g), spec.permutation), spec.exponents);
}

double mod_norm_kernel(const KernelMatrix& k, const Signal& g, const Signal& gamma, const AxisPermutation& c,
                       const ExponentVector& p) {
    if (g.is_zero() || gamma.is_zero()) throw std::invalid_argument("mod_norm_kernel: windows must be nonzero");
    const ModNormSpec spec(c, p);
    return mixed_norm(permute_axes(stft_kernel(k, g, gamma), spec.permutation), spec.exponents);
}

ComplexTensor restrict_to_lattice(const ComplexTensor& table, const Lattice& lattice) {
    const std::size_t n = lattice.modulus();
    const std::size_t a = lattice.time_step(), b = lattice.freq_step();
    const std::size_t na = lattice.time_count(), nb = lattice.freq_count();
    for (auto e : table.shape())
        if (e != n) throw std::invalid_argument("restrict_to_lattice: table extents must equal N");
    if (table.rank() == 2) {
        ComplexTensor out({na, nb});
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t j = 0; j < na; ++j) out(j, k) = table(j * a, k * b);
        return out;
    }
    if (table.rank() == 4) {
        ComplexTensor out({na, na, nb, nb});
        for (std::size_t k2 = 0; k2 < nb; ++k2)
            for (std::size_t k1 = 0; k1 < nb; ++k1)
                for (std::size_t j2 = 0; j2 < na; ++j2)
                    for (std::size_t j1 = 0; j1 < na; ++j1) out(j1, j2, k1, k2) = table(j1 * a, j2 * a, k1 * b, k2 * b);
        return out;
    }
    throw std::invalid_argument("restrict_to_lattice: expected a rank-2 or rank-4 table");
}

double sampled_mod_norm(const Signal& f, const GaborFrame& frame, const AxisPermutation& c, const ExponentVector& p) {
    const ModNormSpec spec(c, p);
    const ComplexTensor samples = restrict_to_lattice(stft(f, frame.window()), frame.lattice());
    return mixed_norm(permute_axes(samples, spec.permutation), spec.exponents);
}

double sampled_mod_norm(const KernelMatrix& k, const GaborFrame& frame, const AxisPermutation& c,
                        const ExponentVector& p) {
    const ModNormSpec spec(c, p);
    const ComplexTensor samples =
        restrict_to_lattice(stft_kernel(k, frame.window(), frame.dual()), frame.lattice());
    return mixed_norm(permute_axes(samples, spec.permutation), spec.exponents);
}

double equivalence_constant(std::span<const double> ratios) {
    double c = 1.0;
    for (double r : ratios) {
        if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("equivalence_constant: ratios must be positive");
        c = std::max({c, r, 1.0 / r});
    }
    return c;
}

} // namespace tfk

#include "tfkernel/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tfk {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 1))); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
    if (hi < lo) throw std::invalid_argument("Rng::index: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::size_t>(engine_());
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r = engine_();
    while (r >= limit) r = engine_();
    return lo + static_cast<std::size_t>(r % span);
}

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return cplx(re, im) * std::numbers::sqrt2 * 0.5;
}

ComplexTensor Rng::tensor(std::vector<std::size_t> shape) {
    ComplexTensor t(std::move(shape));
    for (auto& z : t.values()) z = complex_normal();
    return t;
}

Signal Rng::signal(std::size_t n) { return Signal(tensor({n})); }

KernelMatrix Rng::kernel(std::size_t n) { return KernelMatrix(tensor({n, n})); }

} // namespace tfk

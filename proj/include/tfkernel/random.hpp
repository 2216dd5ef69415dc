#ifndef TFKERNEL_RANDOM_HPP
#define TFKERNEL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tfkernel/signal.hpp"
#include "tfkernel/tensor.hpp"

namespace tfk {

// std::mt19937_64 has a standardized output sequence, but the std
// distributions do not. Everything below derives from raw engine words so a
// seed reproduces the same numbers with any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream keyed by (seed, stream) through splitmix64.
    [[nodiscard]] Rng split(std::uint64_t stream) const;
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi);
    /// Standard normal (Box-Muller).
    double normal();
    /// Circular complex normal with E|z|^2 = 1.
    cplx complex_normal();

    ComplexTensor tensor(std::vector<std::size_t> shape);
    Signal signal(std::size_t n);
    KernelMatrix kernel(std::size_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace tfk

#endif

#ifndef TFKERNEL_SIGNAL_HPP
#define TFKERNEL_SIGNAL_HPP

#include <cstddef>
#include <vector>

#include "tfkernel/tensor.hpp"

namespace tfk {

/// A function on Z_N. Windows share this type.
class Signal {
public:
    /// Zero signal of length n >= 1.
    explicit Signal(std::size_t n);
    explicit Signal(std::vector<cplx> values);
    /// Rank-1 tensor; anything else throws std::invalid_argument.
    explicit Signal(ComplexTensor values);

    static Signal delta(std::size_t n, std::size_t at = 0);
    static Signal constant(std::size_t n, cplx value);

    [[nodiscard]] std::size_t modulus() const noexcept { return values_.size(); }
    [[nodiscard]] const cplx& operator[](std::size_t t) const { return values_.values()[t]; }
    [[nodiscard]] cplx& operator[](std::size_t t) { return values_.values()[t]; }
    [[nodiscard]] std::span<const cplx> values() const noexcept { return values_.values(); }
    [[nodiscard]] const ComplexTensor& tensor() const noexcept { return values_; }

    [[nodiscard]] double norm2() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return values_.is_zero(); }

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    ComplexTensor values_;
};

/// <f, h> = sum_t f(t) conj(h(t)); moduli must agree.
cplx inner(const Signal& f, const Signal& h);

Signal operator+(const Signal& a, const Signal& b);
Signal operator-(const Signal& a, const Signal& b);
Signal operator*(cplx alpha, const Signal& a);
/// ||a - b||_2.
double distance(const Signal& a, const Signal& b);

/// Kernel K(x, y) on Z_N x Z_N; x is axis 1.
class KernelMatrix {
public:
    explicit KernelMatrix(std::size_t n);
    /// Square rank-2 tensor; anything else throws std::invalid_argument.
    explicit KernelMatrix(ComplexTensor values);

    static KernelMatrix identity(std::size_t n);
    /// K(x, y) = f(x) conj(h(y)).
    static KernelMatrix rank_one(const Signal& f, const Signal& h);
    static KernelMatrix diagonal(const Signal& d);

    [[nodiscard]] std::size_t modulus() const noexcept { return values_.extent(0); }
    [[nodiscard]] const cplx& operator()(std::size_t x, std::size_t y) const { return values_(x, y); }
    [[nodiscard]] cplx& operator()(std::size_t x, std::size_t y) { return values_(x, y); }
    [[nodiscard]] const ComplexTensor& tensor() const noexcept { return values_; }

    friend bool operator==(const KernelMatrix&, const KernelMatrix&) = default;

private:
    ComplexTensor values_;
};

/// Time-frequency point (x, xi) in Z_N x Z_N, reduced mod N.
struct TFShift {
    std::size_t x = 0;
    std::size_t xi = 0;

    /// Reduces arbitrary integers into [0, n).
    static TFShift reduced(long long x, long long xi, std::size_t n);
};

/// Throws std::invalid_argument when the two moduli differ.
void require_same_modulus(std::size_t n1, std::size_t n2, const char* what);

} // namespace tfk

#endif

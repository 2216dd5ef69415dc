#ifndef TFKERNEL_TENSOR_HPP
#define TFKERNEL_TENSOR_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tfk {

using cplx = std::complex<double>;

/// Lebesgue exponent in [1, inf]. Infinity is an explicit tag, never a
/// floating infinity, so the finite branch can do plain arithmetic.
class Exponent {
public:
    /// Throws std::invalid_argument unless p >= 1. A floating +inf is
    /// accepted and mapped onto the infinity tag.
    explicit Exponent(double p);

    static Exponent infinity() noexcept;
    static Exponent parse(const std::string& text); // "inf", "infinity" or a number

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    /// Finite value; calling this on the infinity tag throws std::logic_error.
    [[nodiscard]] double value() const;
    /// 1/p, with 1/inf = 0.
    [[nodiscard]] double reciprocal() const noexcept;
    /// Conjugate exponent, 1/p + 1/p' = 1.
    [[nodiscard]] Exponent dual() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    /// Total order with inf as the largest element.
    friend bool operator<(const Exponent& a, const Exponent& b) noexcept;
    friend bool operator<=(const Exponent& a, const Exponent& b) noexcept { return a < b || a == b; }

private:
    Exponent() = default;
    double value_ = 1.0;
    bool infinite_ = false;
};

inline const Exponent kInf = Exponent::infinity();

/// Ordered exponents (p_1, ..., p_k), k in 1..4. Entry 1 drives the innermost axis.
class ExponentVector {
public:
    ExponentVector(std::initializer_list<Exponent> entries);
    explicit ExponentVector(std::vector<Exponent> entries);

    /// All entries equal to p.
    static ExponentVector uniform(std::size_t k, Exponent p);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const Exponent& operator[](std::size_t i) const { return entries_.at(i); }
    [[nodiscard]] const std::vector<Exponent>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<Exponent> entries_;
};

/// Bijection c of {1..k}, stored one-based as in c~(x_1..x_k) = (x_c(1), .., x_c(k)).
class AxisPermutation {
public:
    AxisPermutation(std::initializer_list<std::size_t> one_based);
    explicit AxisPermutation(std::vector<std::size_t> one_based);

    static AxisPermutation identity(std::size_t k);

    [[nodiscard]] std::size_t size() const noexcept { return map_.size(); }
    /// c(i) for one-based i.
    [[nodiscard]] std::size_t operator()(std::size_t i) const { return map_.at(i - 1); }
    [[nodiscard]] const std::vector<std::size_t>& one_based() const noexcept { return map_; }

    [[nodiscard]] AxisPermutation inverse() const;
    /// Map of x -> outer(inner(x)) in the c~ sense: result(j) = inner(outer(j)).
    [[nodiscard]] static AxisPermutation compose(const AxisPermutation& outer, const AxisPermutation& inner);
    /// Permutation matrix P with (P x)_i = x_c(i).
    [[nodiscard]] std::vector<std::vector<int>> matrix() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AxisPermutation&, const AxisPermutation&) = default;

private:
    std::vector<std::size_t> map_;
};

/// Dense complex array of rank 1..4, axis 1 varies fastest in memory.
class ComplexTensor {
public:
    static constexpr std::size_t kMaxRank = 4;

    /// Zero tensor. Every extent must be >= 1.
    explicit ComplexTensor(std::vector<std::size_t> shape);
    /// Throws std::invalid_argument on a size mismatch or a non-finite entry.
    ComplexTensor(std::vector<std::size_t> shape, std::vector<cplx> values);

    [[nodiscard]] std::size_t rank() const noexcept { return shape_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }
    [[nodiscard]] std::span<cplx> values() noexcept { return values_; }

    /// Linear offset of a zero-based multi-index.
    [[nodiscard]] std::size_t offset(std::span<const std::size_t> index) const;

    template <typename... I>
    [[nodiscard]] const cplx& operator()(I... idx) const {
        const std::array<std::size_t, sizeof...(I)> index{static_cast<std::size_t>(idx)...};
        return values_[offset(index)];
    }
    template <typename... I>
    [[nodiscard]] cplx& operator()(I... idx) {
        const std::array<std::size_t, sizeof...(I)> index{static_cast<std::size_t>(idx)...};
        return values_[offset(index)];
    }

    /// Same entries under a new shape with equal element count.
    [[nodiscard]] ComplexTensor reshaped(std::vector<std::size_t> shape) const;

    [[nodiscard]] bool all_finite() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;

    ComplexTensor& operator+=(const ComplexTensor& other);
    ComplexTensor& operator-=(const ComplexTensor& other);
    ComplexTensor& operator*=(cplx alpha) noexcept;

    friend bool operator==(const ComplexTensor&, const ComplexTensor&) = default;

private:
    std::vector<std::size_t> shape_;
    std::vector<cplx> values_;
};

ComplexTensor operator+(ComplexTensor a, const ComplexTensor& b);
ComplexTensor operator-(ComplexTensor a, const ComplexTensor& b);
ComplexTensor operator*(cplx alpha, ComplexTensor a);

/// Largest entrywise |a - b|; shapes must match.
double max_abs_diff(const ComplexTensor& a, const ComplexTensor& b);
/// Largest entry modulus.
double max_abs(const ComplexTensor& t) noexcept;

} // namespace tfk

#endif

#include "tfkernel/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tfk {

namespace {

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::size_t element_count(const std::vector<std::size_t>& shape) {
    if (shape.empty() || shape.size() > ComplexTensor::kMaxRank)
        throw std::invalid_argument("tensor rank must be in 1..4, got " + std::to_string(shape.size()));
    for (auto n : shape)
        if (n == 0) throw std::invalid_argument("tensor extents must be positive, got " + join_sizes(shape));
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

void require_same_shape(const ComplexTensor& a, const ComplexTensor& b) {
    if (a.shape() != b.shape())
        throw std::invalid_argument("shape mismatch: " + join_sizes(a.shape()) + " vs " + join_sizes(b.shape()));
}

} // namespace

// ---------------------------------------------------------------- Exponent

Exponent::Exponent(double p) {
    if (std::isnan(p) || p < 1.0)
        throw std::invalid_argument("exponent must lie in [1, inf], got " + std::to_string(p));
    if (std::isinf(p)) {
        infinite_ = true;
    } else {
        value_ = p;
    }
}

Exponent Exponent::infinity() noexcept {
    Exponent e;
    e.infinite_ = true;
    return e;
}

Exponent Exponent::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(static_cast<char>(std::tolower(ch)));
    if (t == "inf" || t == "infinity" || t == "+inf") return infinity();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse exponent '" + text + "'");
    }
    if (used != t.size()) throw std::invalid_argument("cannot parse exponent '" + text + "'");
    return Exponent(v);
}

double Exponent::value() const {
    if (infinite_) throw std::logic_error("Exponent::value() called on infinity");
    return value_;
}

double Exponent::reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

Exponent Exponent::dual() const noexcept {
    if (infinite_) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    return Exponent(1.0 / (1.0 - 1.0 / value_));
}

std::string Exponent::to_string() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os.precision(std::numeric_limits<double>::max_digits10);
    os << value_;
    return os.str();
}

bool operator<(const Exponent& a, const Exponent& b) noexcept {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
}

// ---------------------------------------------------------- ExponentVector

ExponentVector::ExponentVector(std::initializer_list<Exponent> entries)
    : ExponentVector(std::vector<Exponent>(entries)) {}

ExponentVector::ExponentVector(std::vector<Exponent> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() > ComplexTensor::kMaxRank)
        throw std::invalid_argument("exponent vector length must be in 1..4, got " + std::to_string(entries_.size()));
}

ExponentVector ExponentVector::uniform(std::size_t k, Exponent p) { return ExponentVector(std::vector<Exponent>(k, p)); }

std::string ExponentVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + entries_[i].to_string();
    return s + ")";
}

// --------------------------------------------------------- AxisPermutation

AxisPermutation::AxisPermutation(std::initializer_list<std::size_t> one_based)
    : AxisPermutation(std::vector<std::size_t>(one_based)) {}

AxisPermutation::AxisPermutation(std::vector<std::size_t> one_based) : map_(std::move(one_based)) {
    const std::size_t k = map_.size();
    if (k == 0 || k > ComplexTensor::kMaxRank)
        throw std::invalid_argument("permutation length must be in 1..4, got " + std::to_string(k));
    std::vector<bool> seen(k, false);
    for (auto c : map_) {
        if (c < 1 || c > k || seen[c - 1]) throw std::invalid_argument("not a bijection of {1.." + std::to_string(k) + "}: " + join_sizes(map_));
        seen[c - 1] = true;
    }
}

AxisPermutation AxisPermutation::identity(std::size_t k) {
    std::vector<std::size_t> m(k);
    std::iota(m.begin(), m.end(), std::size_t{1});
    return AxisPermutation(std::move(m));
}

AxisPermutation AxisPermutation::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i] - 1] = i + 1;
    return AxisPermutation(std::move(inv));
}

AxisPermutation AxisPermutation::compose(const AxisPermutation& outer, const AxisPermutation& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("cannot compose permutations of different length");
    // (outer~ (inner~ x))_j = (inner~ x)_{outer(j)} = x_{inner(outer(j))}
    std::vector<std::size_t> m(outer.size());
    for (std::size_t j = 1; j <= outer.size(); ++j) m[j - 1] = inner(outer(j));
    return AxisPermutation(std::move(m));
}

std::vector<std::vector<int>> AxisPermutation::matrix() const {
    std::vector<std::vector<int>> p(map_.size(), std::vector<int>(map_.size(), 0));
    for (std::size_t i = 0; i < map_.size(); ++i) p[i][map_[i] - 1] = 1;
    return p;
}

std::string AxisPermutation::to_string() const { return join_sizes(map_); }

// ----------------------------------------------------------- ComplexTensor

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), values_(element_count(shape_), cplx{}) {}

ComplexTensor::ComplexTensor(std::vector<std::size_t> shape, std::vector<cplx> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    const std::size_t n = element_count(shape_);
    if (values_.size() != n)
        throw std::invalid_argument("tensor of shape " + join_sizes(shape_) + " needs " + std::to_string(n) +
                                    " entries, got " + std::to_string(values_.size()));
    if (!all_finite()) throw std::invalid_argument("tensor entries must be finite");
}

std::size_t ComplexTensor::offset(std::span<const std::size_t> index) const {
    if (index.size() != shape_.size())
        throw std::invalid_argument("index of rank " + std::to_string(index.size()) + " into tensor of rank " +
                                    std::to_string(shape_.size()));
    std::size_t off = 0;
    std::size_t stride = 1;
    for (std::size_t a = 0; a < shape_.size(); ++a) {
        if (index[a] >= shape_[a]) throw std::out_of_range("tensor index out of range on axis " + std::to_string(a + 1));
        off += index[a] * stride;
        stride *= shape_[a];
    }
    return off;
}

ComplexTensor ComplexTensor::reshaped(std::vector<std::size_t> shape) const {
    if (element_count(shape) != values_.size())
        throw std::invalid_argument("reshape " + join_sizes(shape_) + " -> " + join_sizes(shape) + " changes the element count");
    return ComplexTensor(std::move(shape), values_);
}

bool ComplexTensor::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

bool ComplexTensor::is_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](const cplx& z) { return z == cplx{}; });
}

ComplexTensor& ComplexTensor::operator+=(const ComplexTensor& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ComplexTensor& ComplexTensor::operator-=(const ComplexTensor& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ComplexTensor& ComplexTensor::operator*=(cplx alpha) noexcept {
    for (auto& z : values_) z *= alpha;
    return *this;
}

ComplexTensor operator+(ComplexTensor a, const ComplexTensor& b) { return a += b; }
ComplexTensor operator-(ComplexTensor a, const ComplexTensor& b) { return a -= b; }
ComplexTensor operator*(cplx alpha, ComplexTensor a) { return a *= alpha; }

double max_abs_diff(const ComplexTensor& a, const ComplexTensor& b) {
    require_same_shape(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
    return m;
}

double max_abs(const ComplexTensor& t) noexcept {
    double m = 0.0;
    for (const auto& z : t.values()) m = std::max(m, std::abs(z));
    return m;
}

} // namespace tfk

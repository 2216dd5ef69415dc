#include "tfkernel/mixed_norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfk {

namespace {

constexpr std::size_t kPairwiseLeaf = 8;

template <typename T>
T cascade(std::span<const T> v) noexcept {
    if (v.size() <= kPairwiseLeaf) {
        T s{};
        for (const auto& x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return cascade(v.first(half)) + cascade(v.subspan(half));
}

// Reduces a contiguous run in place (the run is sorted as a side effect).
double reduce_run(std::span<double> run, const Exponent& p) {
    if (p.is_infinite()) return *std::max_element(run.begin(), run.end());
    std::sort(run.begin(), run.end());
    const double pv = p.value();
    if (pv == 1.0) return cascade<double>(run);
    const double scale = run.back();
    if (scale == 0.0) return 0.0;
    for (auto& v : run) {
        const double r = v / scale;
        v = pv == 2.0 ? r * r : std::pow(r, pv);
    }
    const double s = cascade<double>(run);
    return scale * (pv == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / pv));
}

} // namespace

double pairwise_sum(std::span<const double> v) noexcept { return cascade(v); }
cplx pairwise_sum(std::span<const cplx> v) noexcept { return cascade(v); }

ComplexTensor permute_axes(const ComplexTensor& t, const AxisPermutation& c) {
    const std::size_t k = t.rank();
    if (c.size() != k)
        throw std::invalid_argument("permute_axes: permutation of length " + std::to_string(c.size()) +
                                    " applied to tensor of rank " + std::to_string(k));
    std::vector<std::size_t> in_stride(k);
    std::size_t s = 1;
    for (std::size_t a = 0; a < k; ++a) {
        in_stride[a] = s;
        s *= t.extent(a);
    }
    // output axis c(i) walks input axis i
    std::vector<std::size_t> out_shape(k), step(k);
    for (std::size_t i = 0; i < k; ++i) {
        out_shape[c(i + 1) - 1] = t.extent(i);
        step[c(i + 1) - 1] = in_stride[i];
    }
    ComplexTensor out(out_shape);
    auto src = t.values();
    auto dst = out.values();
    std::vector<std::size_t> counter(k, 0);
    std::size_t in_off = 0;
    for (std::size_t lin = 0; lin < dst.size(); ++lin) {
        dst[lin] = src[in_off];
        for (std::size_t a = 0; a < k; ++a) {
            if (++counter[a] < out_shape[a]) {
                in_off += step[a];
                break;
            }
            in_off -= step[a] * (out_shape[a] - 1);
            counter[a] = 0;
        }
    }
    return out;
}

double lp_norm(std::span<const double> magnitudes, const Exponent& p) {
    if (magnitudes.empty()) return 0.0;
    std::vector<double> work(magnitudes.begin(), magnitudes.end());
    return reduce_run(work, p);
}

double mixed_norm(const ComplexTensor& t, const ExponentVector& p) {
    const std::size_t k = t.rank();
    if (p.size() != k)
        throw std::invalid_argument("mixed_norm: " + std::to_string(p.size()) + " exponents for a tensor of rank " +
                                    std::to_string(k));
    std::vector<double> mags(t.size());
    std::transform(t.values().begin(), t.values().end(), mags.begin(), [](const cplx& z) { return std::abs(z); });

    std::size_t axis = 0;
    while (axis < k) {
        std::size_t end = axis + 1;
        std::size_t block = t.extent(axis);
        while (end < k && p[end] == p[axis]) block *= t.extent(end++);
        const std::size_t runs = mags.size() / block;
        std::vector<double> next(runs);
        for (std::size_t r = 0; r < runs; ++r)
            next[r] = reduce_run(std::span<double>(mags).subspan(r * block, block), p[axis]);
        mags = std::move(next);
        axis = end;
    }
    return mags.front();
}

ExponentVector dual_exponents(const ExponentVector& p) {
    std::vector<Exponent> d;
    d.reserve(p.size());
    for (const auto& e : p.entries()) d.push_back(e.dual());
    return ExponentVector(std::move(d));
}

cplx pairing(const ComplexTensor& t, const ComplexTensor& u) {
    if (t.shape() != u.shape()) throw std::invalid_argument("pairing: shape mismatch");
    std::vector<cplx> prod(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) prod[i] = t.values()[i] * std::conj(u.values()[i]);
    return cascade<cplx>(prod);
}

} // namespace tfk

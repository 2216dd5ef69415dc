#include "tfkernel/finite_tfa.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fftw_plan.hpp"
#include "tfkernel/mixed_norms.hpp"

namespace tfk {

namespace {

std::size_t wrap(long long v, std::size_t n) {
    const auto m = static_cast<long long>(n);
    return static_cast<std::size_t>(((v % m) + m) % m);
}

} // namespace

cplx unit_root(std::size_t n, long long k) {
    const std::size_t r = wrap(k, n);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

Signal tf_shift_apply(const TFShift& z, const Signal& f) {
    const std::size_t n = f.modulus();
    if (z.x >= n || z.xi >= n) throw std::invalid_argument("tf_shift_apply: shift not reduced mod N");
    Signal out(n);
    for (std::size_t t = 0; t < n; ++t)
        out[t] = unit_root(n, static_cast<long long>((z.xi * t) % n)) * f[(t + n - z.x) % n];
    return out;
}

ComplexTensor stft(const Signal& f, const Signal& g) {
    require_same_modulus(f.modulus(), g.modulus(), "stft");
    const std::size_t n = f.modulus();
    const std::array<int, 1> dims{static_cast<int>(n)};
    detail::DftPlan plan(dims, FFTW_FORWARD);
    ComplexTensor v({n, n});
    for (std::size_t x = 0; x < n; ++x) {
        auto in = plan.input();
        for (std::size_t t = 0; t < n; ++t) in[t] = f[t] * std::conj(g[(t + n - x) % n]);
        plan.execute();
        auto out = plan.output();
        for (std::size_t xi = 0; xi < n; ++xi) v(x, xi) = out[xi];
    }
    return v;
}

ComplexTensor stft_kernel(const KernelMatrix& k, const Signal& g, const Signal& gamma) {
    require_same_modulus(k.modulus(), g.modulus(), "stft_kernel");
    require_same_modulus(k.modulus(), gamma.modulus(), "stft_kernel");
    const std::size_t n = k.modulus();
    const std::array<int, 2> dims{static_cast<int>(n), static_cast<int>(n)}; // (t2, t1), t1 fastest
    detail::DftPlan plan(dims, FFTW_FORWARD);
    ComplexTensor v({n, n, n, n});
    auto dst = v.values();
    const std::size_t n2 = n * n;
    for (std::size_t x2 = 0; x2 < n; ++x2) {
        for (std::size_t x1 = 0; x1 < n; ++x1) {
            auto in = plan.input();
            for (std::size_t t2 = 0; t2 < n; ++t2) {
                const cplx w2 = gamma[(t2 + n - x2) % n];
                for (std::size_t t1 = 0; t1 < n; ++t1)
                    in[t2 * n + t1] = k(t1, t2) * std::conj(g[(t1 + n - x1) % n]) * w2;
            }
            plan.execute();
            auto out = plan.output(); // out[xi2 * n + xi1]
            const std::size_t base = x1 + n * x2;
            for (std::size_t j = 0; j < n2; ++j) dst[base + n2 * j] = out[j];
        }
    }
    return v;
}

Signal upsilon_apply(const ComplexTensor& f, const Signal& psi, const AxisPermutation& c) {
    const std::size_t n = psi.modulus();
    if (f.rank() != 2 || f.extent(0) != n || f.extent(1) != n)
        throw std::invalid_argument("upsilon_apply: table must have shape (N, N) with N = " + std::to_string(n));
    if (c.size() != 2) throw std::invalid_argument("upsilon_apply: permutation must have length 2");
    // table over z = c~(w), indexed (x, xi)
    const ComplexTensor table = permute_axes(f, c.inverse());
    const std::array<int, 1> dims{static_cast<int>(n)};
    detail::DftPlan plan(dims, FFTW_BACKWARD);
    Signal out(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto in = plan.input();
        for (std::size_t xi = 0; xi < n; ++xi) in[xi] = table(x, xi);
        plan.execute(); // h(t) = sum_xi table(x, xi) e^{2 pi i xi t / N}
        auto h = plan.output();
        for (std::size_t t = 0; t < n; ++t) out[t] += h[t] * psi[(t + n - x) % n];
    }
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t t = 0; t < n; ++t) out[t] *= scale;
    return out;
}

Signal apply_kernel(const KernelMatrix& k, const Signal& f) {
    require_same_modulus(k.modulus(), f.modulus(), "apply_kernel");
    const std::size_t n = f.modulus();
    Signal out(n);
    for (std::size_t y = 0; y < n; ++y) {
        const cplx fy = f[y];
        for (std::size_t x = 0; x < n; ++x) out[x] += k(x, y) * fy;
    }
    return out;
}

} // namespace tfk

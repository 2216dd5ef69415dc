#include "tfkernel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tfkernel/errors.hpp"
#include "tfkernel/random.hpp"

namespace tfk::oracle {

namespace {

constexpr std::size_t kPowerIterationCap = 100000;
constexpr std::size_t kEnumerationCap = 4096;

cplx phase_of(const cplx& z) {
    const double r = std::abs(z);
    return r > 0.0 ? z / r : cplx{1.0, 0.0};
}

cplx character(std::size_t n, std::size_t xi, std::size_t t) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(xi) * static_cast<double>(t) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

void require_matrix(const ComplexTensor& m, const char* what) {
    if (m.rank() != 2) throw std::invalid_argument(std::string(what) + ": expected a rank-2 tensor");
}

// unit vector in l^p maximizing Re <u, w>
std::vector<cplx> norming_vector_1d(std::span<const cplx> w, const Exponent& p) {
    std::vector<cplx> u(w.size(), cplx{});
    if (w.empty()) return u;
    if (p.is_infinite()) {
        for (std::size_t i = 0; i < w.size(); ++i) u[i] = phase_of(w[i]);
        return u;
    }
    if (p.value() == 1.0) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (std::abs(w[i]) > std::abs(w[best])) best = i;
        u[best] = phase_of(w[best]);
        return u;
    }
    const Exponent q = p.dual();
    const double m = vector_norm(w, q);
    if (m == 0.0) {
        u[0] = 1.0;
        return u;
    }
    const double qv = q.value();
    for (std::size_t i = 0; i < w.size(); ++i) u[i] = phase_of(w[i]) * std::pow(std::abs(w[i]) / m, qv - 1.0);
    return u;
}

} // namespace

void SearchConfig::validate() const {
    if (trials == 0) throw std::invalid_argument("SearchConfig: trials must be >= 1");
}

ComplexTensor stft_reference(const Signal& f, const Signal& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("stft_reference: modulus mismatch");
    const std::size_t n = f.modulus();
    ComplexTensor v({n, n});
    for (std::size_t xi = 0; xi < n; ++xi) {
        for (std::size_t x = 0; x < n; ++x) {
            cplx s{};
            for (std::size_t t = 0; t < n; ++t) s += f[t] * std::conj(g[(t + n - x) % n]) * character(n, xi, t);
            v(x, xi) = s;
        }
    }
    return v;
}

ComplexTensor stft_kernel_reference(const KernelMatrix& k, const Signal& g, const Signal& gamma) {
    if (k.modulus() != g.modulus() || k.modulus() != gamma.modulus())
        throw std::invalid_argument("stft_kernel_reference: modulus mismatch");
    const std::size_t n = k.modulus();
    ComplexTensor v({n, n, n, n});
    for (std::size_t xi2 = 0; xi2 < n; ++xi2)
        for (std::size_t xi1 = 0; xi1 < n; ++xi1)
            for (std::size_t x2 = 0; x2 < n; ++x2)
                for (std::size_t x1 = 0; x1 < n; ++x1) {
                    cplx s{};
                    for (std::size_t t2 = 0; t2 < n; ++t2)
                        for (std::size_t t1 = 0; t1 < n; ++t1) {
                            const cplx window = g[(t1 + n - x1) % n] * std::conj(gamma[(t2 + n - x2) % n]);
                            s += k(t1, t2) * std::conj(window) * character(n, xi1, t1) * character(n, xi2, t2);
                        }
                    v(x1, x2, xi1, xi2) = s;
                }
    return v;
}

std::vector<cplx> matvec(const ComplexTensor& m, std::span<const cplx> a) {
    require_matrix(m, "matvec");
    const std::size_t rows = m.extent(0), cols = m.extent(1);
    if (a.size() != cols) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cplx> out(rows, cplx{});
    const auto vals = m.values();
    for (std::size_t j = 0; j < cols; ++j) {
        const cplx aj = a[j];
        if (aj == cplx{}) continue;
        for (std::size_t i = 0; i < rows; ++i) out[i] += vals[i + rows * j] * aj;
    }
    return out;
}

ComplexTensor adjoint(const ComplexTensor& m) {
    require_matrix(m, "adjoint");
    ComplexTensor out({m.extent(1), m.extent(0)});
    for (std::size_t j = 0; j < m.extent(1); ++j)
        for (std::size_t i = 0; i < m.extent(0); ++i) out(j, i) = std::conj(m(i, j));
    return out;
}

ComplexTensor apply_four_index(const ComplexTensor& k4, const ComplexTensor& a) {
    if (k4.rank() != 4 || a.rank() != 2 || a.extent(0) != k4.extent(2) || a.extent(1) != k4.extent(3))
        throw std::invalid_argument("apply_four_index: shapes do not match");
    ComplexTensor out({k4.extent(0), k4.extent(1)});
    for (std::size_t l2 = 0; l2 < k4.extent(1); ++l2)
        for (std::size_t l1 = 0; l1 < k4.extent(0); ++l1) {
            cplx s{};
            for (std::size_t m2 = 0; m2 < k4.extent(3); ++m2)
                for (std::size_t m1 = 0; m1 < k4.extent(2); ++m1) s += k4(l1, l2, m1, m2) * a(m1, m2);
            out(l1, l2) = s;
        }
    return out;
}

double vector_norm(std::span<const cplx> v, const Exponent& p) {
    if (p.is_infinite()) {
        double m = 0.0;
        for (const auto& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    const double pv = p.value();
    double s = 0.0;
    for (const auto& z : v) s += std::pow(std::abs(z), pv);
    return std::pow(s, 1.0 / pv);
}

double sequence_norm(const ComplexTensor& a, const Exponent& inner, const Exponent& outer) {
    require_matrix(a, "sequence_norm");
    const std::size_t ni = a.extent(0), no = a.extent(1);
    std::vector<cplx> partial(no);
    for (std::size_t j = 0; j < no; ++j) partial[j] = vector_norm(a.values().subspan(j * ni, ni), inner);
    return vector_norm(partial, outer);
}

ComplexTensor norming_vector(const ComplexTensor& w, const Exponent& inner, const Exponent& outer) {
    require_matrix(w, "norming_vector");
    const std::size_t ni = w.extent(0), no = w.extent(1);
    const Exponent inner_dual = inner.dual();
    std::vector<cplx> column_norms(no);
    for (std::size_t j = 0; j < no; ++j) column_norms[j] = vector_norm(w.values().subspan(j * ni, ni), inner_dual);
    const std::vector<cplx> weights = norming_vector_1d(column_norms, outer);
    ComplexTensor u({ni, no});
    for (std::size_t j = 0; j < no; ++j) {
        const std::vector<cplx> col = norming_vector_1d(w.values().subspan(j * ni, ni), inner);
        const double s = weights[j].real();
        for (std::size_t i = 0; i < ni; ++i) u(i, j) = s * col[i];
    }
    return u;
}

double opnorm_l2(const ComplexTensor& m, const SearchConfig& cfg) {
    require_matrix(m, "opnorm_l2");
    cfg.validate();
    const ComplexTensor mh = adjoint(m);
    Rng rng(cfg.seed);
    std::vector<cplx> v(m.extent(1));
    for (auto& z : v) z = rng.complex_normal();
    double estimate = 0.0;
    for (std::size_t it = 0; it < kPowerIterationCap; ++it) {
        const double vn = vector_norm(v, Exponent(2.0));
        if (vn == 0.0) return 0.0;
        for (auto& z : v) z /= vn;
        const std::vector<cplx> u = matvec(m, v);
        const double next = vector_norm(u, Exponent(2.0));
        if (next == 0.0) {
            if (max_abs(m) == 0.0) return 0.0;
            // start landed in the null space
            for (auto& z : v) z = rng.complex_normal();
            continue;
        }
        if (it > 0 && std::abs(next - estimate) < 1e-12 * next) return next;
        estimate = next;
        v = matvec(mh, u);
    }
    throw ConvergenceError("opnorm_l2: power iteration did not converge in " + std::to_string(kPowerIterationCap) +
                           " iterations (last estimate " + std::to_string(estimate) + ")");
}

double mixed_opnorm_lower(const ComplexTensor& k4, const ExponentVector& src, const ExponentVector& dst,
                          const SearchConfig& cfg) {
    if (k4.rank() != 4) throw std::invalid_argument("mixed_opnorm_lower: expected a rank-4 tensor");
    if (src.size() != 2 || dst.size() != 2) throw std::invalid_argument("mixed_opnorm_lower: exponent vectors must have length 2");
    cfg.validate();
    const std::size_t n1 = k4.extent(0), n2 = k4.extent(1), n3 = k4.extent(2), n4 = k4.extent(3);
    const ComplexTensor m = k4.reshaped({n1 * n2, n3 * n4});
    const ComplexTensor mh = adjoint(m);
    const ExponentVector dst_dual{dst[0].dual(), dst[1].dual()};

    auto ratio = [&](const ComplexTensor& a) {
        const double an = sequence_norm(a, src[0], src[1]);
        if (an == 0.0) return 0.0;
        const ComplexTensor b({n1, n2}, matvec(m, a.values()));
        return sequence_norm(b, dst[0], dst[1]) / an;
    };

    const Rng root(cfg.seed);
    double best = 0.0;
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = root.split(trial);
        ComplexTensor a = rng.tensor({n3, n4});
        double current = ratio(a);
        for (std::size_t step = 0; step < cfg.ascent_steps; ++step) {
            const ComplexTensor b({n1, n2}, matvec(m, a.values()));
            if (b.is_zero()) break;
            const ComplexTensor y = norming_vector(b, dst_dual[0], dst_dual[1]);
            const ComplexTensor z({n3, n4}, matvec(mh, y.values()));
            if (z.is_zero()) break;
            ComplexTensor next = norming_vector(z, src[0], src[1]);
            const double value = ratio(next);
            if (!(value > current * (1.0 + 1e-13))) {
                current = std::max(current, value);
                break;
            }
            current = value;
            a = std::move(next);
        }
        best = std::max(best, current);
    }
    return best;
}

double enumerate_l1_domain_norm(const ComplexTensor& m, const Exponent& p) {
    require_matrix(m, "enumerate_l1_domain_norm");
    const std::size_t cols = m.extent(1);
    if (cols > kEnumerationCap)
        throw std::invalid_argument("enumerate_l1_domain_norm: " + std::to_string(cols) + " columns exceeds the cap of " +
                                    std::to_string(kEnumerationCap));
    double best = 0.0;
    std::vector<cplx> e(cols, cplx{});
    for (std::size_t j = 0; j < cols; ++j) {
        e[j] = 1.0;
        best = std::max(best, vector_norm(matvec(m, e), p));
        e[j] = 0.0;
    }
    return best;
}

} // namespace tfk::oracle

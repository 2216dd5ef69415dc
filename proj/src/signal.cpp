#include "tfkernel/signal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tfkernel/errors.hpp"

namespace tfk {

namespace {

std::string format_bound(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

NotAFrame::NotAFrame(double lower_, double upper_)
    : MathPreconditionError("not a frame: lower bound A=" + format_bound(lower_) + ", upper bound B=" + format_bound(upper_) +
                            " (need A > 1e-8*B)"),
      lower(lower_), upper(upper_) {}

DensityTooLow::DensityTooLow(std::size_t n_, std::size_t a_, std::size_t b_)
    : MathPreconditionError("DensityTooLow: lattice (a,b)=(" + std::to_string(a_) + "," + std::to_string(b_) +
                            ") has a*b > N=" + std::to_string(n_) + ", too few points for a frame"),
      n(n_), a(a_), b(b_) {}

void require_same_modulus(std::size_t n1, std::size_t n2, const char* what) {
    if (n1 != n2)
        throw std::invalid_argument(std::string(what) + ": modulus mismatch (" + std::to_string(n1) + " vs " +
                                    std::to_string(n2) + ")");
}

// ------------------------------------------------------------------ Signal

Signal::Signal(std::size_t n) : values_({n}) {}

Signal::Signal(std::vector<cplx> values) : values_({1}) {
    const std::size_t n = values.size();
    values_ = ComplexTensor({n}, std::move(values));
}

Signal::Signal(ComplexTensor values) : values_(std::move(values)) {
    if (values_.rank() != 1) throw std::invalid_argument("a signal is a rank-1 tensor");
}

Signal Signal::delta(std::size_t n, std::size_t at) {
    Signal s(n);
    s[at % n] = 1.0;
    return s;
}

Signal Signal::constant(std::size_t n, cplx value) { return Signal(std::vector<cplx>(n, value)); }

double Signal::norm2() const noexcept {
    double s = 0.0;
    for (const auto& z : values()) s += std::norm(z);
    return std::sqrt(s);
}

cplx inner(const Signal& f, const Signal& h) {
    require_same_modulus(f.modulus(), h.modulus(), "inner");
    cplx s{};
    for (std::size_t t = 0; t < f.modulus(); ++t) s += f[t] * std::conj(h[t]);
    return s;
}

Signal operator+(const Signal& a, const Signal& b) { return Signal(a.tensor() + b.tensor()); }
Signal operator-(const Signal& a, const Signal& b) { return Signal(a.tensor() - b.tensor()); }
Signal operator*(cplx alpha, const Signal& a) { return Signal(alpha * a.tensor()); }

double distance(const Signal& a, const Signal& b) { return (a - b).norm2(); }

// ------------------------------------------------------------ KernelMatrix

KernelMatrix::KernelMatrix(std::size_t n) : values_({n, n}) {}

KernelMatrix::KernelMatrix(ComplexTensor values) : values_(std::move(values)) {
    if (values_.rank() != 2 || values_.extent(0) != values_.extent(1))
        throw std::invalid_argument("a kernel is a square rank-2 tensor");
}

KernelMatrix KernelMatrix::identity(std::size_t n) {
    KernelMatrix k(n);
    for (std::size_t i = 0; i < n; ++i) k(i, i) = 1.0;
    return k;
}

KernelMatrix KernelMatrix::rank_one(const Signal& f, const Signal& h) {
    require_same_modulus(f.modulus(), h.modulus(), "rank_one");
    const std::size_t n = f.modulus();
    KernelMatrix k(n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) k(x, y) = f[x] * std::conj(h[y]);
    return k;
}

KernelMatrix KernelMatrix::diagonal(const Signal& d) {
    KernelMatrix k(d.modulus());
    for (std::size_t i = 0; i < d.modulus(); ++i) k(i, i) = d[i];
    return k;
}

TFShift TFShift::reduced(long long x, long long xi, std::size_t n) {
    const auto m = static_cast<long long>(n);
    auto mod = [m](long long v) { return static_cast<std::size_t>(((v % m) + m) % m); };
    return TFShift{mod(x), mod(xi)};
}

} // namespace tfk

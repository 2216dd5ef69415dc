#include "tfkernel/gabor.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

#include "tfkernel/errors.hpp"
#include "tfkernel/finite_tfa.hpp"

namespace tfk {

namespace {

using MatrixMap = Eigen::Map<const Eigen::MatrixXcd>;

MatrixMap as_matrix(const ComplexTensor& s) {
    if (s.rank() != 2 || s.extent(0) != s.extent(1)) throw std::invalid_argument("expected a square matrix");
    return MatrixMap(s.values().data(), static_cast<Eigen::Index>(s.extent(0)), static_cast<Eigen::Index>(s.extent(1)));
}

void require_window(const Signal& g, const char* what) {
    if (g.is_zero()) throw std::invalid_argument(std::string(what) + ": window must be nonzero");
}

} // namespace

Lattice::Lattice(std::size_t n, std::size_t a, std::size_t b) : n_(n), a_(a), b_(b) {
    if (n == 0) throw std::invalid_argument("lattice: N must be positive");
    if (a == 0 || b == 0 || n % a != 0 || n % b != 0)
        throw std::invalid_argument("lattice: steps (a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                                    ") must divide N=" + std::to_string(n));
}

ComplexTensor frame_operator(const Signal& g, const Lattice& lattice) {
    require_same_modulus(g.modulus(), lattice.modulus(), "frame_operator");
    require_window(g, "frame_operator");
    const std::size_t n = g.modulus();
    ComplexTensor s({n, n});
    for (std::size_t k = 0; k < lattice.freq_count(); ++k) {
        for (std::size_t j = 0; j < lattice.time_count(); ++j) {
            const Signal atom = tf_shift_apply(lattice.point(j, k), g);
            for (std::size_t c = 0; c < n; ++c) {
                const cplx ac = std::conj(atom[c]);
                for (std::size_t r = 0; r < n; ++r) s(r, c) += atom[r] * ac;
            }
        }
    }
    return s;
}

FrameBounds frame_bounds(const ComplexTensor& s) {
    const Eigen::MatrixXcd m = as_matrix(s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("frame_bounds: eigen-decomposition failed");
    const auto& ev = solver.eigenvalues();
    return FrameBounds{std::max(0.0, ev.minCoeff()), ev.maxCoeff()};
}

Signal canonical_dual(const ComplexTensor& s, const Signal& g) {
    require_same_modulus(s.extent(0), g.modulus(), "canonical_dual");
    const FrameBounds fb = frame_bounds(s);
    if (!(fb.lower > kFrameThreshold * fb.upper)) throw NotAFrame(fb.lower, fb.upper);
    const Eigen::MatrixXcd m = as_matrix(s);
    const Eigen::Map<const Eigen::VectorXcd> rhs(g.values().data(), static_cast<Eigen::Index>(g.modulus()));
    Eigen::LLT<Eigen::MatrixXcd> llt(m);
    if (llt.info() != Eigen::Success) throw NotAFrame(fb.lower, fb.upper);
    const Eigen::VectorXcd gamma = llt.solve(rhs);
    return Signal(std::vector<cplx>(gamma.data(), gamma.data() + gamma.size()));
}

ComplexTensor analyze(const Signal& f, const Signal& g, const Lattice& lattice) {
    require_same_modulus(f.modulus(), lattice.modulus(), "analyze");
    require_same_modulus(g.modulus(), lattice.modulus(), "analyze");
    ComplexTensor c({lattice.time_count(), lattice.freq_count()});
    for (std::size_t k = 0; k < lattice.freq_count(); ++k)
        for (std::size_t j = 0; j < lattice.time_count(); ++j) c(j, k) = inner(f, tf_shift_apply(lattice.point(j, k), g));
    return c;
}

Signal synthesize(const ComplexTensor& coeffs, const Signal& gamma, const Lattice& lattice) {
    require_same_modulus(gamma.modulus(), lattice.modulus(), "synthesize");
    if (coeffs.rank() != 2 || coeffs.extent(0) != lattice.time_count() || coeffs.extent(1) != lattice.freq_count())
        throw std::invalid_argument("synthesize: coefficient shape must be (N/a, N/b) = (" +
                                    std::to_string(lattice.time_count()) + "," + std::to_string(lattice.freq_count()) + ")");
    const std::size_t n = gamma.modulus();
    Signal out(n);
    for (std::size_t k = 0; k < lattice.freq_count(); ++k) {
        for (std::size_t j = 0; j < lattice.time_count(); ++j) {
            const cplx c = coeffs(j, k);
            if (c == cplx{}) continue;
            const Signal atom = tf_shift_apply(lattice.point(j, k), gamma);
            for (std::size_t t = 0; t < n; ++t) out[t] += c * atom[t];
        }
    }
    return out;
}

GaborFrame::GaborFrame(Signal window, Lattice lattice)
    : window_(std::move(window)), lattice_(lattice), s_({1}), dual_(1) {
    require_same_modulus(window_.modulus(), lattice_.modulus(), "GaborFrame");
    require_window(window_, "GaborFrame");
    if (!lattice_.dense_enough()) throw DensityTooLow(lattice_.modulus(), lattice_.time_step(), lattice_.freq_step());
    s_ = tfk::frame_operator(window_, lattice_);
    bounds_ = frame_bounds(s_);
    dual_ = canonical_dual(s_, window_);
}

} // namespace tfk

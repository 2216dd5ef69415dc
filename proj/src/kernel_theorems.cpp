#include "tfkernel/kernel_theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tfkernel/finite_tfa.hpp"
#include "tfkernel/mixed_norms.hpp"
#include "tfkernel/mod_spaces.hpp"

namespace tfk {

namespace {

const ExponentVector kEndpointPair{Exponent(1.0), Exponent(1.0), kInf, kInf};
const ExponentVector kSchurExponents{Exponent(1.0), kInf, Exponent(1.0), kInf};

double ratio_or_nan(double lattice, double full) {
    return full > 0.0 ? lattice / full : std::numeric_limits<double>::quiet_NaN();
}

std::string exp_label(const Exponent& p) { return p.to_string(); }

} // namespace

GaborMatrix::GaborMatrix(ComplexTensor values, GaborFrame frame) : values_(std::move(values)), frame_(std::move(frame)) {
    const Lattice& l = frame_.lattice();
    const std::vector<std::size_t> expected{l.time_count(), l.freq_count(), l.time_count(), l.freq_count()};
    if (values_.shape() != expected) throw std::invalid_argument("GaborMatrix: shape does not match the lattice");
}

ComplexTensor GaborMatrix::flattened() const {
    const std::size_t m = frame_.lattice().size();
    return values_.reshaped({m, m});
}

GaborMatrix gabor_matrix(const KernelMatrix& k, const GaborFrame& frame) {
    require_same_modulus(k.modulus(), frame.modulus(), "gabor_matrix");
    const Lattice& l = frame.lattice();
    const std::size_t na = l.time_count(), nb = l.freq_count();
    std::vector<Signal> analysis_atoms;
    analysis_atoms.reserve(l.size());
    for (std::size_t k2 = 0; k2 < nb; ++k2)
        for (std::size_t j2 = 0; j2 < na; ++j2) analysis_atoms.push_back(tf_shift_apply(l.point(j2, k2), frame.window()));

    ComplexTensor values({na, nb, na, nb});
    for (std::size_t mu2 = 0; mu2 < nb; ++mu2) {
        for (std::size_t mu1 = 0; mu1 < na; ++mu1) {
            const Signal image = apply_kernel(k, tf_shift_apply(l.point(mu1, mu2), frame.dual()));
            for (std::size_t l2 = 0; l2 < nb; ++l2)
                for (std::size_t l1 = 0; l1 < na; ++l1) values(l1, l2, mu1, mu2) = inner(image, analysis_atoms[l1 + na * l2]);
        }
    }
    return GaborMatrix(std::move(values), frame);
}

GaborMatrix gabor_matrix_from_stft(const KernelMatrix& k, const GaborFrame& frame) {
    require_same_modulus(k.modulus(), frame.modulus(), "gabor_matrix_from_stft");
    const Lattice& l = frame.lattice();
    const std::size_t n = l.modulus(), a = l.time_step(), b = l.freq_step();
    const std::size_t na = l.time_count(), nb = l.freq_count();
    const ComplexTensor permuted = permute_axes(stft_kernel(k, frame.window(), frame.dual()), catalog::c1().permutation);
    ComplexTensor values({na, nb, na, nb});
    for (std::size_t mu2 = 0; mu2 < nb; ++mu2)
        for (std::size_t mu1 = 0; mu1 < na; ++mu1)
            for (std::size_t l2 = 0; l2 < nb; ++l2)
                for (std::size_t l1 = 0; l1 < na; ++l1)
                    values(l1, l2, mu1, mu2) = permuted(l1 * a, l2 * b, mu1 * a, (n - mu2 * b) % n);
    return GaborMatrix(std::move(values), frame);
}

ComplexTensor composed_operator_matrix(const KernelMatrix& k, const GaborFrame& frame) {
    require_same_modulus(k.modulus(), frame.modulus(), "composed_operator_matrix");
    const Lattice& l = frame.lattice();
    const std::size_t na = l.time_count(), nb = l.freq_count(), m = l.size();
    ComplexTensor out({m, m});
    ComplexTensor unit({na, nb});
    for (std::size_t col = 0; col < m; ++col) {
        unit.values()[col] = 1.0;
        const Signal image = apply_kernel(k, synthesize(unit, frame.dual(), l));
        const ComplexTensor coeffs = analyze(image, frame.window(), l);
        for (std::size_t row = 0; row < m; ++row) out(row, col) = coeffs.values()[row];
        unit.values()[col] = 0.0;
    }
    return out;
}

double exact_norm_l1_to_lp(const ComplexTensor& m, const Exponent& p) {
    if (m.rank() != 2) throw std::invalid_argument("exact_norm_l1_to_lp: expected a matrix");
    return mixed_norm(m, ExponentVector{p, kInf});
}

double exact_norm_lp_to_linf(const ComplexTensor& m, const Exponent& p) {
    if (m.rank() != 2) throw std::invalid_argument("exact_norm_lp_to_linf: expected a matrix");
    return mixed_norm(permute_axes(m, AxisPermutation{2, 1}), ExponentVector{p.dual(), kInf});
}

double schur_bound(const ComplexTensor& k4, SchurSide side) {
    if (k4.rank() != 4) throw std::invalid_argument("schur_bound: expected a rank-4 tensor");
    const auto& c = side == SchurSide::C3 ? catalog::c3() : catalog::c4();
    return mixed_norm(permute_axes(k4, c.permutation), kSchurExponents);
}

bool Certificate::bounded() const noexcept { return std::isfinite(bound); }

double Certificate::ingredient(std::string_view name) const {
    for (const auto& i : ingredients)
        if (i.name == name) return i.value;
    throw std::out_of_range("certificate has no ingredient '" + std::string(name) + "'");
}

Certificate estimate_m1_to_mp(const KernelMatrix& k, const GaborFrame& frame, const Exponent& p) {
    const GaborMatrix gm = gabor_matrix(k, frame);
    const double lattice = exact_norm_l1_to_lp(gm.flattened(), p);
    const ExponentVector exps{p, p, kInf, kInf};
    const double full = mod_norm_kernel(k, frame.window(), frame.dual(), catalog::c1().permutation, exps);
    Certificate cert;
    cert.source = "M^1";
    cert.target = "M^" + exp_label(p);
    cert.bound = lattice;
    cert.method = "sup_mu ||K_{.,mu}||_{l^p} over the Gabor matrix (column norms, l^1 -> l^p)";
    cert.ingredients = {{"lattice_l1_to_lp", lattice},
                        {"M(c1)^{p,inf}", full},
                        {"ratio_lattice_over_full", ratio_or_nan(lattice, full)}};
    cert.verdicts = {{cert.source + "->" + cert.target, std::isfinite(full), lattice}};
    return cert;
}

Certificate estimate_mp_to_minf(const KernelMatrix& k, const GaborFrame& frame, const Exponent& p) {
    const GaborMatrix gm = gabor_matrix(k, frame);
    const double lattice = exact_norm_lp_to_linf(gm.flattened(), p);
    const Exponent q = p.dual();
    const ExponentVector exps{q, q, kInf, kInf};
    const double full = mod_norm_kernel(k, frame.window(), frame.dual(), catalog::c2().permutation, exps);
    Certificate cert;
    cert.source = "M^" + exp_label(p);
    cert.target = "M^inf";
    cert.bound = lattice;
    cert.method = "sup_lambda ||K_{lambda,.}||_{l^p'} over the Gabor matrix (row norms, l^p -> l^inf)";
    cert.ingredients = {{"lattice_lp_to_linf", lattice},
                        {"M(c2)^{p',inf}", full},
                        {"ratio_lattice_over_full", ratio_or_nan(lattice, full)}};
    cert.verdicts = {{cert.source + "->" + cert.target, std::isfinite(full), lattice}};
    return cert;
}

Certificate certify_all_mp(const KernelMatrix& k, const GaborFrame& frame) {
    const GaborMatrix gm = gabor_matrix(k, frame);
    const ComplexTensor flat = gm.flattened();
    const double l1 = exact_norm_l1_to_lp(flat, Exponent(1.0));
    const double linf = exact_norm_lp_to_linf(flat, kInf);
    const double c1 = mod_norm_kernel(k, frame.window(), frame.dual(), catalog::c1().permutation, kEndpointPair);
    const double c2 = mod_norm_kernel(k, frame.window(), frame.dual(), catalog::c2().permutation, kEndpointPair);
    const bool ok = std::isfinite(c1) && std::isfinite(c2);
    Certificate cert;
    cert.source = "M^p";
    cert.target = "M^p";
    cert.bound = ok ? std::max(l1, linf) : std::numeric_limits<double>::infinity();
    cert.method = "K in M(c1)^{1,inf} and M(c2)^{1,inf}; interpolated bound = max of endpoint bounds";
    cert.ingredients = {{"M(c1)^{1,inf}", c1},
                        {"M(c2)^{1,inf}", c2},
                        {"lattice_l1_to_l1", l1},
                        {"lattice_linf_to_linf", linf},
                        {"ratio_c1", ratio_or_nan(l1, c1)},
                        {"ratio_c2", ratio_or_nan(linf, c2)}};
    cert.verdicts = {{"M^1", std::isfinite(c1), l1}, {"M^inf", std::isfinite(c2), linf}, {"M^p, 1<=p<=inf", ok, cert.bound}};
    return cert;
}

Certificate certify_all_mpq(const KernelMatrix& k, const GaborFrame& frame) {
    const GaborMatrix gm = gabor_matrix(k, frame);
    const ComplexTensor flat = gm.flattened();
    const double l1 = exact_norm_l1_to_lp(flat, Exponent(1.0));
    const double linf = exact_norm_lp_to_linf(flat, kInf);
    const double s3 = schur_bound(gm.values(), SchurSide::C3);
    const double s4 = schur_bound(gm.values(), SchurSide::C4);
    const Signal& g = frame.window();
    const Signal& gamma = frame.dual();
    const double c1 = mod_norm_kernel(k, g, gamma, catalog::c1().permutation, kEndpointPair);
    const double c2 = mod_norm_kernel(k, g, gamma, catalog::c2().permutation, kEndpointPair);
    const double c5 = mod_norm_kernel(k, g, gamma, catalog::c5().permutation, kSchurExponents);
    const double c6 = mod_norm_kernel(k, g, gamma, catalog::c6().permutation, kSchurExponents);
    const bool ok56 = std::isfinite(c5) && std::isfinite(c6);
    const bool ok = ok56 && std::isfinite(c1) && std::isfinite(c2);
    Certificate cert;
    cert.source = "M^{p,q}";
    cert.target = "M^{p,q}";
    cert.bound = ok ? std::max({l1, linf, s3, s4}) : std::numeric_limits<double>::infinity();
    cert.method = "K in M(c1)^{1,inf}, M(c2)^{1,inf}, M(c5)^{1,inf,1,inf}, M(c6)^{1,inf,1,inf}; "
                  "Schur bounds on the Gabor matrix at the mixed corners; interpolated bound = max of corners";
    cert.ingredients = {{"M(c1)^{1,inf}", c1},
                        {"M(c2)^{1,inf}", c2},
                        {"M(c5)^{1,inf,1,inf}", c5},
                        {"M(c6)^{1,inf,1,inf}", c6},
                        {"lattice_l1_to_l1", l1},
                        {"lattice_linf_to_linf", linf},
                        {"schur_c3_linf1", s3},
                        {"schur_c4_l1inf", s4}};
    cert.verdicts = {{"M^{inf,1}", std::isfinite(c5), s3},
                     {"M^{1,inf}", std::isfinite(c6), s4},
                     {"M^{p',p}, 1<=p<=inf", ok56, std::max(s3, s4)},
                     {"M^{p,q}, 1<=p,q<=inf", ok, cert.bound}};
    return cert;
}

ComplexTensor fourier_matrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("fourier_matrix: N must be positive");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ComplexTensor f({n, n});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) f(j, k) = scale * unit_root(n, -static_cast<long long>((j * k) % n));
    return f;
}

ComplexTensor fourier_tensor(std::size_t n) {
    const ComplexTensor f = fourier_matrix(n);
    ComplexTensor k4({n, n, n, n});
    for (std::size_t m2 = 0; m2 < n; ++m2)
        for (std::size_t m1 = 0; m1 < n; ++m1)
            for (std::size_t l2 = 0; l2 < n; ++l2)
                for (std::size_t l1 = 0; l1 < n; ++l1) k4(l1, l2, m1, m2) = f(l2, m1);
    return k4;
}

GapReport fourier_gap_experiment(std::size_t n, const oracle::SearchConfig& cfg) {
    if (n < 2) throw std::invalid_argument("fourier_gap_experiment: N must be >= 2");
    const ComplexTensor f = fourier_matrix(n);
    const ComplexTensor k4 = fourier_tensor(n);

    GapReport r;
    r.n = n;
    r.seed = cfg.seed;
    r.schur = schur_bound(k4, SchurSide::C3);

    // F*F = I, so ||F||_{2->2} = 1 exactly
    double defect = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            cplx s{};
            for (std::size_t t = 0; t < n; ++t) s += std::conj(f(t, i)) * f(t, j);
            defect = std::max(defect, std::abs(s - (i == j ? cplx{1.0} : cplx{})));
        }
    if (defect > 1e-12) throw std::logic_error("fourier_gap_experiment: Fourier matrix is not unitary");
    r.unitarity_defect = defect;
    r.l2_opnorm = oracle::opnorm_l2(f, cfg);

    // ||F a~||_1 <= sqrt(N) ||F a~||_2 = sqrt(N) ||a~||_2 <= N ||a~||_inf <= N ||a||_{inf,1}
    const double embed_l1_l2 = std::sqrt(static_cast<double>(n));
    const double embed_l2_linf = std::sqrt(static_cast<double>(n));
    r.certified = embed_l1_l2 * 1.0 * embed_l2_linf;

    const ExponentVector space{kInf, Exponent(1.0)};
    r.lower = oracle::mixed_opnorm_lower(k4, space, space, cfg);
    return r;
}

} // namespace tfk

#include "doctest.h"

#include <cmath>
#include <iomanip>

#include "test_support.hpp"
#include "tfkernel/errors.hpp"
#include "tfkernel/finite_tfa.hpp"
#include "tfkernel/kernel_theorems.hpp"
#include "tfkernel/mixed_norms.hpp"
#include "tfkernel/mod_spaces.hpp"
#include "tfkernel/oracle.hpp"

using namespace tfk;
using tfk::testing::make;
using tfk::testing::rel_dev;
using tfk::testing::rel_err;

namespace {

const Exponent p1{1.0};
const Exponent p2{2.0};

// regression anchors, recorded from the first run
constexpr double kIdentityC1 = 1.9402640661364705;
constexpr double kIdentityC2 = 1.9402640661364705;
constexpr double kIdentityBound = 1.9402640661364707;
constexpr double kFourierC1 = 1.6108349618711086;
constexpr double kFourierC2 = 1.6108349618711086;
constexpr double kFourierC5 = 2.8074563613691224;
constexpr double kFourierC6 = 2.8074563613691224;

// [[1,-2],[3,4]], axis 1 (row index) fastest
ComplexTensor small_matrix() { return make({2, 2}, {1.0, 3.0, -2.0, 4.0}); }

GaborFrame random_frame(Rng& rng, std::size_t n, std::size_t a, std::size_t b) {
    for (;;) {
        try {
            return GaborFrame(rng.signal(n), Lattice(n, a, b));
        } catch (const NotAFrame&) {
        }
    }
}

KernelMatrix fourier_kernel(std::size_t n) { return KernelMatrix(fourier_matrix(n)); }

} // namespace

TEST_SUITE("gabor_matrix") {
    TEST_CASE("direct route equals the STFT route with the mu2 flip") {
        Rng rng(1);
        for (std::size_t n : {4u, 8u}) {
            for (int i = 0; i < 5; ++i) {
                const GaborFrame frame = random_frame(rng, n, 1, 1);
                const KernelMatrix k = rng.kernel(n);
                CHECK(rel_dev(gabor_matrix(k, frame).values(), gabor_matrix_from_stft(k, frame).values()) < 1e-10);
            }
        }
        // also on a coarse lattice
        const GaborFrame coarse = random_frame(rng, 8, 2, 2);
        const KernelMatrix k = rng.kernel(8);
        CHECK(rel_dev(gabor_matrix(k, coarse).values(), gabor_matrix_from_stft(k, coarse).values()) < 1e-10);
    }

    TEST_CASE("identity kernel: entries are STFTs of shifted duals") {
        const GaborFrame frame(gaussian_window(8), Lattice(8, 2, 2));
        const GaborMatrix gm = gabor_matrix(KernelMatrix::identity(8), frame);
        const Lattice& l = frame.lattice();
        for (std::size_t mu2 = 0; mu2 < 4; ++mu2)
            for (std::size_t mu1 = 0; mu1 < 4; ++mu1) {
                const ComplexTensor v =
                    restrict_to_lattice(oracle::stft_reference(tf_shift_apply(l.point(mu1, mu2), frame.dual()), frame.window()), l);
                for (std::size_t l2 = 0; l2 < 4; ++l2)
                    for (std::size_t l1 = 0; l1 < 4; ++l1) CHECK(std::abs(gm.values()(l1, l2, mu1, mu2) - v(l1, l2)) < 1e-12);
            }
    }

    TEST_CASE("zero kernel and shape checks") {
        Rng rng(12);
        const GaborFrame frame = random_frame(rng, 8, 2, 4);
        const GaborMatrix gm = gabor_matrix(KernelMatrix(8), frame);
        CHECK(gm.values().is_zero());
        CHECK(gm.values().shape() == std::vector<std::size_t>{4, 2, 4, 2});
        CHECK_THROWS_AS(GaborMatrix(ComplexTensor({4, 4, 4, 4}), frame), std::invalid_argument);
        CHECK_THROWS_AS(gabor_matrix(KernelMatrix(4), frame), std::invalid_argument);
    }

    TEST_CASE("flattening is a pure reshape and matches C_g A D_gamma") {
        Rng rng(2);
        const GaborFrame frame = random_frame(rng, 8, 2, 2);
        const KernelMatrix k = rng.kernel(8);
        const GaborMatrix gm = gabor_matrix(k, frame);
        const ComplexTensor flat = gm.flattened();
        CHECK(flat.shape() == std::vector<std::size_t>{16, 16});
        for (std::size_t i = 0; i < flat.size(); ++i) CHECK(flat.values()[i] == gm.values().values()[i]);
        CHECK(flat(1 + 4 * 2, 3 + 4 * 1) == gm.values()(1, 2, 3, 1));
        CHECK(rel_dev(composed_operator_matrix(k, frame), flat) < 1e-10);
    }
}

TEST_SUITE("exact norms") {
    TEST_CASE("worked 2x2 values") {
        const ComplexTensor m = small_matrix();
        CHECK(exact_norm_l1_to_lp(m, p1) == 6.0);
        CHECK(exact_norm_l1_to_lp(m, kInf) == 4.0);
        CHECK(exact_norm_l1_to_lp(m, p2) == doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
        CHECK(exact_norm_lp_to_linf(m, p1) == 4.0);
        CHECK(exact_norm_lp_to_linf(m, kInf) == 7.0);
        CHECK(exact_norm_lp_to_linf(m, p2) == doctest::Approx(5.0).epsilon(1e-15));
        CHECK(oracle::enumerate_l1_domain_norm(m, p1) == 6.0);
        CHECK(oracle::enumerate_l1_domain_norm(m, kInf) == 4.0);
    }

    TEST_CASE("row formula agrees with the column formula on the transpose") {
        Rng rng(3);
        for (int i = 0; i < 20; ++i) {
            const ComplexTensor m = rng.tensor({rng.index(1, 9), rng.index(1, 9)});
            for (const Exponent& p : {p1, p2, kInf, Exponent(3.0)})
                CHECK(rel_err(exact_norm_lp_to_linf(m, p), exact_norm_l1_to_lp(oracle::adjoint(m), p.dual())) < 1e-13);
        }
        CHECK_THROWS_AS(exact_norm_l1_to_lp(ComplexTensor({2}), p1), std::invalid_argument);
    }

    TEST_CASE("Cauchy-Schwarz extremizer attains the l^2 -> l^inf value") {
        const ComplexTensor m = small_matrix();
        // row 2 = (3, 4): a = conj(row) / ||row||
        const std::vector<cplx> a{3.0 / 5.0, 4.0 / 5.0};
        const auto y = oracle::matvec(m, a);
        CHECK(std::abs(y[1]) == doctest::Approx(5.0).epsilon(1e-15));
    }
}

TEST_SUITE("estimates") {
    TEST_CASE("zero kernel gives zero bounds") {
        const GaborFrame frame(gaussian_window(8), Lattice(8, 2, 2));
        CHECK(estimate_m1_to_mp(KernelMatrix(8), frame, p2).bound == 0.0);
        CHECK(estimate_mp_to_minf(KernelMatrix(8), frame, p2).bound == 0.0);
        const Certificate all = certify_all_mpq(KernelMatrix(8), frame);
        for (const char* name : {"M(c1)^{1,inf}", "M(c2)^{1,inf}", "M(c5)^{1,inf,1,inf}", "M(c6)^{1,inf,1,inf}"})
            CHECK(all.ingredient(name) == 0.0);
        CHECK(all.bound == 0.0);
        CHECK(certify_all_mp(KernelMatrix(8), frame).bound == 0.0);
    }

    TEST_CASE("M^1 -> M^p bound is attained by a basis sequence") {
        Rng rng(4);
        const GaborFrame frame = random_frame(rng, 8, 2, 2);
        const KernelMatrix k = rng.kernel(8);
        const ComplexTensor a = composed_operator_matrix(k, frame);
        for (const Exponent& p : {p1, p2, kInf}) {
            const Certificate c = estimate_m1_to_mp(k, frame, p);
            CHECK(rel_err(c.bound, oracle::enumerate_l1_domain_norm(a, p)) < 1e-10);
            CHECK(c.bound == exact_norm_l1_to_lp(gabor_matrix(k, frame).flattened(), p));
            CHECK(c.ingredient("ratio_lattice_over_full") == doctest::Approx(c.bound / c.ingredient("M(c1)^{p,inf}")));
        }
    }

    TEST_CASE("no random vector beats the l^1 -> l^p bound") {
        Rng rng(5);
        const GaborFrame frame = random_frame(rng, 8, 2, 2);
        const KernelMatrix k = rng.kernel(8);
        const ComplexTensor a = composed_operator_matrix(k, frame);
        for (const Exponent& p : {p1, p2, kInf}) {
            const double bound = estimate_m1_to_mp(k, frame, p).bound;
            for (int i = 0; i < 200; ++i) {
                const ComplexTensor x = rng.tensor({16});
                const double r = oracle::vector_norm(oracle::matvec(a, x.values()), p) / oracle::vector_norm(x.values(), p1);
                CHECK(r <= bound * (1.0 + 1e-10));
            }
        }
    }

    TEST_CASE("M^p -> M^inf at p = 2 is the largest row norm") {
        Rng rng(6);
        const GaborFrame frame = random_frame(rng, 8, 2, 2);
        const KernelMatrix k = rng.kernel(8);
        const ComplexTensor flat = gabor_matrix(k, frame).flattened();
        double best = 0.0;
        for (std::size_t i = 0; i < 16; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < 16; ++j) s += std::norm(flat(i, j));
            best = std::max(best, std::sqrt(s));
        }
        CHECK(rel_err(estimate_mp_to_minf(k, frame, p2).bound, best) < 1e-12);
    }

    TEST_CASE("transpose consistency on a tight frame") {
        Rng rng(7);
        const GaborFrame frame(gaussian_window(8), Lattice::full(8));
        const KernelMatrix k = rng.kernel(8);
        const KernelMatrix kh(oracle::adjoint(k.tensor()));
        const double max_entry = max_abs(gabor_matrix(k, frame).values());
        CHECK(rel_err(estimate_mp_to_minf(k, frame, p1).bound, max_entry) < 1e-12);
        CHECK(rel_err(estimate_m1_to_mp(kh, frame, kInf).bound, max_entry) < 1e-12);
    }

    TEST_CASE("identity kernel on the full lattice") {
        const GaborFrame frame(gaussian_window(8), Lattice::full(8));
        const ComplexTensor flat = gabor_matrix(KernelMatrix::identity(8), frame).flattened();
        for (const Exponent& p : {p1, p2, kInf}) {
            double best = 0.0;
            for (std::size_t mu = 0; mu < 64; ++mu) {
                std::vector<cplx> col(64);
                for (std::size_t l = 0; l < 64; ++l) col[l] = flat(l, mu);
                best = std::max(best, oracle::vector_norm(col, p));
            }
            CHECK(rel_err(estimate_m1_to_mp(KernelMatrix::identity(8), frame, p).bound, best) < 1e-12);
        }
    }
}

TEST_SUITE("schur_bound") {
    TEST_CASE("Fourier tensor and the all-ones tensor") {
        CHECK(rel_err(schur_bound(fourier_tensor(4), SchurSide::C3), 8.0) < 1e-12);
        for (std::size_t n : {1u, 2u, 3u}) {
            ComplexTensor ones({n, n, n, n});
            for (auto& z : ones.values()) z = 1.0;
            CHECK(schur_bound(ones, SchurSide::C3) == static_cast<double>(n * n));
            CHECK(schur_bound(ones, SchurSide::C4) == static_cast<double>(n * n));
        }
        CHECK_THROWS_AS(schur_bound(ComplexTensor({2, 2}), SchurSide::C3), std::invalid_argument);
    }

    TEST_CASE("both inequalities on random (K4, a)") {
        Rng rng(8);
        int violations = 0;
        for (int i = 0; i < 100; ++i) {
            const std::size_t n1 = rng.index(1, 5), n2 = rng.index(1, 5);
            const ComplexTensor k4 = rng.tensor({n1, n2, n1, n2});
            const ComplexTensor a = rng.tensor({n1, n2});
            const ComplexTensor b = oracle::apply_four_index(k4, a);
            if (oracle::sequence_norm(b, kInf, p1) > schur_bound(k4, SchurSide::C3) * oracle::sequence_norm(a, kInf, p1) * (1 + 1e-12))
                ++violations;
            if (oracle::sequence_norm(b, p1, kInf) > schur_bound(k4, SchurSide::C4) * oracle::sequence_norm(a, p1, kInf) * (1 + 1e-12))
                ++violations;
        }
        CHECK(violations == 0);
    }
}

TEST_SUITE("certificates") {
    TEST_CASE("identity kernel, N = 8, gaussian window, full lattice: anchors") {
        const GaborFrame frame(gaussian_window(8), Lattice::full(8));
        const Certificate c = certify_all_mp(KernelMatrix::identity(8), frame);
        MESSAGE(std::setprecision(17) << "identity anchors: c1=" << c.ingredient("M(c1)^{1,inf}") << " c2=" << c.ingredient("M(c2)^{1,inf}")
                                        << " bound=" << c.bound);
        CHECK(c.bounded());
        CHECK(c.ingredient("M(c1)^{1,inf}") > 0.0);
        CHECK(rel_err(c.ingredient("M(c1)^{1,inf}"), kIdentityC1) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c2)^{1,inf}"), kIdentityC2) < 1e-10);
        CHECK(rel_err(c.bound, kIdentityBound) < 1e-10);
    }

    TEST_CASE("Fourier kernel, N = 4: anchors") {
        const GaborFrame frame(gaussian_window(4), Lattice::full(4));
        const Certificate c = certify_all_mpq(fourier_kernel(4), frame);
        MESSAGE(std::setprecision(17) << "fourier anchors: c1=" << c.ingredient("M(c1)^{1,inf}") << " c2=" << c.ingredient("M(c2)^{1,inf}")
                                       << " c5=" << c.ingredient("M(c5)^{1,inf,1,inf}")
                                       << " c6=" << c.ingredient("M(c6)^{1,inf,1,inf}"));
        CHECK(rel_err(c.ingredient("M(c1)^{1,inf}"), kFourierC1) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c2)^{1,inf}"), kFourierC2) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c5)^{1,inf,1,inf}"), kFourierC5) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c6)^{1,inf,1,inf}"), kFourierC6) < 1e-10);
        CHECK(c.verdicts.size() == 4);
    }

    TEST_CASE("full lattice: c5/c6 full-grid norms coincide with the Schur bounds") {
        Rng rng(9);
        const GaborFrame frame = random_frame(rng, 4, 1, 1);
        const Certificate c = certify_all_mpq(rng.kernel(4), frame);
        CHECK(rel_err(c.ingredient("M(c5)^{1,inf,1,inf}"), c.ingredient("schur_c3_linf1")) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c6)^{1,inf,1,inf}"), c.ingredient("schur_c4_l1inf")) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c1)^{1,inf}"), c.ingredient("lattice_l1_to_l1")) < 1e-10);
        CHECK(rel_err(c.ingredient("M(c2)^{1,inf}"), c.ingredient("lattice_linf_to_linf")) < 1e-10);
    }

    TEST_CASE("endpoint bound dominates measured l^p norms of the composed operator") {
        Rng rng(10);
        const GaborFrame frame = random_frame(rng, 8, 2, 2);
        for (int i = 0; i < 5; ++i) {
            const KernelMatrix k = rng.kernel(8);
            const Certificate c = certify_all_mp(k, frame);
            const ComplexTensor a = composed_operator_matrix(k, frame);
            CHECK(oracle::enumerate_l1_domain_norm(a, p1) <= c.bound * (1 + 1e-12));
            CHECK(oracle::enumerate_l1_domain_norm(oracle::adjoint(a), p1) <= c.bound * (1 + 1e-12));
            CHECK(oracle::opnorm_l2(a, oracle::SearchConfig{}) <= c.bound * (1 + 1e-12));
        }
    }

    TEST_CASE("diagonal kernels: Schur corners dominate ascent lower bounds") {
        Rng rng(11);
        const GaborFrame frame(gaussian_window(8), Lattice(8, 2, 2));
        oracle::SearchConfig cfg;
        cfg.trials = 4;
        int violations = 0;
        for (int i = 0; i < 50; ++i) {
            cfg.seed = 1000 + static_cast<std::uint64_t>(i);
            std::vector<cplx> d(8);
            for (auto& z : d) z = rng.complex_normal();
            const KernelMatrix k = KernelMatrix::diagonal(Signal(d));
            const Certificate c = certify_all_mpq(k, frame);
            const ComplexTensor gm = gabor_matrix(k, frame).values();
            const double lo31 = oracle::mixed_opnorm_lower(gm, ExponentVector{kInf, p1}, ExponentVector{kInf, p1}, cfg);
            const double lo13 = oracle::mixed_opnorm_lower(gm, ExponentVector{p1, kInf}, ExponentVector{p1, kInf}, cfg);
            if (lo31 > c.ingredient("schur_c3_linf1") * (1 + 1e-12)) ++violations;
            if (lo13 > c.ingredient("schur_c4_l1inf") * (1 + 1e-12)) ++violations;
        }
        CHECK(violations == 0);
    }

    TEST_CASE("unknown ingredient") {
        Certificate c;
        CHECK_THROWS_AS((void)c.ingredient("nope"), std::out_of_range);
    }
}

TEST_SUITE("fourier gap") {
    TEST_CASE("N = 4, 16, 9") {
        oracle::SearchConfig cfg;
        for (std::size_t n : {4u, 16u, 9u}) {
            if (n == 9) cfg.trials = 1000;
            const GapReport r = fourier_gap_experiment(n, cfg);
            const double nd = static_cast<double>(n);
            CHECK(rel_err(r.schur, std::pow(nd, 1.5)) < 1e-9);
            CHECK(r.certified == nd);
            CHECK(rel_err(r.schur / r.certified, std::sqrt(nd)) < 1e-9);
            CHECK(rel_err(r.l2_opnorm, 1.0) < 1e-10);
            CHECK(r.lower > 0.0);
            CHECK(r.lower <= r.certified);
            MESSAGE("N=" << n << " lower=" << r.lower);
        }
        CHECK_THROWS_AS(fourier_gap_experiment(1, cfg), std::invalid_argument);
    }
}

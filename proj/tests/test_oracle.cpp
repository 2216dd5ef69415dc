#include "doctest.h"

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "tfkernel/kernel_theorems.hpp"
#include "tfkernel/oracle.hpp"

using namespace tfk;
using tfk::testing::make;
using tfk::testing::rel_err;

namespace {

const Exponent p1{1.0};
const Exponent p2{2.0};

} // namespace

TEST_SUITE("oracle") {
    TEST_CASE("stft_reference closed forms") {
        Rng rng(1);
        const Signal f = rng.signal(6);
        const ComplexTensor v = oracle::stft_reference(f, Signal::delta(6));
        for (std::size_t xi = 0; xi < 6; ++xi)
            for (std::size_t x = 0; x < 6; ++x)
                CHECK(std::abs(v(x, xi) - f[x] * std::polar(1.0, -2.0 * std::numbers::pi * double(xi * x) / 6.0)) < 1e-13);
        CHECK(oracle::stft_reference(Signal(6), rng.signal(6)).is_zero());
    }

    TEST_CASE("opnorm_l2 on known matrices") {
        const oracle::SearchConfig cfg;
        ComplexTensor id({5, 5});
        for (std::size_t i = 0; i < 5; ++i) id(i, i) = 1.0;
        CHECK(rel_err(oracle::opnorm_l2(id, cfg), 1.0) < 1e-12);
        ComplexTensor d({3, 3});
        d(0, 0) = 1.0;
        d(1, 1) = -3.0;
        d(2, 2) = 2.0;
        CHECK(rel_err(oracle::opnorm_l2(d, cfg), 3.0) < 1e-10);
        CHECK(rel_err(oracle::opnorm_l2(fourier_matrix(8), cfg), 1.0) < 1e-12);
        CHECK(oracle::opnorm_l2(ComplexTensor({3, 4}), cfg) == 0.0);
        // rectangular: single row (3, 4) has norm 5
        CHECK(rel_err(oracle::opnorm_l2(make({1, 2}, {3.0, 4.0}), cfg), 5.0) < 1e-12);
    }

    TEST_CASE("mixed_opnorm_lower") {
        const oracle::SearchConfig cfg;
        CHECK(oracle::mixed_opnorm_lower(ComplexTensor({2, 3, 2, 3}), ExponentVector{p2, p2}, ExponentVector{p2, p2}, cfg) == 0.0);

        Rng rng(2);
        const ComplexTensor u = rng.tensor({3, 2});
        const ComplexTensor v = rng.tensor({2, 4});
        ComplexTensor k4({3, 2, 2, 4});
        for (std::size_t m2 = 0; m2 < 4; ++m2)
            for (std::size_t m1 = 0; m1 < 2; ++m1)
                for (std::size_t l2 = 0; l2 < 2; ++l2)
                    for (std::size_t l1 = 0; l1 < 3; ++l1) k4(l1, l2, m1, m2) = u(l1, l2) * v(m1, m2);
        const double exact = oracle::vector_norm(u.values(), p2) * oracle::vector_norm(v.values(), p2);
        CHECK(rel_err(oracle::mixed_opnorm_lower(k4, ExponentVector{p2, p2}, ExponentVector{p2, p2}, cfg), exact) < 1e-6);

        const ExponentVector s{kInf, p1};
        const double lo = oracle::mixed_opnorm_lower(fourier_tensor(4), s, s, cfg);
        CHECK(lo > 0.0);
        CHECK(lo <= 4.0 * (1.0 + 1e-12));
        CHECK_THROWS_AS(oracle::mixed_opnorm_lower(k4, ExponentVector{p2}, s, cfg), std::invalid_argument);
        oracle::SearchConfig bad;
        bad.trials = 0;
        CHECK_THROWS_AS(oracle::mixed_opnorm_lower(k4, s, s, bad), std::invalid_argument);
    }

    TEST_CASE("lower bound never exceeds an exact l^1 -> l^1 norm") {
        Rng rng(3);
        const oracle::SearchConfig cfg;
        for (int i = 0; i < 10; ++i) {
            const ComplexTensor k4 = rng.tensor({3, 3, 3, 3});
            const double exact = oracle::enumerate_l1_domain_norm(k4.reshaped({9, 9}), p1);
            const double lo = oracle::mixed_opnorm_lower(k4, ExponentVector{p1, p1}, ExponentVector{p1, p1}, cfg);
            CHECK(lo <= exact * (1.0 + 1e-12));
        }
    }

    TEST_CASE("enumerate_l1_domain_norm") {
        Rng rng(4);
        const ComplexTensor m = rng.tensor({10, 10});
        CHECK(rel_err(oracle::enumerate_l1_domain_norm(m, p2), exact_norm_l1_to_lp(m, p2)) < 1e-12);
        CHECK_THROWS_AS(oracle::enumerate_l1_domain_norm(ComplexTensor({1, 4097}), p1), std::invalid_argument);
    }

    TEST_CASE("norming vector attains the dual norm") {
        Rng rng(5);
        for (const auto& [in, out] : {std::pair{p1, kInf}, std::pair{kInf, p1}, std::pair{p2, Exponent(3.0)}}) {
            const ComplexTensor w = rng.tensor({4, 3});
            const ComplexTensor u = oracle::norming_vector(w, in, out);
            cplx pair{};
            for (std::size_t i = 0; i < w.size(); ++i) pair += u.values()[i] * std::conj(w.values()[i]);
            CHECK(rel_err(oracle::sequence_norm(u, in, out), 1.0) < 1e-12);
            CHECK(rel_err(pair.real(), oracle::sequence_norm(w, in.dual(), out.dual())) < 1e-12);
        }
    }

    TEST_CASE("deterministic given the seed") {
        Rng rng(6);
        const ComplexTensor k4 = rng.tensor({3, 3, 3, 3});
        oracle::SearchConfig cfg;
        cfg.seed = 99;
        const ExponentVector s{kInf, p1}, t{p1, Exponent(3.0)};
        CHECK(oracle::mixed_opnorm_lower(k4, s, t, cfg) == oracle::mixed_opnorm_lower(k4, s, t, cfg));
        CHECK(oracle::opnorm_l2(k4.reshaped({9, 9}), cfg) == oracle::opnorm_l2(k4.reshaped({9, 9}), cfg));
    }
}

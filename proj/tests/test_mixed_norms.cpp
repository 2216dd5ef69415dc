#include "doctest.h"

#include <cmath>
#include <limits>

#include "test_support.hpp"
#include "tfkernel/mixed_norms.hpp"

using namespace tfk;
using tfk::testing::make;
using tfk::testing::rel_err;

namespace {

const Exponent p1{1.0};
const Exponent p2{2.0};

ExponentVector random_exponents(Rng& rng, std::size_t k) {
    std::vector<Exponent> e;
    for (std::size_t i = 0; i < k; ++i) {
        switch (rng.index(0, 3)) {
        case 0: e.emplace_back(1.0); break;
        case 1: e.emplace_back(2.0); break;
        case 2: e.push_back(kInf); break;
        default: e.emplace_back(rng.uniform(1.0, 6.0)); break;
        }
    }
    return ExponentVector(std::move(e));
}

std::vector<std::size_t> random_shape(Rng& rng, std::size_t k, std::size_t max_extent) {
    std::vector<std::size_t> s(k);
    for (auto& e : s) e = rng.index(1, max_extent);
    return s;
}

AxisPermutation random_permutation(Rng& rng, std::size_t k) {
    std::vector<std::size_t> m(k);
    for (std::size_t i = 0; i < k; ++i) m[i] = i + 1;
    for (std::size_t i = k; i > 1; --i) std::swap(m[i - 1], m[rng.index(0, i - 1)]);
    return AxisPermutation(m);
}

} // namespace

TEST_SUITE("exponents") {
    TEST_CASE("construction rejects values below one and NaN") {
        CHECK_THROWS_AS(Exponent(0.5), std::invalid_argument);
        CHECK_THROWS_AS(Exponent(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
        CHECK(Exponent(std::numeric_limits<double>::infinity()).is_infinite());
        CHECK(Exponent::parse("inf").is_infinite());
        CHECK(Exponent::parse(" 2.5 ").value() == 2.5);
        CHECK_THROWS_AS(Exponent::parse("2x"), std::invalid_argument);
        CHECK_THROWS_AS(kInf.value(), std::logic_error);
    }

    TEST_CASE("dual exponents") {
        const ExponentVector d = dual_exponents(ExponentVector{p1, p2, kInf});
        CHECK(d[0].is_infinite());
        CHECK(d[1].value() == 2.0);
        CHECK(d[2].value() == 1.0);
        CHECK(Exponent(4.0 / 3.0).dual().value() == doctest::Approx(4.0).epsilon(1e-14));

        Rng rng(7);
        for (int i = 0; i < 50; ++i) {
            const ExponentVector p = random_exponents(rng, 4);
            const ExponentVector back = dual_exponents(dual_exponents(p));
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(back[j].is_infinite() == p[j].is_infinite());
                if (!p[j].is_infinite()) CHECK(rel_err(back[j].value(), p[j].value()) < 1e-14);
            }
        }
    }
}

TEST_SUITE("permute_axes") {
    TEST_CASE("identity leaves the tensor unchanged") {
        Rng rng(1);
        const ComplexTensor t = rng.tensor({2, 3, 4, 5});
        CHECK(permute_axes(t, AxisPermutation::identity(4)) == t);
    }

    TEST_CASE("swap of a 2x2 matrix is the transpose") {
        // [[1,2],[3,4]] with axis 1 fastest: entries (0,0)=1 (1,0)=2 (0,1)=3 (1,1)=4
        const ComplexTensor t = make({2, 2}, {1.0, 2.0, 3.0, 4.0});
        const ComplexTensor s = permute_axes(t, AxisPermutation{2, 1});
        CHECK(s == make({2, 2}, {1.0, 3.0, 2.0, 4.0}));
    }

    TEST_CASE("definition on a non-square rank-3 tensor") {
        Rng rng(2);
        const ComplexTensor t = rng.tensor({2, 3, 4});
        const AxisPermutation c{3, 1, 2};
        const ComplexTensor s = permute_axes(t, c);
        // out extent on axis c(i) equals in extent i
        CHECK(s.shape() == std::vector<std::size_t>{3, 4, 2});
        for (std::size_t y1 = 0; y1 < 3; ++y1)
            for (std::size_t y2 = 0; y2 < 4; ++y2)
                for (std::size_t y3 = 0; y3 < 2; ++y3) {
                    const std::size_t y[3] = {y1, y2, y3};
                    CHECK(s(y1, y2, y3) == t(y[c(1) - 1], y[c(2) - 1], y[c(3) - 1]));
                }
    }

    TEST_CASE("inverse composition restores random rank-4 tensors") {
        Rng rng(3);
        for (int i = 0; i < 30; ++i) {
            const ComplexTensor t = rng.tensor(random_shape(rng, 4, 4));
            const AxisPermutation c = random_permutation(rng, 4);
            CHECK(permute_axes(permute_axes(t, c), c.inverse()) == t);
            CHECK(AxisPermutation::compose(c, c.inverse()) == AxisPermutation::identity(4));
        }
    }

    TEST_CASE("rank mismatch is an argument error") {
        CHECK_THROWS_AS(permute_axes(ComplexTensor({2, 2}), AxisPermutation{1, 2, 3}), std::invalid_argument);
        CHECK_THROWS_AS(AxisPermutation({1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(AxisPermutation({0, 1}), std::invalid_argument);
    }
}

TEST_SUITE("mixed_norm") {
    TEST_CASE("worked values") {
        CHECK(mixed_norm(make({2, 2}, {1.0, 1.0, 1.0, 1.0}), ExponentVector{p1, kInf}) == 2.0);
        CHECK(mixed_norm(make({2}, {3.0, cplx(0.0, 4.0)}), ExponentVector{p2}) == doctest::Approx(5.0).epsilon(1e-15));
        for (std::size_t n : {1u, 2u, 3u, 5u}) {
            ComplexTensor ones({n, n, n, n});
            for (auto& z : ones.values()) z = 1.0;
            CHECK(mixed_norm(ones, ExponentVector{p1, kInf, p1, kInf}) == static_cast<double>(n * n));
        }
    }

    TEST_CASE("nesting order: axis 1 innermost") {
        // rows of a (2 x 3) table: l^1 inner over axis 1 then max over axis 2
        const ComplexTensor t = make({2, 3}, {1.0, 1.0, 5.0, 0.0, 0.0, 0.0});
        CHECK(mixed_norm(t, ExponentVector{p1, kInf}) == 5.0);
        CHECK(mixed_norm(t, ExponentVector{kInf, p1}) == 6.0);
    }

    TEST_CASE("zero tensor has norm zero, nonzero tensors do not") {
        CHECK(mixed_norm(ComplexTensor({3, 2, 2}), ExponentVector{p1, p2, kInf}) == 0.0);
        ComplexTensor t({3, 2, 2});
        t(2, 1, 0) = 1e-200;
        CHECK(mixed_norm(t, ExponentVector{Exponent(3.0), p2, kInf}) > 0.0);
    }

    TEST_CASE("construction rejects empty axes and non-finite entries") {
        CHECK_THROWS_AS(ComplexTensor({2, 0}), std::invalid_argument);
        CHECK_THROWS_AS(make({1}, {cplx(std::numeric_limits<double>::infinity(), 0.0)}), std::invalid_argument);
        CHECK_THROWS_AS(mixed_norm(ComplexTensor({2, 2}), ExponentVector{p1}), std::invalid_argument);
    }

    TEST_CASE("equal exponents: permutation invariance is bit-exact") {
        Rng rng(11);
        for (int i = 0; i < 40; ++i) {
            const std::size_t k = rng.index(1, 4);
            const ComplexTensor t = rng.tensor(random_shape(rng, k, 5));
            const AxisPermutation c = random_permutation(rng, k);
            for (const Exponent& p : {p1, p2, kInf, Exponent(3.5)}) {
                const ExponentVector e = ExponentVector::uniform(k, p);
                CHECK(mixed_norm(permute_axes(t, c), e) == mixed_norm(t, e));
            }
        }
    }

    TEST_CASE("monotone non-increasing in the exponents") {
        Rng rng(12);
        for (int i = 0; i < 100; ++i) {
            const ComplexTensor t = rng.tensor(random_shape(rng, 3, 4));
            const ExponentVector p = random_exponents(rng, 3);
            std::vector<Exponent> q;
            for (std::size_t j = 0; j < 3; ++j) {
                if (p[j].is_infinite() || rng.index(0, 2) == 0) q.push_back(kInf);
                else q.emplace_back(p[j].value() + rng.uniform(0.0, 3.0));
            }
            CHECK(mixed_norm(t, ExponentVector(q)) <= mixed_norm(t, p) * (1.0 + 1e-12));
        }
    }

    TEST_CASE("homogeneity and triangle inequality") {
        Rng rng(13);
        for (int i = 0; i < 100; ++i) {
            const auto shape = random_shape(rng, 4, 3);
            const ComplexTensor t = rng.tensor(shape);
            const ComplexTensor u = rng.tensor(shape);
            const ExponentVector p = random_exponents(rng, 4);
            const cplx alpha = 3.0 * rng.complex_normal();
            CHECK(rel_err(mixed_norm(alpha * t, p), std::abs(alpha) * mixed_norm(t, p)) < 1e-12);
            CHECK(mixed_norm(t + u, p) <= (mixed_norm(t, p) + mixed_norm(u, p)) * (1.0 + 1e-12));
        }
    }

    TEST_CASE("lp_norm matches a direct evaluation") {
        const std::vector<double> v{3.0, 4.0, 12.0};
        CHECK(lp_norm(v, p2) == doctest::Approx(13.0).epsilon(1e-15));
        CHECK(lp_norm(v, p1) == 19.0);
        CHECK(lp_norm(v, kInf) == 12.0);
        CHECK(lp_norm(v, Exponent(3.0)) == doctest::Approx(std::cbrt(27.0 + 64.0 + 1728.0)).epsilon(1e-14));
    }
}

TEST_SUITE("pairing") {
    TEST_CASE("worked values") {
        const ComplexTensor ones = make({2, 2}, {1.0, 1.0, 1.0, 1.0});
        CHECK(pairing(ones, ones) == cplx(4.0));
        Rng rng(4);
        CHECK(pairing(rng.tensor({3, 3}), ComplexTensor({3, 3})) == cplx(0.0));
        CHECK_THROWS_AS(pairing(ComplexTensor({2, 2}), ComplexTensor({4})), std::invalid_argument);
    }

    TEST_CASE("Hoelder inequality for the mixed norms") {
        Rng rng(5);
        const std::vector<ExponentVector> exps{ExponentVector{p1, kInf, p2, Exponent(4.0)},
                                               ExponentVector::uniform(4, p2),
                                               ExponentVector{kInf, p1, kInf, p1}};
        for (const auto& p : exps) {
            const ExponentVector q = dual_exponents(p);
            for (int i = 0; i < 100; ++i) {
                const auto shape = random_shape(rng, 4, 4);
                const ComplexTensor t = rng.tensor(shape);
                const ComplexTensor u = rng.tensor(shape);
                CHECK(std::abs(pairing(t, u)) <= mixed_norm(t, p) * mixed_norm(u, q) * (1.0 + 1e-12));
            }
        }
    }
}

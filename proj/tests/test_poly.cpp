/*
 * Copyright 2026 The qalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qalg/errors.hpp"
#include "qalg/poly.hpp"
#include <algorithm>
#include <cmath>
#include <gtest/gtest.h>
#include <random>

using namespace qalg;

TEST(Poly, NormalizesTrailingZeros) {
    Poly p{1.0, 2.0, 0.0, 0.0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.coeffs().size(), 2u);
    EXPECT_TRUE(Poly({0.0, 0.0}).is_zero());
    EXPECT_EQ(Poly().degree(), -1);
}

TEST(Poly, Arithmetic) {
    Poly a{-1.0, 0.0, 1.0};
    Poly b{1.0, 1.0};
    EXPECT_EQ(a * b, Poly({-1.0, -1.0, 1.0, 1.0}));
    EXPECT_EQ(a + b, Poly({0.0, 1.0, 1.0}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.derivative(), Poly({0.0, 2.0}));
}

TEST(PolyEval, Examples) {
    EXPECT_DOUBLE_EQ(poly_eval(Poly{-1.0, 0.0, 1.0}, 2.0), 3.0);
    // x (2-x)^4 (4-x) at x = 1; five reflected factors give scale -1
    RootList r;
    r.push(0.0);
    r.push(2.0, 4);
    r.push(4.0);
    EXPECT_DOUBLE_EQ(poly_eval(poly_from_roots(r, -1.0), 1.0), 3.0);
    EXPECT_EQ(poly_eval(Poly(), 3.0), 0.0);
}

TEST(PolyEval, CompensatedBeatsNaiveNearMultipleRoot) {
    // (x-1)^7 expanded; naive Horner loses most digits near x = 1.
    RootList r;
    r.push(1.0, 7);
    const Poly p  = poly_from_roots(r, 1.0);
    const double x = 1.0 + 1.0 / 1024.0;
    const double exact = std::pow(1.0 / 1024.0, 7);
    EXPECT_NEAR(poly_eval(p, x), exact, 1e-3 * exact);
}

TEST(PolyEval, ExactRationalMode) {
    RationalPoly p{Rational(-1), Rational(0), Rational(1)};
    EXPECT_EQ(poly_eval(p, Rational(1, 3)), Rational(-8, 9));
    const auto q = poly_from_roots({Rational(0), Rational(2), Rational(3, 2)}, Rational(1));
    EXPECT_EQ(poly_eval(q, Rational(3, 2)), Rational(0));
    EXPECT_EQ(poly_eval(q, Rational(1)), Rational(1, 2));
}

TEST(PolyFromRoots, Examples) {
    EXPECT_EQ(poly_from_roots(RootList::from_values({0.0, 2.0}), 1.0), Poly({0.0, -2.0, 1.0}));
    const Poly p = poly_from_roots(RootList::from_values({0.0, 2.0, 3.0, 3.0, 3.0, 5.0}), 1.0);
    EXPECT_EQ(p.degree(), 6);
    for(double r : {0.0, 2.0, 3.0, 5.0}) EXPECT_EQ(poly_eval(p, r), 0.0);
    // scale * prod (x - r): the sign follows the number of roots above x
    EXPECT_DOUBLE_EQ(
      poly_eval(poly_from_roots(RootList::from_values({0, 2, 2, 2, 2, 4}), 1.0), 1.0), -3.0);
}

TEST(PolyFromRoots, ZeroScaleThrows) {
    try {
        poly_from_roots(RootList::from_values({1.0}), 0.0);
        FAIL();
    } catch(const DomainError& e) { EXPECT_STREQ(e.what(), "degenerate scale"); }
    EXPECT_THROW(poly_from_roots({Rational(1)}, Rational(0)), DomainError);
}

TEST(RootsReal, Examples) {
    auto r = roots_real(Poly{0.0, -2.0, 1.0}, -1.0, 3.0, 1e-10);
    ASSERT_EQ(r.roots.size(), 2u);
    EXPECT_NEAR(r.roots[0], 0.0, 1e-10);
    EXPECT_NEAR(r.roots[1], 2.0, 1e-10);

    r = roots_real(Poly{1.0, -2.0, 1.0}, 0.0, 2.0, 1e-10);
    ASSERT_EQ(r.roots.size(), 1u);
    EXPECT_NEAR(r.roots[0], 1.0, 1e-10);
    EXPECT_EQ(r.multiplicity[0], 2);

    // x (3-x)(4-x)(5-x)(6-x)(9-x)
    const Poly m = poly_from_roots(RootList::from_values({0, 3, 4, 5, 6, 9}), -1.0);
    r = roots_real(m, -1.0, 10.0, 1e-10);
    const std::vector<double> want{0, 3, 4, 5, 6, 9};
    ASSERT_EQ(r.expanded().size(), want.size());
    for(std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(r.expanded()[i], want[i], 1e-10);
}

TEST(RootsReal, MultiplicitiesAndEmpty) {
    RootList in;
    in.push(-1.0, 3);
    in.push(2.0, 2);
    in.push(4.0);
    auto r = roots_real(poly_from_roots(in, 3.0), -5.0, 5.0, 1e-10);
    ASSERT_EQ(r.roots.size(), 3u);
    EXPECT_EQ(r.multiplicity, (std::vector<int>{3, 2, 1}));
    EXPECT_LE(r.total(), 6);

    EXPECT_TRUE(roots_real(Poly{1.0, 0.0, 1.0}, -10.0, 10.0, 1e-10).roots.empty());
    EXPECT_TRUE(roots_real(Poly{5.0}, -1.0, 1.0, 1e-10).roots.empty());
    EXPECT_TRUE(roots_real(Poly{0.0, 1.0}, 1.0, 0.0, 1e-10).roots.empty());
    // Only roots inside the interval.
    r = roots_real(poly_from_roots(RootList::from_values({-3, 0.5, 7}), 1.0), 0.0, 1.0, 1e-10);
    ASSERT_EQ(r.roots.size(), 1u);
    EXPECT_NEAR(r.roots[0], 0.5, 1e-10);
}

TEST(PolyProperties, VanishesAtRandomRoots) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> root(-10.0, 10.0), scale(0.01, 100.0);
    std::uniform_int_distribution<int> size(1, 8);
    for(int c = 0; c < 300; ++c) {
        std::vector<double> rs(size(rng));
        for(auto& x : rs) x = root(rng);
        const double s = scale(rng);
        const Poly p   = poly_from_roots(RootList::from_values(rs), s);
        for(double x : rs)
            EXPECT_LE(std::fabs(poly_eval(p, x)), 1e-12 * poly_eval_bound(p, x)) << "case " << c;
    }
}

TEST(PolyProperties, RecoversSeparatedRoots) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> root(-10.0, 10.0), scale(0.01, 100.0);
    std::uniform_int_distribution<int> size(1, 8);
    const double tol = 1e-10;
    int checked = 0;
    while(checked < 300) {
        std::vector<double> rs(size(rng));
        for(auto& x : rs) x = root(rng);
        std::sort(rs.begin(), rs.end());
        bool separated = true;
        for(std::size_t i = 1; i < rs.size(); ++i)
            if(rs[i] - rs[i - 1] < 0.05) separated = false;
        if(!separated) continue;
        ++checked;
        const Poly p  = poly_from_roots(RootList::from_values(rs), scale(rng));
        const double lo = -6.0, hi = 6.0;
        std::vector<double> inside;
        for(double x : rs)
            if(x >= lo && x <= hi) inside.push_back(x);
        const auto got = roots_real(p, lo, hi, tol).expanded();
        ASSERT_EQ(got.size(), inside.size()) << "case " << checked;
        // tol plus the perturbation allowed by rounding in the coefficients
        const Poly dp = p.derivative();
        for(std::size_t i = 0; i < got.size(); ++i) {
            const double cond = poly_eval_bound(p, inside[i]) / std::fabs(poly_eval(dp, inside[i]));
            EXPECT_NEAR(got[i], inside[i], tol + 64.0 * 0x1p-52 * cond);
        }
    }
}

TEST(PolyProperties, EvaluationIsLinear) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> c(-5.0, 5.0), xs(-3.0, 3.0);
    for(int k = 0; k < 300; ++k) {
        std::vector<double> a(7), b(5);
        for(auto& v : a) v = c(rng);
        for(auto& v : b) v = c(rng);
        const Poly p(a), q(b);
        const double x   = xs(rng);
        const double lhs = poly_eval(p + q, x);
        const double rhs = poly_eval(p, x) + poly_eval(q, x);
        EXPECT_NEAR(lhs, rhs, 1e-13 * (poly_eval_bound(p, x) + poly_eval_bound(q, x)));
    }
}

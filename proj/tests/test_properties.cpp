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

#include "qalg/report.hpp"
#include "qalg/repfinder.hpp"
#include <cmath>
#include <gtest/gtest.h>
#include <random>

using namespace qalg;

namespace {

constexpr int cases = 200;

CentralCharges micz(double m, double s, double c1, double c2) {
    return {{"m", m}, {"s", s}, {"c1", c1}, {"c2", c2}};
}
CentralCharges osc(double m, double s, double c1, double c2, double w) {
    return {{"m", m}, {"s", s}, {"c1", c1}, {"c2", c2}, {"omega", w}};
}
CentralCharges s3(double m, double mu, double al, double R) {
    return {{"m", m}, {"mu", mu}, {"alpha", al}, {"R", R}};
}

struct Draw {
    SystemId id;
    CentralCharges c;
    int p;
};

Draw draw(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::uniform_int_distribution<int> h(-4, 4), pick(0, 2), pp(0, 6);
    switch(pick(rng)) {
        case 0: return {SystemId::micz3d, micz(h(rng) / 2.0, h(rng) / 2.0, u(rng), u(rng)), pp(rng)};
        case 1:
            return {SystemId::osc4d, osc(h(rng) / 2.0, h(rng) / 2.0, u(rng), u(rng), 0.2 + u(rng)),
                    pp(rng)};
        default: return {SystemId::miczs3, s3(h(rng) / 2.0, h(rng) / 2.0, 0.2 + u(rng), 0.5 + u(rng)), pp(rng)};
    }
}

} // namespace

TEST(Properties, RescalingInvariance) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> lam(1e-3, 1e3);
    for(int k = 0; k < cases; ++k) {
        const auto d = draw(rng);
        FindOptions scaled;
        scaled.phi_scale = lam(rng);
        const auto a = accepted_representations(d.id, d.c, d.p);
        const auto b = accepted_representations(d.id, d.c, d.p, scaled);
        ASSERT_EQ(a.size(), b.size()) << k;
        for(std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].E, b[i].E);
            EXPECT_EQ(a[i].u, b[i].u);
            for(std::size_t x = 0; x < a[i].phi_values.size(); ++x)
                EXPECT_NEAR(b[i].phi_values[x], scaled.phi_scale * a[i].phi_values[x],
                            1e-12 * std::fabs(scaled.phi_scale * a[i].phi_values[x]) + 1e-300);
        }
    }
}

TEST(Properties, ShiftCovariance) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> t(-3.0, 3.0);
    for(int k = 0; k < cases; ++k) {
        const auto d    = draw(rng);
        const auto reps = accepted_representations(d.id, d.c, d.p);
        for(const auto& r : reps) {
            const double s   = t(rng);
            const auto fam   = root_family(d.id, d.c);
            const Poly moved = fam.phi_poly(r.E, r.u + s);
            for(int x = 0; x <= r.p + 1; ++x) {
                const double v = poly_eval(moved, x - s);
                EXPECT_NEAR(v, r.phi_values[x], 1e-9 * (std::fabs(r.phi_values[x]) +
                                                      poly_eval_bound(moved, x - s)));
            }
        }
    }
}

TEST(Properties, IndexPairSymmetry) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::uniform_int_distribution<int> h(-4, 4), pp(0, 6);
    for(int k = 0; k < cases; ++k) {
        const double m = h(rng) / 2.0, s = h(rng) / 2.0, c1 = u(rng), c2 = u(rng);
        const int p    = pp(rng);
        const bool osc_case = k % 2;
        const SystemId id   = osc_case ? SystemId::osc4d : SystemId::micz3d;
        const auto a = osc_case ? osc(m, s, c1, c2, 1.1) : micz(m, s, c1, c2);
        const auto b = osc_case ? osc(m, -s, c2, c1, 1.1) : micz(m, -s, c2, c1);
        const auto ra = accepted_representations(id, a, p);
        const auto rb = accepted_representations(id, b, p);
        ASSERT_EQ(ra.size(), rb.size());
        for(std::size_t i = 0; i < ra.size(); ++i)
            EXPECT_NEAR(ra[i].E, rb[i].E, 1e-12 * (1 + std::fabs(ra[i].E)));
    }
}

TEST(Properties, HydrogenMonotoneInP) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::uniform_int_distribution<int> h(-4, 4);
    for(int k = 0; k < cases; ++k) {
        const auto c = micz(h(rng) / 2.0, h(rng) / 2.0, u(rng), u(rng));
        const auto t = spectrum_table(SystemId::micz3d, c, 5);
        ASSERT_TRUE(t.missing.empty());
        std::vector<double> byp(6, NAN);
        for(const auto& r : t.rows) byp[r.rep.p] = r.rep.E;
        for(int p = 1; p <= 5; ++p) EXPECT_GT(byp[p], byp[p - 1]);
    }
}

TEST(Properties, JsonDeterminism) {
    std::mt19937_64 rng(55);
    for(int k = 0; k < cases; ++k) {
        const auto d = draw(rng);
        RunConfig cfg;
        cfg.system     = d.id;
        cfg.parameters = d.c;
        cfg.p_max      = d.p;
        EXPECT_EQ(cmd_spectrum(cfg).text, cmd_spectrum(cfg).text);
    }
}

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

#include "qalg/poly.hpp"
#include "qalg/errors.hpp"
#include <algorithm>
#include <cmath>
#include <limits>

namespace qalg {
namespace {

// a + b = s + e exactly.
inline void two_sum(double a, double b, double& s, double& e) {
    s        = a + b;
    double z = s - a;
    e        = (a - (s - z)) + (b - z);
}

bool near_zero(const Poly& p, double x, double tol) {
    return std::fabs(poly_eval(p, x)) <= 10.0 * tol * poly_eval_bound(p, x);
}

double polish(const Poly& p, const Poly& dp, double a, double b, double fa) {
    double x0 = a, x1 = b;
    bool neg0 = fa < 0;
    for(int it = 0; it < 400; ++it) {
        double xm = 0.5 * (x0 + x1);
        if(xm <= x0 || xm >= x1) break;
        double fm = poly_eval(p, xm);
        if(fm == 0.0) return xm;
        if((fm < 0) == neg0)
            x0 = xm;
        else
            x1 = xm;
    }
    double x = 0.5 * (x0 + x1);
    for(int it = 0; it < 3; ++it) {
        double f = poly_eval(p, x), df = poly_eval(dp, x);
        if(f == 0.0 || df == 0.0) break;
        double xn = x - f / df;
        if(!(xn >= a && xn <= b)) break;
        if(std::fabs(poly_eval(p, xn)) >= std::fabs(f)) break;
        x = xn;
    }
    return x;
}

std::vector<double> distinct_roots(const Poly& p, double lo, double hi,
                                   double tol) {
    std::vector<double> out;
    if(p.degree() <= 0) return out;
    if(p.degree() == 1) {
        double r = -p[0] / p[1];
        if(r >= lo - tol && r <= hi + tol) out.push_back(std::clamp(r, lo, hi));
        return out;
    }
    const Poly dp = p.derivative();
    std::vector<double> pts{lo};
    for(double c : distinct_roots(dp, lo, hi, tol))
        if(c > lo && c < hi) pts.push_back(c);
    pts.push_back(hi);

    for(double x : pts)
        if(near_zero(p, x, tol)) out.push_back(x);
    for(std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        if(near_zero(p, a, tol) || near_zero(p, b, tol)) continue;
        double fa = poly_eval(p, a), fb = poly_eval(p, b);
        if((fa < 0) != (fb < 0)) out.push_back(polish(p, dp, a, b, fa));
    }
    std::sort(out.begin(), out.end());
    std::vector<double> merged;
    for(double r : out) {
        if(!merged.empty() && r - merged.back() <= 10.0 * tol) {
            if(std::fabs(poly_eval(p, r)) < std::fabs(poly_eval(p, merged.back())))
                merged.back() = r;
            continue;
        }
        merged.push_back(r);
    }
    return merged;
}

} // namespace

RootList RootList::from_values(std::vector<double> rs) {
    std::sort(rs.begin(), rs.end());
    RootList r;
    for(double x : rs) r.push(x);
    return r;
}

void RootList::push(double r, int mult) {
    auto it = std::lower_bound(roots.begin(), roots.end(), r);
    auto k  = it - roots.begin();
    if(it != roots.end() && *it == r) {
        multiplicity[k] += mult;
        return;
    }
    roots.insert(it, r);
    multiplicity.insert(multiplicity.begin() + k, mult);
}

int RootList::total() const noexcept {
    int t = 0;
    for(int m : multiplicity) t += m;
    return t;
}

std::vector<double> RootList::expanded() const {
    std::vector<double> out;
    for(std::size_t i = 0; i < roots.size(); ++i)
        out.insert(out.end(), multiplicity[i], roots[i]);
    return out;
}

double poly_eval(const Poly& p, double x) {
    const auto& c = p.coeffs();
    if(c.empty()) return 0.0;
    double s = c.back(), err = 0.0;
    for(std::size_t k = c.size() - 1; k-- > 0;) {
        double prod = s * x;
        double pe   = std::fma(s, x, -prod);
        double se;
        two_sum(prod, c[k], s, se);
        err = std::fma(err, x, pe + se);
    }
    return s + err;
}

Rational poly_eval(const RationalPoly& p, const Rational& x) {
    const auto& c = p.coeffs();
    Rational s(0);
    for(std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
    return s;
}

double poly_eval_bound(const Poly& p, double x) {
    const auto& c = p.coeffs();
    double ax = std::fabs(x), s = 0.0;
    for(std::size_t k = c.size(); k-- > 0;) s = s * ax + std::fabs(c[k]);
    return s;
}

Poly poly_from_roots(const RootList& r, double scale) {
    if(scale == 0.0) throw DomainError("degenerate scale");
    Poly out = Poly::constant(scale);
    for(double x : r.expanded()) out = out * Poly::linear_factor(x);
    return out;
}

RationalPoly poly_from_roots(const std::vector<Rational>& roots,
                             const Rational& scale) {
    if(scale == 0) throw DomainError("degenerate scale");
    RationalPoly out = RationalPoly::constant(scale);
    for(const auto& x : roots) out = out * RationalPoly::linear_factor(x);
    return out;
}

RootList roots_real(const Poly& p, double lo, double hi, double tol) {
    RootList out;
    if(!(lo < hi) || !(tol > 0) || p.degree() <= 0) return out;
    int budget = p.degree();
    for(double r : distinct_roots(p, lo, hi, tol)) {
        int mult = 1;
        Poly d   = p.derivative();
        while(mult < budget && d.degree() >= 0 && near_zero(d, r, tol)) {
            ++mult;
            d = d.derivative();
        }
        mult = std::min(mult, budget);
        if(mult <= 0) break;
        budget -= mult;
        out.roots.push_back(r);
        out.multiplicity.push_back(mult);
    }
    return out;
}

} // namespace qalg

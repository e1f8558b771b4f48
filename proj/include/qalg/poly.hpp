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

#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

/** @file poly.hpp
 *  @brief Dense univariate polynomials and real root isolation.
 */

namespace qalg {

using Rational = boost::multiprecision::cpp_rational;

/** @brief Polynomial with coefficients stored constant term first.
 *
 *  Trailing zero coefficients are stripped on construction, so the zero
 *  polynomial has an empty coefficient list and degree -1.
 */
template<typename T>
class BasicPoly {
public:
    using value_type = T;

    BasicPoly() = default;
    explicit BasicPoly(std::vector<T> coeffs) : m_c_(std::move(coeffs)) {
        normalize_();
    }
    BasicPoly(std::initializer_list<T> coeffs) : m_c_(coeffs) { normalize_(); }

    static BasicPoly constant(T c) { return BasicPoly(std::vector<T>{c}); }
    /// The polynomial x - r.
    static BasicPoly linear_factor(T r) {
        return BasicPoly(std::vector<T>{T(-r), T(1)});
    }

    int degree() const noexcept { return static_cast<int>(m_c_.size()) - 1; }
    bool is_zero() const noexcept { return m_c_.empty(); }
    const std::vector<T>& coeffs() const noexcept { return m_c_; }
    T operator[](std::size_t i) const { return i < m_c_.size() ? m_c_[i] : T(0); }
    T leading() const { return m_c_.empty() ? T(0) : m_c_.back(); }

    BasicPoly derivative() const {
        std::vector<T> d;
        for(std::size_t i = 1; i < m_c_.size(); ++i)
            d.push_back(m_c_[i] * T(static_cast<int>(i)));
        return BasicPoly(std::move(d));
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        if(o.m_c_.size() > m_c_.size()) m_c_.resize(o.m_c_.size(), T(0));
        for(std::size_t i = 0; i < o.m_c_.size(); ++i) m_c_[i] += o.m_c_[i];
        normalize_();
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) { return *this += (-o); }
    BasicPoly& operator*=(const T& s) {
        for(auto& c : m_c_) c *= s;
        normalize_();
        return *this;
    }
    BasicPoly operator-() const {
        BasicPoly r(*this);
        for(auto& c : r.m_c_) c = -c;
        return r;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const T& s) { return a *= s; }
    friend BasicPoly operator*(const T& s, BasicPoly a) { return a *= s; }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if(a.is_zero() || b.is_zero()) return BasicPoly();
        std::vector<T> r(a.m_c_.size() + b.m_c_.size() - 1, T(0));
        for(std::size_t i = 0; i < a.m_c_.size(); ++i)
            for(std::size_t j = 0; j < b.m_c_.size(); ++j)
                r[i + j] += a.m_c_[i] * b.m_c_[j];
        return BasicPoly(std::move(r));
    }
    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.m_c_ == b.m_c_;
    }

private:
    void normalize_() {
        while(!m_c_.empty() && m_c_.back() == T(0)) m_c_.pop_back();
    }

    std::vector<T> m_c_;
};

using Poly         = BasicPoly<double>;
using RationalPoly = BasicPoly<Rational>;

/// p^n for n >= 0.
template<typename T>
BasicPoly<T> pow(const BasicPoly<T>& p, unsigned n) {
    BasicPoly<T> r = BasicPoly<T>::constant(T(1));
    for(unsigned i = 0; i < n; ++i) r = r * p;
    return r;
}

/** @brief Real roots with multiplicities, sorted ascending. */
struct RootList {
    std::vector<double> roots;
    std::vector<int> multiplicity;

    RootList() = default;
    /// Each entry of @p rs with multiplicity one; duplicates are merged.
    static RootList from_values(std::vector<double> rs);

    void push(double r, int mult = 1);
    int total() const noexcept;
    /// Roots repeated according to multiplicity.
    std::vector<double> expanded() const;
};

/// Compensated Horner evaluation (error-free fma transformations).
double poly_eval(const Poly& p, double x);

/// Exact evaluation.
Rational poly_eval(const RationalPoly& p, const Rational& x);

/// Sum of |c_i| |x|^i, the scale against which evaluation error is judged.
double poly_eval_bound(const Poly& p, double x);

/** @brief scale * prod (x - r_i)^{m_i}.
 *
 *  @throw DomainError "degenerate scale" when @p scale is zero.
 */
Poly poly_from_roots(const RootList& r, double scale);

/// Exact counterpart of poly_from_roots.
RationalPoly poly_from_roots(const std::vector<Rational>& roots,
                             const Rational& scale);

/** @brief All real roots of @p p inside [lo, hi].
 *
 *  The interval is split at critical points (found recursively from the
 *  derivative) into monotone pieces, each sign change is bracketed and
 *  bisected, then polished with Newton steps. Critical points where the
 *  polynomial vanishes are reported as roots of even or odd multiplicity
 *  according to how many derivatives vanish there within 10*tol.
 *
 *  The zero polynomial and constants have no isolated roots.
 */
RootList roots_real(const Poly& p, double lo, double hi, double tol = 1e-10);

} // namespace qalg

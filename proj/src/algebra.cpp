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

#include "qalg/algebra.hpp"
#include "qalg/errors.hpp"
#include <cmath>

namespace qalg {

double CentralCharges::get(std::string_view symbol) const {
    auto it = m_values_.find(symbol);
    if(it == m_values_.end())
        throw ConfigError("missing central charge: " + std::string(symbol));
    return it->second;
}

bool CentralCharges::has(std::string_view symbol) const {
    return m_values_.find(symbol) != m_values_.end();
}

void CentralCharges::set(const std::string& symbol, double value) {
    m_values_[symbol] = value;
}

CentralCharges CentralCharges::with(const std::string& symbol,
                                    double value) const {
    CentralCharges c(*this);
    c.set(symbol, value);
    return c;
}

std::string_view to_string(Reading r) { return r == Reading::A ? "A" : "B"; }

std::string_view to_string(CasimirProvenance p) {
    switch(p) {
        case CasimirProvenance::closed_form: return "closed-form";
        case CasimirProvenance::matrix_oracle: return "matrix-oracle";
        case CasimirProvenance::phi_reconciled: return "phi-reconciled";
    }
    return "unknown";
}

Reading parse_reading(std::string_view s) {
    if(s == "A" || s == "a") return Reading::A;
    if(s == "B" || s == "b") return Reading::B;
    throw ConfigError("unknown reading: " + std::string(s));
}

Poly build_phi_generic(const StructureConstants& sc, double K, double u,
                       Reading reading) {
    const double g = sc.gamma;
    if(g == 0.0)
        throw DomainError(
          "wrong branch: the generic structure function requires gamma != 0");

    // Factors in y = x + u.
    const Poly t  = Poly{2.0 * u, 2.0}; // 2y
    const Poly m1 = t - Poly{1.0};      // 2y - 1
    const Poly m3 = t - Poly{3.0};      // 2y - 3
    const Poly p1 = t + Poly{1.0};      // 2y + 1
    const Poly y  = Poly{u, 1.0};
    const Poly q  = Poly{-1.0} - 12.0 * y + 12.0 * y * y;

    const double g2 = g * g, g3 = g2 * g, g4 = g2 * g2, g6 = g4 * g2;
    const double g8 = g4 * g4;

    Poly phi = (-3072.0 * g6 * K) * pow(m1, 2);
    phi += (-48.0 * g6 * (-sc.d * g2)) * (m3 * pow(m1, 4) * p1);
    phi += (g8 * 4.0 * sc.a * g) * (pow(m3, 2) * pow(m1, 4) * pow(p1, 2));
    const double zz = 4.0 * g2 * sc.zeta;
    phi += Poly::constant(768.0 * zz * zz);
    if(reading == Reading::A) {
        phi += (32.0 * g4) * pow(m1, 2);
        phi += (8.0 * g3 * sc.z) * q;
    } else {
        phi += (32.0 * g4 * 8.0 * g3 * sc.z) * (pow(m1, 2) * q);
    }
    phi += (-256.0 * g2 * (-4.0 * std::pow(g, 5) * sc.z)) * pow(m1, 2);
    return phi;
}

Eigen::MatrixXd casimir_operator(const Eigen::MatrixXd& A,
                                 const Eigen::MatrixXd& B,
                                 const Eigen::MatrixXd& C,
                                 const StructureConstants& sc) {
    auto anti = [](const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
        Eigen::MatrixXd r = X * Y + Y * X;
        return r;
    };
    const Eigen::MatrixXd A2 = A * A;
    const Eigen::MatrixXd B2 = B * B;
    const double be = sc.beta, g = sc.gamma, de = sc.delta, ep = sc.epsilon;
    Eigen::MatrixXd K = C * C;
    K -= be * anti(A2, B);
    K -= g * anti(A, B2);
    K += (be * g - de) * anti(A, B);
    K += (g * g - ep) * B2;
    K += (g * de - 2.0 * sc.zeta) * B;
    K += (2.0 * sc.a / 3.0) * (A2 * A);
    K += (sc.d + sc.a * g / 3.0 + be * be) * A2;
    K += (sc.a * ep / 3.0 + be * de + 2.0 * sc.z) * A;
    return K;
}

double max_abs(const Eigen::MatrixXd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double casimir_spread(const Eigen::MatrixXd& K) {
    const auto n = K.rows();
    if(n == 0) return 0.0;
    const double mean = K.diagonal().mean();
    double s = 0.0;
    for(Eigen::Index i = 0; i < n; ++i)
        for(Eigen::Index j = 0; j < n; ++j)
            s = std::max(s, std::fabs(K(i, j) - (i == j ? mean : 0.0)));
    return s;
}

CasimirValue casimir_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                            const Eigen::MatrixXd& C,
                            const StructureConstants& sc) {
    if(A.rows() != A.cols() || B.rows() != A.rows() || B.cols() != A.cols() ||
       C.rows() != A.rows() || C.cols() != A.cols())
        throw DomainError("Casimir evaluation needs square matrices of equal size");
    const Eigen::MatrixXd K = casimir_operator(A, B, C, sc);
    const double value      = K.rows() ? K.diagonal().mean() : 0.0;
    const double spread     = casimir_spread(K);
    if(!(spread <= 1e-8 * (1.0 + std::fabs(value))))
        throw ResidualError(
          "Casimir not central: realization or constants inconsistent", spread);
    return {value, CasimirProvenance::matrix_oracle};
}

} // namespace qalg

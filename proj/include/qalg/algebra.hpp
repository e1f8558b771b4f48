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
#include "qalg/poly.hpp"
#include <Eigen/Dense>
#include <map>
#include <string>
#include <string_view>

/** @file algebra.hpp
 *  @brief Quadratic algebra data: structure constants, central charges,
 *         the Casimir element and the generic structure function.
 */

namespace qalg {

/** @brief Constants of the quadratic algebra
 *
 *  [A,B] = C
 *  [A,C] = beta A^2 + gamma {A,B} + delta A + epsilon B + zeta
 *  [B,C] = a A^2 - gamma B^2 - beta {A,B} + d A - delta B + z
 */
struct StructureConstants {
    double beta    = 0.0;
    double gamma   = 0.0;
    double delta   = 0.0;
    double epsilon = 0.0;
    double zeta    = 0.0;
    double a       = 0.0;
    double d       = 0.0;
    double z       = 0.0;
};

/** @brief Fixed eigenvalues of the energy and the commuting integrals.
 *
 *  Symbols: E, m, s, c1, c2, omega, mu, alpha, R.
 */
class CentralCharges {
public:
    using map_type = std::map<std::string, double, std::less<>>;

    CentralCharges() = default;
    CentralCharges(std::initializer_list<std::pair<const std::string, double>> v) :
      m_values_(v) {}

    /// @throw ConfigError "missing central charge: <symbol>"
    double get(std::string_view symbol) const;
    bool has(std::string_view symbol) const;
    void set(const std::string& symbol, double value);
    CentralCharges with(const std::string& symbol, double value) const;
    const map_type& values() const noexcept {
        return m_values_;
    }

    friend bool operator==(const CentralCharges&, const CentralCharges&) = default;

private:
    map_type m_values_;
};

/// Term-joining interpretations of the printed generic structure function.
enum class Reading { A, B };

enum class CasimirProvenance { closed_form, matrix_oracle, phi_reconciled };

struct CasimirValue {
    double value = 0.0;
    CasimirProvenance provenance = CasimirProvenance::closed_form;
};

std::string_view to_string(Reading r);
std::string_view to_string(CasimirProvenance p);
/// @throw ConfigError on anything but "A" or "B".
Reading parse_reading(std::string_view s);

/** @brief Generic structure function Phi(x) for beta = delta = epsilon = 0.
 *
 *  Assembled term by term from the published expression in the variable
 *  y = x + u. Reading::A treats "32 gamma^4 (2y-1)^2" and
 *  "(12y^2 - 12y - 1)(8 gamma^3 z)" as two summands, Reading::B as one
 *  product.
 *
 *  @throw DomainError when gamma is zero.
 */
Poly build_phi_generic(const StructureConstants& sc, double K, double u,
                       Reading reading);

/** @brief Casimir element evaluated on matrices.
 *
 *  K = C^2 - beta{A^2,B} - gamma{A,B^2} + (beta gamma - delta){A,B}
 *      + (gamma^2 - epsilon)B^2 + (gamma delta - 2 zeta)B + (2a/3)A^3
 *      + (d + a gamma/3 + beta^2)A^2 + (a epsilon/3 + beta delta + 2z)A
 */
Eigen::MatrixXd casimir_operator(const Eigen::MatrixXd& A,
                                 const Eigen::MatrixXd& B,
                                 const Eigen::MatrixXd& C,
                                 const StructureConstants& sc);

/// Largest deviation of @p K from (mean diagonal) * identity.
double casimir_spread(const Eigen::MatrixXd& K);

/** @brief Scalar value of the Casimir on a realization.
 *
 *  @throw ResidualError "Casimir not central: realization or constants
 *         inconsistent" with the spread as payload when the diagonal spread
 *         or an off-diagonal entry exceeds 1e-8 (1 + |K|).
 */
CasimirValue casimir_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                            const Eigen::MatrixXd& C,
                            const StructureConstants& sc);

/// Max absolute entry.
double max_abs(const Eigen::MatrixXd& m);

} // namespace qalg

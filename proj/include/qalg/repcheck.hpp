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
#include "qalg/algebra.hpp"
#include "qalg/errors.hpp"
#include "qalg/repfinder.hpp"
#include "qalg/systems.hpp"
#include <Eigen/Dense>
#include <optional>

/** @file repcheck.hpp
 *  @brief Explicit matrix realizations used as an independent check of
 *         solved representations.
 */

namespace qalg {

struct LadderMatrices {
    Eigen::MatrixXd N;
    Eigen::MatrixXd b;
    Eigen::MatrixXd bdag;
};

struct RealizationMatrices {
    int dim = 0;
    Eigen::MatrixXd N;
    Eigen::MatrixXd b;
    Eigen::MatrixXd bdag;
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd C;
};

/** @brief N = diag(0..p), bdag(k, k-1) = sqrt(Phi(k)), b = bdag^T.
 *
 *  @throw DomainError "non-unitary: negative structure function"
 */
LadderMatrices build_ladder(const Representation& rep);

/** @brief Largest violation of the deformed oscillator relations,
 *         relative to max |Phi(k)|.
 */
double ladder_residual(const LadderMatrices& l, const std::vector<double>& phi_values);

/** @brief A = diag((gamma/2)((k+u)^2 - 1/4)), B symmetric tridiagonal with
 *         diagonal -zeta/(2 gamma A(k)) and off-diagonal entries fixed by
 *         Phi, C = AB - BA.
 *
 *  @throw DomainError "singular diagonal fit: resonant shift u"
 *  @throw ResidualError "ansatz failure" when the assembled matrices miss
 *         the algebra relations by more than @p fit_tol.
 */
RealizationMatrices fit_realization(const Representation& rep,
                                    ConstantsVariant variant = ConstantsVariant::consistent,
                                    double fit_tol = 1e-8);

struct AlgebraResidual {
    double ab = 0.0;
    double ac = 0.0;
    double bc = 0.0;

    double max() const noexcept { return std::max(ab, std::max(ac, bc)); }
};

/// Relation residuals, each normalized by its largest operand.
AlgebraResidual verify_algebra(const RealizationMatrices& mats,
                               const StructureConstants& sc);

AlgebraResidual verify_algebra(SystemId id, const RealizationMatrices& mats,
                               const CentralCharges& charges,
                               ConstantsVariant variant = ConstantsVariant::consistent);

struct CasimirReport {
    double spread       = 0.0;
    double matrix_value = 0.0;
    double closed_value = 0.0;
    double relative_deviation = 0.0;
    bool central = false;
    std::optional<DiscrepancyRecord> discrepancy;
};

CasimirReport verify_casimir(const RealizationMatrices& mats,
                             const StructureConstants& sc, const CasimirValue& closed,
                             const std::string& tag = "casimir.closed_form");

} // namespace qalg

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
#include "qalg/systems.hpp"
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

/** @file repfinder.hpp
 *  @brief Finite-dimensional unitary modules from the boundary conditions
 *         Phi(0) = Phi(p+1) = 0, and comparisons with published formulas.
 */

namespace qalg {

struct RepFlags {
    /// Phi(k) > 0 for k = 1..p.
    bool positivity_ok     = false;
    /// Phi > 0 on the open interval (0, p+1); informational.
    bool continuum_ok      = false;
    /// No energy-independent root lies inside the module.
    bool kinematic_ok      = false;
    bool matches_printed_E = false;
    bool matches_printed_u = false;
};

struct Representation {
    SystemId system = SystemId::micz3d;
    /// Includes E.
    CentralCharges charges;
    int p    = 0;
    double u = 0.0;
    double E = 0.0;
    /// Phi(0), ..., Phi(p+1).
    std::vector<double> phi_values;
    std::pair<int, int> pairing{-1, -1};
    std::pair<std::string, std::string> pairing_labels;
    RepFlags flags;
    /// Positive factor applied to the structure function.
    double phi_scale = 1.0;
    double tol       = 1e-10;
    IndexReading index_reading = IndexReading::square_root;

    bool accepted() const noexcept {
        return flags.positivity_ok && flags.kinematic_ok;
    }
    /// Structure function as a polynomial in x, including phi_scale.
    Poly phi_poly() const;
};

struct DiscrepancyRecord {
    std::string tag;
    std::string quantity;
    double printed  = 0.0;
    double derived  = 0.0;
    double relative_deviation = 0.0;
    std::string note;
};

struct FindOptions {
    double tol       = 1e-10;
    double phi_scale = 1.0;
    IndexReading index_reading = IndexReading::square_root;
};

/** @brief Every solution of the boundary conditions for dimension p+1.
 *
 *  Candidates failing positivity are returned with their flags cleared;
 *  use Representation::accepted() to filter.
 *
 *  @param notes receives one line per skipped pairing, if non-null.
 */
std::vector<Representation> find_representations(
  SystemId id, const CentralCharges& charges, int p, const FindOptions& opt = {},
  std::vector<std::string>* notes = nullptr);

/// Only the accepted ones, sorted by energy.
std::vector<Representation> accepted_representations(
  SystemId id, const CentralCharges& charges, int p, const FindOptions& opt = {});

struct SpectrumRow {
    Representation rep;
    std::vector<DiscrepancyRecord> discrepancies;
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows;
    /// Values of p in 0..p_max without an accepted representation.
    std::vector<int> missing;
};

/// Rows for p = 0..p_max, sorted by (E, p).
SpectrumTable spectrum_table(SystemId id, const CentralCharges& charges, int p_max,
                             const FindOptions& opt = {});

/** @brief Coulomb-oscillator identity at spectrum level.
 *
 *  With the oscillator energy fixed at 4 and omega solved from
 *  4 = 2 omega (p+1+(m1+m2)/2), returns |E_coulomb + omega^2/8| where
 *  E_coulomb = -1/(2 (p+1+(m1+m2)/2)^2).
 */
double duality_check(int p, double m1, double m2);

/// Published spectrum checks; one record per mismatch.
std::vector<DiscrepancyRecord> compare_printed(const Representation& rep);

using ReconcileOutcome = std::variant<double, DiscrepancyRecord>;

/** @brief Ratio candidate / reference on 20 points of [0, p+1].
 *
 *  Returns the ratio when it is positive and constant to 1e-6 relative,
 *  otherwise a record tagged with @p tag.
 */
ReconcileOutcome reconcile_polys(const Poly& candidate, const Poly& reference,
                                 int p, const std::string& tag);

/** @brief Generic structure function against the published factored form.
 *
 *  The generic builder is evaluated at the constants, closed-form Casimir and
 *  shift of @p rep; the shift is mirrored when the factored form is written
 *  for the mirrored module.
 */
ReconcileOutcome reconcile_generic(const Representation& rep, Reading reading,
                                   ConstantsVariant variant = ConstantsVariant::consistent);

/** @brief The Casimir value fixed by a boundary condition of the generic
 *         builder (reading B).
 *
 *  Solves Phi(0) = 0 for K, or Phi(p+1) = 0 when the K coefficient at x = 0
 *  vanishes (u = 1/2).
 */
CasimirValue casimir_phi_reconciled(const StructureConstants& sc, double u, int p);

} // namespace qalg

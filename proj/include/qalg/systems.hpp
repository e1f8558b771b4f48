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
#include "qalg/poly.hpp"
#include <functional>
#include <string>
#include <string_view>
#include <vector>

/** @file systems.hpp
 *  @brief The three monopole systems: constants, Casimir values, structure
 *         function root families and the published closed forms.
 */

namespace qalg {

enum class SystemId { micz3d, osc4d, miczs3 };

std::string_view to_string(SystemId id);
/// @throw ConfigError "unknown system: <name>"
SystemId parse_system(std::string_view name);
/// Charge symbols other than E required by @p id.
const std::vector<std::string>& charge_symbols(SystemId id);

/** @brief Which set of structure constants to use.
 *
 *  consistent: the constants that agree with the structure function root
 *  families (the default). printed: the expressions exactly as published,
 *  kept for discrepancy reports.
 */
enum class ConstantsVariant { consistent, printed };

/** @brief How the oscillator indices are read.
 *
 *  square_root: m1 = sqrt((m+s)^2 + 2 c1). literal: m1 = (m+s)^2 + 2 c1.
 *  Only osc4d is affected.
 */
enum class IndexReading { square_root, literal };

std::string_view to_string(ConstantsVariant v);
ConstantsVariant parse_constants_variant(std::string_view s);

struct EffectiveIndices {
    double m1 = 0.0;
    double m2 = 0.0;
};

/** @brief Checks that @p charges carry every symbol of @p id (E optional)
 *         and that they are in range.
 *
 *  @throw ConfigError naming the missing or invalid symbol.
 */
void validate_charges(SystemId id, const CentralCharges& charges);

/** @brief The pair (m1, m2).
 *
 *  For miczs3 returns (|m|, |mu|).
 *
 *  @throw DomainError "coupling below critical strength: no self-adjoint
 *         radial problem" when a radicand is negative, or zero with a
 *         negative coupling.
 */
EffectiveIndices effective_indices(SystemId id, const CentralCharges& charges,
                                   IndexReading reading = IndexReading::square_root);

/// Requires E among the charges.
StructureConstants structure_constants(
  SystemId id, const CentralCharges& charges,
  ConstantsVariant variant = ConstantsVariant::consistent);

/** @brief Closed form of the Casimir.
 *
 *  @throw ConfigError "incomplete central charges" when a symbol is missing.
 */
CasimirValue casimir_closed(SystemId id, const CentralCharges& charges,
                            ConstantsVariant variant = ConstantsVariant::consistent);

enum class RootKind { energy_pair, index_family, curvature_pair };
std::string_view to_string(RootKind k);

/** @brief One root of Phi in the variable y = x + u.
 *
 *  The position is 1/2 + sign * sqrt(sigma(E)); it is NaN where sigma < 0.
 */
struct RootDescriptor {
    std::string label;
    RootKind kind;
    int sign;
    bool energy_dependent;
    std::function<double(double)> sigma;

    double position(double E) const;
};

/** @brief Phi(y) = lead(E) * prod_k ((y - 1/2)^2 - sigma_k(E)).
 *
 *  Descriptors come in (+, -) pairs at indices (2k, 2k+1).
 */
struct RootFamily {
    SystemId system;
    std::vector<RootDescriptor> roots;
    std::function<double(double)> lead;
    double e_lo;
    double e_hi;
    std::vector<double> branch_points;

    static std::size_t mirror(std::size_t i) noexcept { return i ^ 1u; }
    std::size_t n_pairs() const noexcept { return roots.size() / 2; }
    /// Phi at y = x + u, evaluated from the product form.
    double phi(double E, double y) const;
    /// Phi as a polynomial in x for shift @p u.
    Poly phi_poly(double E, double u) const;
};

RootFamily root_family(SystemId id, const CentralCharges& charges,
                       IndexReading reading = IndexReading::square_root);

struct RootValue {
    std::string label;
    RootKind kind;
    int sign;
    double value;
};

/** @brief Root positions at energy @p E.
 *
 *  @throw DomainError "bound-state branch requires E < 0" for micz3d.
 */
std::vector<RootValue> structure_roots(SystemId id, const CentralCharges& charges,
                                       double E);

/** @brief A published factored structure function.
 *
 *  polynomial() = orientation * scale * prod (x - r) * quadratic.
 *  mirrored means the form is written for the shift -u-p, i.e. it equals
 *  the canonical Phi evaluated at p+1-x.
 */
struct FactoredPhi {
    RootList roots;
    double scale       = 1.0;
    int orientation    = -1;
    bool mirrored      = false;
    Poly quadratic     = Poly{1.0};

    Poly polynomial() const;
};

FactoredPhi factored_phi(SystemId id, int p, const CentralCharges& charges,
                         IndexReading reading = IndexReading::square_root);

struct PrintedSpectrum {
    double E;
    double u;
};

/// The published (E, u) for module dimension p+1.
PrintedSpectrum printed_spectrum(SystemId id, int p, const CentralCharges& charges,
                                 IndexReading reading = IndexReading::square_root);

struct QuantumNumberMap {
    int n1 = 0;
    int n2 = 0;
    double m  = 0.0;
    double s  = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

struct PrincipalLevel {
    double n;
    double delta1;
    double delta2;
    double energy;
};

/// n = n1 + n2 + (|m-s| + |m+s|)/2 + 1 and E = -1/(2 (n + (d1+d2)/2)^2).
PrincipalLevel principal_quantum_number(const QuantumNumberMap& q);

} // namespace qalg

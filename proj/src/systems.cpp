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

#include "qalg/systems.hpp"
#include "qalg/errors.hpp"
#include <cmath>
#include <limits>

namespace qalg {
namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

double sq(double x) { return x * x; }

double index_radical(double base_sq, double coupling_term, double coupling,
                     IndexReading reading) {
    const double rad = base_sq + coupling_term;
    if(rad < 0.0 || (rad == 0.0 && coupling < 0.0))
        throw DomainError(
          "coupling below critical strength: no self-adjoint radial problem");
    return reading == IndexReading::square_root ? std::sqrt(rad) : rad;
}

void require_positive(const CentralCharges& c, const char* sym) {
    if(!(c.get(sym) > 0.0))
        throw ConfigError(std::string("invalid central charge: ") + sym +
                          " must be positive");
}

RootDescriptor make_root(std::string label, RootKind kind, int sign, bool edep,
                         std::function<double(double)> sigma) {
    return RootDescriptor{std::move(label), kind, sign, edep, std::move(sigma)};
}

void add_pair(std::vector<RootDescriptor>& out, const std::string& stem,
              RootKind kind, bool edep, const std::function<double(double)>& sg) {
    out.push_back(make_root(stem + "+", kind, +1, edep, sg));
    out.push_back(make_root(stem + "-", kind, -1, edep, sg));
}

} // namespace

std::string_view to_string(SystemId id) {
    switch(id) {
        case SystemId::micz3d: return "micz3d";
        case SystemId::osc4d: return "osc4d";
        case SystemId::miczs3: return "miczs3";
    }
    return "unknown";
}

SystemId parse_system(std::string_view name) {
    if(name == "micz3d") return SystemId::micz3d;
    if(name == "osc4d") return SystemId::osc4d;
    if(name == "miczs3") return SystemId::miczs3;
    throw ConfigError("unknown system: " + std::string(name));
}

const std::vector<std::string>& charge_symbols(SystemId id) {
    static const std::vector<std::string> micz{"m", "s", "c1", "c2"};
    static const std::vector<std::string> osc{"m", "s", "c1", "c2", "omega"};
    static const std::vector<std::string> s3{"m", "mu", "alpha", "R"};
    switch(id) {
        case SystemId::micz3d: return micz;
        case SystemId::osc4d: return osc;
        case SystemId::miczs3: return s3;
    }
    return micz;
}

std::string_view to_string(ConstantsVariant v) {
    return v == ConstantsVariant::consistent ? "consistent" : "printed";
}

ConstantsVariant parse_constants_variant(std::string_view s) {
    if(s == "consistent") return ConstantsVariant::consistent;
    if(s == "printed") return ConstantsVariant::printed;
    throw ConfigError("unknown constants variant: " + std::string(s));
}

std::string_view to_string(RootKind k) {
    switch(k) {
        case RootKind::energy_pair: return "energy-pair";
        case RootKind::index_family: return "index-family";
        case RootKind::curvature_pair: return "curvature-pair";
    }
    return "unknown";
}

void validate_charges(SystemId id, const CentralCharges& charges) {
    for(const auto& sym : charge_symbols(id)) {
        double v = charges.get(sym);
        if(!std::isfinite(v))
            throw ConfigError("invalid central charge: " + sym + " is not finite");
    }
    if(charges.has("E") && !std::isfinite(charges.get("E")))
        throw ConfigError("invalid central charge: E is not finite");
    if(id == SystemId::osc4d) require_positive(charges, "omega");
    if(id == SystemId::miczs3) require_positive(charges, "R");
}

EffectiveIndices effective_indices(SystemId id, const CentralCharges& c,
                                   IndexReading reading) {
    switch(id) {
        case SystemId::micz3d: {
            const double m = c.get("m"), s = c.get("s");
            const double c1 = c.get("c1"), c2 = c.get("c2");
            return {index_radical(sq(m - s), 4.0 * c1, c1, IndexReading::square_root),
                    index_radical(sq(m + s), 4.0 * c2, c2, IndexReading::square_root)};
        }
        case SystemId::osc4d: {
            const double m = c.get("m"), s = c.get("s");
            const double c1 = c.get("c1"), c2 = c.get("c2");
            return {index_radical(sq(m + s), 2.0 * c1, c1, reading),
                    index_radical(sq(m - s), 2.0 * c2, c2, reading)};
        }
        case SystemId::miczs3:
            return {std::fabs(c.get("m")), std::fabs(c.get("mu"))};
    }
    return {};
}

StructureConstants structure_constants(SystemId id, const CentralCharges& c,
                                       ConstantsVariant variant) {
    StructureConstants sc;
    sc.gamma   = 2.0;
    const double E = c.get("E");
    switch(id) {
        case SystemId::micz3d: {
            const double m = c.get("m"), s = c.get("s");
            const double c1 = c.get("c1"), c2 = c.get("c2");
            sc.zeta = 4.0 * s * m + 4.0 * (c2 - c1);
            sc.d    = 8.0 * E;
            sc.z = (-4.0 * m * m - 4.0 * s * s - 4.0 * (2.0 * c1 + 2.0 * c2 - 1.0)) * E +
                   2.0;
            break;
        }
        case SystemId::osc4d: {
            const double m = c.get("m"), s = c.get("s");
            const double c1 = c.get("c1"), c2 = c.get("c2");
            const double w2 = sq(c.get("omega"));
            sc.d = -16.0 * w2;
            if(variant == ConstantsVariant::consistent) {
                sc.zeta = 4.0 * m * s * E + 2.0 * (c1 - c2) * E;
                sc.z    = 2.0 * E * E + 8.0 * w2 * (m * m + s * s) +
                       8.0 * (c1 + c2 - 1.0) * w2;
            } else {
                sc.zeta = 4.0 * m * s * E - 2.0 * (c1 - c2) * E;
                sc.z    = 2.0 * E * E - 8.0 * w2 * (m * m + s * s) +
                       8.0 * (c1 + c2 - 1.0) * w2;
            }
            break;
        }
        case SystemId::miczs3: {
            const double m = c.get("m"), mu = c.get("mu");
            const double al = c.get("alpha"), R = c.get("R");
            sc.zeta = 4.0 * al * mu * m;
            sc.a    = -6.0 / (R * R);
            sc.d    = 8.0 * E + 4.0 * (m * m + mu * mu - 1.0) / (R * R);
            sc.z    = 2.0 * al * al + 4.0 * E * (1.0 - m * m - mu * mu) -
                   2.0 * m * m * mu * mu / (R * R);
            break;
        }
    }
    return sc;
}

CasimirValue casimir_closed(SystemId id, const CentralCharges& c,
                            ConstantsVariant variant) {
    for(const auto& sym : charge_symbols(id))
        if(!c.has(sym)) throw ConfigError("incomplete central charges");
    if(!c.has("E")) throw ConfigError("incomplete central charges");
    const double E = c.get("E");
    double K       = 0.0;
    switch(id) {
        case SystemId::micz3d: {
            const double m = c.get("m"), s = c.get("s");
            const double c1 = c.get("c1"), c2 = c.get("c2");
            const double cross = variant == ConstantsVariant::consistent ? c1 - c2
                                                                         : c2 - c1;
            K = -8.0 * s * s * m * m * E + 16.0 * cross * s * m * E -
                8.0 * sq(c1 - c2) * E + 4.0 * m * m + 4.0 * (2.0 * c1 + 2.0 * c2 + s * s);
            break;
        }
        case SystemId::osc4d: {
            const double m = c.get("m"), s = c.get("s");
            const double c1 = c.get("c1"), c2 = c.get("c2");
            const double w2 = sq(c.get("omega"));
            if(variant == ConstantsVariant::consistent) {
                K = 4.0 * E * E * (c1 + c2 + m * m + s * s) + 4.0 * sq(c1 - c2) * w2 +
                    16.0 * (c1 - c2) * w2 * m * s + 16.0 * m * m * s * s * w2;
            } else {
                K = -4.0 * m * m * E * E - 4.0 * s * s * E * E + 4.0 * (c1 + c2) * E * E +
                    4.0 * w2 * m * m * s * s - 16.0 * (c1 - c2) * w2 * m * s +
                    4.0 * sq(c1 - c2) * w2;
            }
            break;
        }
        case SystemId::miczs3: {
            const double m = c.get("m"), mu = c.get("mu");
            const double al = c.get("alpha"), R = c.get("R");
            K = 4.0 * al * al * mu * mu + 4.0 * m * m * al * al -
                8.0 * m * m * mu * mu / (2.0 * R * R) - 8.0 * m * m * mu * mu * E;
            break;
        }
    }
    return {K, CasimirProvenance::closed_form};
}

double RootDescriptor::position(double E) const {
    const double s2 = sigma(E);
    if(!(s2 >= 0.0)) return nan_v;
    return 0.5 + sign * std::sqrt(s2);
}

double RootFamily::phi(double E, double y) const {
    const double v = sq(y - 0.5);
    double r       = lead(E);
    for(std::size_t k = 0; k < roots.size(); k += 2) r *= (v - roots[k].sigma(E));
    return r;
}

Poly RootFamily::phi_poly(double E, double u) const {
    const double h = u - 0.5;
    Poly out       = Poly::constant(lead(E));
    for(std::size_t k = 0; k < roots.size(); k += 2)
        out = out * Poly{h * h - roots[k].sigma(E), 2.0 * h, 1.0};
    return out;
}

RootFamily root_family(SystemId id, const CentralCharges& c, IndexReading reading) {
    validate_charges(id, c);
    RootFamily f;
    f.system = id;
    switch(id) {
        case SystemId::micz3d: {
            const auto idx = effective_indices(id, c, reading);
            const double sp = sq((idx.m1 + idx.m2) / 2.0);
            const double dm = sq((idx.m1 - idx.m2) / 2.0);
            add_pair(f.roots, "energy", RootKind::energy_pair, true,
                     [](double E) { return -1.0 / (2.0 * E); });
            add_pair(f.roots, "sum", RootKind::index_family, false,
                     [sp](double) { return sp; });
            add_pair(f.roots, "diff", RootKind::index_family, false,
                     [dm](double) { return dm; });
            f.lead = [](double E) { return 3.0 * std::ldexp(1.0, 21) * E; };
            f.e_lo = -1e6;
            f.e_hi = -1e-12;
            break;
        }
        case SystemId::osc4d: {
            const auto idx  = effective_indices(id, c, reading);
            const double w  = c.get("omega");
            const double sp = sq((idx.m1 + idx.m2) / 2.0);
            const double dm = sq((idx.m1 - idx.m2) / 2.0);
            add_pair(f.roots, "energy", RootKind::energy_pair, true,
                     [w](double E) { return sq(E / (2.0 * w)); });
            add_pair(f.roots, "sum", RootKind::index_family, false,
                     [sp](double) { return sp; });
            add_pair(f.roots, "diff", RootKind::index_family, false,
                     [dm](double) { return dm; });
            f.lead = [w](double) { return -3.0 * std::ldexp(1.0, 22) * w * w; };
            f.e_lo = 1e-12;
            f.e_hi = 1e6;
            break;
        }
        case SystemId::miczs3: {
            const double m = c.get("m"), mu = c.get("mu");
            const double al = c.get("alpha"), R = c.get("R");
            const double cc = 4.0 * R * R * al * al;
            // (E' +- sqrt(E'^2 + 4 R^2 alpha^2)) / 2 without cancellation.
            auto wp = [cc, R](double E) {
                const double ep = 1.0 + 2.0 * E * R * R;
                const double r  = std::sqrt(ep * ep + cc);
                if(ep >= 0.0) return 0.5 * (ep + r);
                return (r - ep) > 0.0 ? 0.5 * cc / (r - ep) : 0.0;
            };
            auto wm = [cc, R](double E) {
                const double ep = 1.0 + 2.0 * E * R * R;
                const double r  = std::sqrt(ep * ep + cc);
                if(ep <= 0.0) return 0.5 * (ep - r);
                return -0.5 * cc / (r + ep);
            };
            add_pair(f.roots, "m", RootKind::index_family, false,
                     [m](double) { return m * m; });
            add_pair(f.roots, "mu", RootKind::index_family, false,
                     [mu](double) { return mu * mu; });
            add_pair(f.roots, "curv_p", RootKind::curvature_pair, true,
                     [wp](double E) { return wp(E); });
            add_pair(f.roots, "curv_m", RootKind::curvature_pair, true,
                     [wm](double E) { return wm(E); });
            f.lead = [R](double) { return -3.0 * std::ldexp(1.0, 20) / (R * R); };
            f.e_lo = -1e6;
            f.e_hi = 1e6;
            f.branch_points.push_back(-1.0 / (2.0 * R * R));
            break;
        }
    }
    return f;
}

std::vector<RootValue> structure_roots(SystemId id, const CentralCharges& c,
                                       double E) {
    if(id == SystemId::micz3d && !(E < 0.0))
        throw DomainError("bound-state branch requires E < 0");
    const auto fam = root_family(id, c);
    std::vector<RootValue> out;
    for(const auto& r : fam.roots) out.push_back({r.label, r.kind, r.sign, r.position(E)});
    return out;
}

Poly FactoredPhi::polynomial() const {
    return poly_from_roots(roots, orientation * scale) * quadratic;
}

FactoredPhi factored_phi(SystemId id, int p, const CentralCharges& c,
                         IndexReading reading) {
    if(p < 0) throw DomainError("module dimension requires p >= 0");
    FactoredPhi f;
    const double P = p + 1.0;
    switch(id) {
        case SystemId::micz3d:
        case SystemId::osc4d: {
            const auto idx = effective_indices(id, c, reading);
            f.roots = RootList::from_values({0.0, P, P + idx.m1, P + idx.m2,
                                             P + idx.m1 + idx.m2,
                                             2.0 * P + idx.m1 + idx.m2});
            if(id == SystemId::micz3d)
                f.scale = 3.0 * std::ldexp(1.0, 21) / sq(P + idx.m1 + idx.m2);
            else
                f.scale = 3.0 * std::ldexp(1.0, 19) * sq(c.get("omega"));
            f.orientation = -1;
            f.mirrored    = true;
            break;
        }
        case SystemId::miczs3: {
            const double m = c.get("m"), amu = std::fabs(c.get("mu"));
            const double al = c.get("alpha"), R = c.get("R");
            f.roots = RootList::from_values(
              {0.0, P, -2.0 * amu, -(m + amu), m - amu, -(P + amu)});
            f.scale       = 3.0 * std::ldexp(1.0, 18) / (R * R);
            f.orientation = -1;
            f.mirrored    = false;
            const double N = P + amu;
            f.quadratic = Poly{4.0 * amu * amu + R * R * al * al / (N * N),
                               8.0 * amu, 4.0};
            break;
        }
    }
    return f;
}

PrintedSpectrum printed_spectrum(SystemId id, int p, const CentralCharges& c,
                                 IndexReading reading) {
    const double P = p + 1.0;
    switch(id) {
        case SystemId::micz3d: {
            const auto idx = effective_indices(id, c, reading);
            const double E = -1.0 / (2.0 * sq(P + idx.m1 + idx.m2));
            return {E, 0.5 + 1.0 / std::sqrt(-2.0 * E)};
        }
        case SystemId::osc4d: {
            const auto idx = effective_indices(id, c, reading);
            const double w = c.get("omega");
            const double E = 2.0 * w * (P + (idx.m1 + idx.m2) / 2.0);
            return {E, 0.5 - E / (2.0 * w)};
        }
        case SystemId::miczs3: {
            const double amu = std::fabs(c.get("mu"));
            const double al = c.get("alpha"), R = c.get("R");
            const double N = P + amu;
            return {-al * al / (2.0 * N * N) + (N * N - 1.0) / (2.0 * R * R),
                    0.5 * (1.0 + 2.0 * amu)};
        }
    }
    return {nan_v, nan_v};
}

PrincipalLevel principal_quantum_number(const QuantumNumberMap& q) {
    const double am = std::fabs(q.m - q.s), ap = std::fabs(q.m + q.s);
    PrincipalLevel r;
    r.n = q.n1 + q.n2 + (am + ap) / 2.0 + 1.0;
    const double m1 = index_radical(sq(q.m - q.s), 4.0 * q.c1, q.c1,
                                    IndexReading::square_root);
    const double m2 = index_radical(sq(q.m + q.s), 4.0 * q.c2, q.c2,
                                    IndexReading::square_root);
    r.delta1 = m1 - am;
    r.delta2 = m2 - ap;
    r.energy = -1.0 / (2.0 * sq(r.n + (r.delta1 + r.delta2) / 2.0));
    return r;
}

} // namespace qalg

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

#include "qalg/repfinder.hpp"
#include "qalg/errors.hpp"
#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

namespace qalg {
namespace {

constexpr int n_decades_per = 40;

std::vector<double> energy_grid(const RootFamily& f) {
    std::set<double> pts;
    auto add = [&](double e) {
        if(e >= f.e_lo && e <= f.e_hi && std::isfinite(e)) pts.insert(e);
    };
    const int n = 18 * n_decades_per;
    for(int i = 0; i <= n; ++i) {
        const double mag = std::pow(10.0, -12.0 + 18.0 * i / n);
        add(mag);
        add(-mag);
    }
    for(double b : f.branch_points) {
        add(b);
        for(int i = 0; i <= 200; ++i) {
            const double off = std::fabs(b) * std::pow(10.0, -14.0 + 14.0 * i / 200);
            add(b + off);
            add(b - off);
        }
    }
    add(f.e_lo);
    add(f.e_hi);
    return {pts.begin(), pts.end()};
}

template<typename F>
double bisect(F&& g, double a, double b, double ga) {
    const bool neg = ga < 0;
    for(int it = 0; it < 300; ++it) {
        const double m = 0.5 * (a + b);
        if(m <= a || m >= b) break;
        const double gm = g(m);
        if(!std::isfinite(gm)) break;
        if(gm == 0.0) return m;
        if((gm < 0) == neg)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

bool close(double a, double b) { return std::fabs(a - b) <= 1e-9 * (1.0 + std::fabs(b)); }

double rel_dev(double printed, double derived) {
    const double d = std::fabs(printed - derived);
    return derived != 0.0 ? d / std::fabs(derived) : d;
}

bool u_matches(double u, double u_printed, int p, double tol) {
    auto near = [tol](double a, double b) {
        return std::fabs(a - b) <= tol * (1.0 + std::fabs(b));
    };
    // Phi(y) = Phi(1 - y), so a module is also described by the reflected
    // variable y = u' - x with u' = 1 - u or u' = u + p + 1.
    return near(u, u_printed) || near(-u - p, u_printed) || near(1.0 - u, u_printed) ||
           near(u + p + 1.0, u_printed);
}

} // namespace

Poly Representation::phi_poly() const {
    const auto fam = root_family(system, charges, index_reading);
    return fam.phi_poly(E, u) * phi_scale;
}

std::vector<Representation> find_representations(SystemId id,
                                                  const CentralCharges& charges,
                                                  int p, const FindOptions& opt,
                                                  std::vector<std::string>* notes) {
    if(p < 0) throw DomainError("module dimension requires p >= 0");
    if(!(opt.phi_scale > 0.0)) throw DomainError("structure function scale must be positive");
    const RootFamily fam = root_family(id, charges, opt.index_reading);
    const auto grid      = energy_grid(fam);
    const double P       = p + 1.0;
    const double tol     = opt.tol;
    auto note            = [notes](const std::string& s) {
        if(notes) notes->push_back(s);
    };

    std::vector<Representation> found;
    const std::size_t n = fam.roots.size();
    std::vector<std::vector<double>> pos(n, std::vector<double>(grid.size()));
    for(std::size_t i = 0; i < n; ++i)
        for(std::size_t k = 0; k < grid.size(); ++k) pos[i][k] = fam.roots[i].position(grid[k]);
    for(std::size_t i = 0; i < n; ++i) {
        for(std::size_t j = 0; j < n; ++j) {
            if(i == j || j == RootFamily::mirror(i)) continue;
            const auto& di = fam.roots[i];
            const auto& dj = fam.roots[j];
            if(!di.energy_dependent && !dj.energy_dependent) continue;
            auto g = [&](double E) { return dj.position(E) - di.position(E) - P; };

            std::vector<double> vals(grid.size());
            bool any_finite = false, any_nonfinite = false;
            for(std::size_t k = 0; k < grid.size(); ++k) {
                vals[k] = pos[j][k] - pos[i][k] - P;
                (std::isfinite(vals[k]) ? any_finite : any_nonfinite) = true;
            }
            if(!any_finite) {
                note("pairing (" + di.label + ", " + dj.label +
                     ") skipped: root descriptor not real on the energy range");
                continue;
            }
            if(any_nonfinite)
                note("pairing (" + di.label + ", " + dj.label +
                     ") searched only where both roots are real");

            std::vector<double> energies;
            bool plateau = false;
            for(std::size_t k = 0; k < grid.size(); ++k) {
                const double a = vals[k];
                if(a == 0.0) {
                    std::size_t r = k;
                    while(r + 1 < grid.size() && vals[r + 1] == 0.0) ++r;
                    if(r == k)
                        energies.push_back(grid[k]);
                    else
                        plateau = true;
                    k = r;
                    continue;
                }
                if(k + 1 == grid.size()) break;
                const double b = vals[k + 1];
                if(!std::isfinite(a) || !std::isfinite(b)) continue;
                if(b != 0.0 && ((a < 0) != (b < 0)))
                    energies.push_back(bisect(g, grid[k], grid[k + 1], a));
            }
            if(plateau)
                note("pairing (" + di.label + ", " + dj.label +
                     ") satisfied on an energy interval: energy not determined, skipped");

            for(double E : energies) {
                const double u = di.position(E);
                Representation rep;
                rep.system         = id;
                rep.charges        = charges.with("E", E);
                rep.p              = p;
                rep.u              = u;
                rep.E              = E;
                rep.pairing        = {static_cast<int>(i), static_cast<int>(j)};
                rep.pairing_labels = {di.label, dj.label};
                rep.phi_scale      = opt.phi_scale;
                rep.tol            = tol;
                rep.index_reading  = opt.index_reading;

                auto phi = [&](double x) { return opt.phi_scale * fam.phi(E, x + u); };
                double M = 0.0;
                for(int k = 0; k <= p + 1; ++k) {
                    rep.phi_values.push_back(phi(k));
                    M = std::max(M, std::fabs(rep.phi_values.back()));
                }
                constexpr int panels = 512;
                bool cont = true;
                for(int l = 0; l <= panels; ++l) {
                    M = std::max(M, std::fabs(phi(P * l / panels)));
                    if(l < panels && !(phi(P * (l + 0.5) / panels) > 0.0)) cont = false;
                }
                if(!(M > 0.0) || !std::isfinite(M)) continue;
                if(std::fabs(rep.phi_values.front()) > tol * M ||
                   std::fabs(rep.phi_values.back()) > tol * M) {
                    note("pairing (" + di.label + ", " + dj.label +
                         ") candidate rejected: boundary values not zero");
                    continue;
                }
                bool pos = true;
                for(int k = 1; k <= p; ++k)
                    if(!(rep.phi_values[k] > tol * M)) pos = false;
                const double uc = std::max(u, -u - p);
                bool kin        = true;
                for(const auto& d : fam.roots) {
                    if(d.energy_dependent) continue;
                    const double r = d.position(E);
                    if(std::isfinite(r) && r > uc + 1e-9 * (1.0 + std::fabs(uc))) kin = false;
                }
                rep.flags.positivity_ok = pos;
                rep.flags.continuum_ok  = cont;
                rep.flags.kinematic_ok  = kin;
                const auto pr = printed_spectrum(id, p, charges, opt.index_reading);
                rep.flags.matches_printed_E =
                  std::fabs(pr.E - E) <= tol * (1.0 + std::fabs(E));
                rep.flags.matches_printed_u = u_matches(u, pr.u, p, tol);
                found.push_back(std::move(rep));
            }
        }
    }

    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.E < b.E;
    });
    std::vector<Representation> merged;
    for(auto& r : found) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const Representation& o) {
            return close(o.E, r.E) && (close(o.u, r.u) || close(o.u, -r.u - r.p));
        });
        if(it == merged.end())
            merged.push_back(std::move(r));
        else if(r.u > it->u + 1e-9 * (1.0 + std::fabs(it->u)))
            *it = std::move(r);
    }
    return merged;
}

std::vector<Representation> accepted_representations(SystemId id,
                                                     const CentralCharges& charges,
                                                     int p, const FindOptions& opt) {
    auto all = find_representations(id, charges, p, opt);
    std::vector<Representation> out;
    for(auto& r : all)
        if(r.accepted()) out.push_back(std::move(r));
    return out;
}

SpectrumTable spectrum_table(SystemId id, const CentralCharges& charges, int p_max,
                             const FindOptions& opt) {
    if(p_max < 0) throw DomainError("p_max must be non-negative");
    validate_charges(id, charges);
    std::vector<std::future<std::vector<SpectrumRow>>> jobs;
    for(int p = 0; p <= p_max; ++p) {
        jobs.push_back(std::async(std::launch::async, [=, &charges, &opt] {
            std::vector<SpectrumRow> rows;
            for(auto& r : accepted_representations(id, charges, p, opt)) {
                SpectrumRow row{std::move(r), {}};
                row.discrepancies = compare_printed(row.rep);
                rows.push_back(std::move(row));
            }
            return rows;
        }));
    }
    SpectrumTable t;
    for(int p = 0; p <= p_max; ++p) {
        auto rows = jobs[p].get();
        if(rows.empty()) t.missing.push_back(p);
        for(auto& r : rows) t.rows.push_back(std::move(r));
    }
    std::stable_sort(t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) {
        if(a.rep.E != b.rep.E) return a.rep.E < b.rep.E;
        return a.rep.p < b.rep.p;
    });
    return t;
}

double duality_check(int p, double m1, double m2) {
    const double n       = p + 1.0 + (m1 + m2) / 2.0;
    const double omega   = 4.0 / (2.0 * n);
    const double coulomb = -1.0 / (2.0 * n * n);
    return std::fabs(coulomb + omega * omega / 8.0);
}

std::vector<DiscrepancyRecord> compare_printed(const Representation& rep) {
    std::vector<DiscrepancyRecord> out;
    const std::string sys(to_string(rep.system));
    const double tol = rep.tol;
    const auto pr    = printed_spectrum(rep.system, rep.p, rep.charges, rep.index_reading);
    if(std::fabs(pr.E - rep.E) > tol * (1.0 + std::fabs(rep.E)))
        out.push_back({sys + ".printed_energy", "E", pr.E, rep.E, rel_dev(pr.E, rep.E),
                       "published energy disagrees with the boundary-condition "
                       "solution; derived value retained"});
    if(!u_matches(rep.u, pr.u, rep.p, tol)) {
        double d = rep.u;
        for(double alt : {-rep.u - rep.p, 1.0 - rep.u, rep.u + rep.p + 1.0})
            if(std::fabs(alt - pr.u) < std::fabs(d - pr.u)) d = alt;
        out.push_back({sys + ".printed_shift", "u", pr.u, d, rel_dev(pr.u, d),
                       "published shift matches no orientation of the module"});
    }
    if(rep.system == SystemId::micz3d) {
        QuantumNumberMap q;
        q.n1 = rep.p;
        q.n2 = 0;
        q.m  = rep.charges.get("m");
        q.s  = rep.charges.get("s");
        q.c1 = rep.charges.get("c1");
        q.c2 = rep.charges.get("c2");
        const auto lvl = principal_quantum_number(q);
        if(std::fabs(lvl.energy - rep.E) > tol * (1.0 + std::fabs(rep.E)))
            out.push_back({sys + ".principal_quantum_number_energy", "E", lvl.energy,
                           rep.E, rel_dev(lvl.energy, rep.E),
                           "energy from n = n1 + n2 + (|m-s|+|m+s|)/2 + 1 with "
                           "n1 = p, n2 = 0 disagrees"});
    }
    return out;
}

ReconcileOutcome reconcile_polys(const Poly& candidate, const Poly& reference, int p,
                                 const std::string& tag) {
    DiscrepancyRecord rec;
    rec.tag      = tag;
    rec.quantity = "phi ratio";
    if(candidate.is_zero() || reference.is_zero()) {
        rec.note = "ratio undefined";
        return rec;
    }
    const double P = p + 1.0;
    std::vector<double> ratios;
    for(int i = 0; i < 20; ++i) {
        const double x   = P * (i + 0.5) / 20.0;
        const double ref = poly_eval(reference, x);
        if(ref == 0.0 || !std::isfinite(ref)) {
            rec.note = "ratio undefined";
            return rec;
        }
        ratios.push_back(poly_eval(candidate, x) / ref);
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    const double c      = ratios.front();
    bool constant       = c > 0.0;
    for(double r : ratios)
        if(std::fabs(r - c) > 1e-6 * std::fabs(c)) constant = false;
    if(constant) return c;
    rec.printed = *lo;
    rec.derived = *hi;
    rec.relative_deviation =
      std::fabs(*hi - *lo) / std::max(std::fabs(*hi), std::fabs(*lo));
    rec.note = c > 0.0 || *hi > 0.0 ? "ratio not constant on [0, p+1]"
                                   : "ratio negative on [0, p+1]";
    return rec;
}

ReconcileOutcome reconcile_generic(const Representation& rep, Reading reading,
                                   ConstantsVariant variant) {
    const auto sc  = structure_constants(rep.system, rep.charges, variant);
    const double K = casimir_closed(rep.system, rep.charges, variant).value;
    const auto fac = factored_phi(rep.system, rep.p, rep.charges, rep.index_reading);
    const double u = fac.mirrored ? -rep.u - rep.p : rep.u;
    const Poly gen = build_phi_generic(sc, K, u, reading);
    return reconcile_polys(gen, fac.polynomial(), rep.p,
                           std::string(to_string(rep.system)) + ".generic_phi.reading_" +
                             std::string(to_string(reading)));
}

CasimirValue casimir_phi_reconciled(const StructureConstants& sc, double u, int p) {
    const double y0 = u, y1 = u + p + 1.0;
    const double x  = std::fabs(2.0 * y0 - 1.0) >= std::fabs(2.0 * y1 - 1.0) ? 0.0 : p + 1.0;
    const double y  = x + u;
    const double base = poly_eval(build_phi_generic(sc, 0.0, u, Reading::B), x);
    const double g6   = std::pow(sc.gamma, 6);
    const double coef = 3072.0 * g6 * (2.0 * y - 1.0) * (2.0 * y - 1.0);
    return {base / coef, CasimirProvenance::phi_reconciled};
}

} // namespace qalg

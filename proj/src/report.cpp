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
#include "qalg/errors.hpp"
#include "qalg/repcheck.hpp"
#include "qalg/repfinder.hpp"
#include <algorithm>
#include <cmath>
#include <iomanip>
#include "json.hpp"
#include <sstream>

namespace qalg {
namespace {

using ojson = nlohmann::ordered_json;

ojson config_echo(const RunConfig& cfg, Command cmd) {
    ojson c;
    if(cmd != Command::duality) {
        c["system"] = cfg.system ? std::string(to_string(*cfg.system)) : "";
        ojson params = ojson::object();
        for(const auto& [k, v] : cfg.parameters.values()) params[k] = v;
        c["parameters"] = params;
    }
    c["p_max"] = cfg.p_max;
    if(cmd == Command::duality) {
        c["grid"] = cfg.grid;
    } else {
        c["tolerance"] = cfg.tolerance;
        c["reading"]   = std::string(to_string(cfg.reading));
        c["constants"] = std::string(to_string(cfg.constants));
    }
    if(cmd == Command::reconcile) c["self_test"] = cfg.self_test;
    return c;
}

ojson header(const RunConfig& cfg, Command cmd) {
    ojson j;
    j["schema"]  = std::string(report_schema);
    j["engine"]  = std::string(engine_version);
    j["command"] = std::string(to_string(cmd));
    j["config"]  = config_echo(cfg, cmd);
    return j;
}

ojson to_json(const DiscrepancyRecord& d) {
    ojson j;
    j["tag"]                = d.tag;
    j["quantity"]           = d.quantity;
    j["printed"]            = d.printed;
    j["derived"]            = d.derived;
    j["relative_deviation"] = d.relative_deviation;
    j["note"]               = d.note;
    return j;
}

FindOptions find_options(const RunConfig& cfg) {
    FindOptions o;
    o.tol = cfg.tolerance;
    return o;
}

std::string b2s(bool b) { return b ? "true" : "false"; }

/// CSV or aligned plain table from a header row and string cells.
std::string render_rows(const std::vector<std::string>& head,
                        const std::vector<std::vector<std::string>>& rows,
                        OutputFormat f) {
    std::ostringstream os;
    if(f == OutputFormat::csv) {
        auto line = [&](const std::vector<std::string>& r) {
            for(std::size_t i = 0; i < r.size(); ++i) {
                if(i) os << ',';
                const bool quote = r[i].find_first_of(",\"\n") != std::string::npos;
                if(quote) {
                    os << '"';
                    for(char c : r[i]) os << (c == '"' ? "\"\"" : std::string(1, c));
                    os << '"';
                } else {
                    os << r[i];
                }
            }
            os << '\n';
        };
        line(head);
        for(const auto& r : rows) line(r);
        return os.str();
    }
    std::vector<std::size_t> w(head.size());
    for(std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for(const auto& r : rows)
        for(std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        for(std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        os << '\n';
    };
    line(head);
    for(const auto& r : rows) line(r);
    return os.str();
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace

std::string_view to_string(OutputFormat f) {
    switch(f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::table: return "table";
    }
    return "json";
}

OutputFormat parse_format(std::string_view s) {
    if(s == "json") return OutputFormat::json;
    if(s == "csv") return OutputFormat::csv;
    if(s == "table") return OutputFormat::table;
    throw ConfigError("unknown format: " + std::string(s));
}

std::string_view to_string(Command c) {
    switch(c) {
        case Command::spectrum: return "spectrum";
        case Command::verify: return "verify";
        case Command::reconcile: return "reconcile";
        case Command::duality: return "duality";
    }
    return "spectrum";
}

Command parse_command(std::string_view s) {
    if(s == "spectrum") return Command::spectrum;
    if(s == "verify") return Command::verify;
    if(s == "reconcile") return Command::reconcile;
    if(s == "duality") return Command::duality;
    throw ConfigError("unknown command: " + std::string(s));
}

std::string format_number(double x) { return ojson(x).dump(); }

void load_config_json(RunConfig& cfg, std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch(const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if(!j.is_object()) throw ConfigError("malformed config: top level must be an object");
    try {
        for(const auto& [key, v] : j.items()) {
            if(key == "system")
                cfg.system = parse_system(v.get<std::string>());
            else if(key == "parameters") {
                if(!v.is_object())
                    throw ConfigError("malformed config: parameters must be an object");
                for(const auto& [sym, val] : v.items()) {
                    if(!val.is_number())
                        throw ConfigError("malformed config: parameter " + sym +
                                          " must be a number");
                    cfg.parameters.set(sym, val.get<double>());
                }
            } else if(key == "p_max")
                cfg.p_max = v.get<int>();
            else if(key == "tolerance")
                cfg.tolerance = v.get<double>();
            else if(key == "reading")
                cfg.reading = parse_reading(v.get<std::string>());
            else if(key == "format")
                cfg.format = parse_format(v.get<std::string>());
            else if(key == "constants")
                cfg.constants = parse_constants_variant(v.get<std::string>());
            else if(key == "grid")
                cfg.grid = v.get<int>();
            else if(key == "self_test")
                cfg.self_test = v.get<bool>();
            else if(key == "out")
                cfg.out_path = v.get<std::string>();
            else
                throw ConfigError("unknown config key: " + key);
        }
    } catch(const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

void validate(const RunConfig& cfg, Command cmd) {
    if(cfg.p_max < 0) throw ConfigError("p_max must be non-negative");
    if(cmd == Command::duality) {
        if(cfg.grid < 1) throw ConfigError("grid must be at least 1");
        return;
    }
    if(!cfg.system) throw ConfigError("missing system");
    if(!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    for(const auto& sym : charge_symbols(*cfg.system))
        if(!cfg.parameters.has(sym)) throw ConfigError("missing central charge: " + sym);
    for(const auto& [k, v] : cfg.parameters.values()) {
        const auto& syms = charge_symbols(*cfg.system);
        if(std::find(syms.begin(), syms.end(), k) == syms.end())
            throw ConfigError("unexpected central charge for " +
                              std::string(to_string(*cfg.system)) + ": " + k);
    }
    validate_charges(*cfg.system, cfg.parameters);
    try {
        effective_indices(*cfg.system, cfg.parameters);
    } catch(const DomainError& e) { throw ConfigError(e.what()); }
}

RunReport cmd_spectrum(const RunConfig& cfg) {
    validate(cfg, Command::spectrum);
    const auto table = spectrum_table(*cfg.system, cfg.parameters, cfg.p_max, find_options(cfg));
    RunReport r;
    r.exit_code = table.missing.empty() ? exit_ok : exit_no_module;

    if(cfg.format == OutputFormat::json) {
        ojson j    = header(cfg, Command::spectrum);
        ojson rows = ojson::array();
        ojson all  = ojson::array();
        for(const auto& row : table.rows) {
            const auto& rep = row.rep;
            ojson o;
            o["p"]                 = rep.p;
            o["E"]                 = rep.E;
            o["u"]                 = rep.u;
            o["positivity_ok"]     = rep.flags.positivity_ok;
            o["continuum_ok"]      = rep.flags.continuum_ok;
            o["kinematic_ok"]      = rep.flags.kinematic_ok;
            o["matches_printed_E"] = rep.flags.matches_printed_E;
            o["matches_printed_u"] = rep.flags.matches_printed_u;
            o["pairing"]           = {rep.pairing.first, rep.pairing.second};
            o["pairing_labels"]    = {rep.pairing_labels.first, rep.pairing_labels.second};
            o["phi_values"]        = rep.phi_values;
            ojson ds               = ojson::array();
            for(const auto& d : row.discrepancies) {
                ds.push_back(to_json(d));
                ojson dd = to_json(d);
                dd["p"]  = rep.p;
                all.push_back(dd);
            }
            o["discrepancies"] = ds;
            rows.push_back(o);
        }
        j["rows"]          = rows;
        j["missing_p"]     = table.missing;
        j["discrepancies"] = all;
        j["exit_code"]     = r.exit_code;
        r.text             = dump(j);
        return r;
    }
    std::vector<std::vector<std::string>> cells;
    for(const auto& row : table.rows) {
        const auto& rep = row.rep;
        cells.push_back({std::to_string(rep.p), format_number(rep.E), format_number(rep.u),
                         b2s(rep.flags.positivity_ok), std::to_string(rep.pairing.first),
                         std::to_string(rep.pairing.second),
                         std::to_string(row.discrepancies.size())});
    }
    r.text = render_rows(
      {"p", "E", "u", "positivity_ok", "pairing_i", "pairing_j", "n_discrepancies"}, cells,
      cfg.format);
    return r;
}

RunReport cmd_verify(const RunConfig& cfg) {
    validate(cfg, Command::verify);
    const auto table     = spectrum_table(*cfg.system, cfg.parameters, cfg.p_max, find_options(cfg));
    const double thresh  = 100.0 * cfg.tolerance;
    bool all_ok          = true;
    double max_ladder = 0.0, max_alg = 0.0, max_spread = 0.0;

    struct Row {
        const Representation* rep = nullptr;
        double ladder = NAN, alg = NAN, spread = NAN, kmat = NAN, kclosed = NAN;
        AlgebraResidual res;
        std::optional<DiscrepancyRecord> disc;
        std::string error;
        bool passed = false;
    };
    std::vector<Row> rows;
    for(const auto& srow : table.rows) {
        Row row;
        row.rep = &srow.rep;
        const auto& rep = srow.rep;
        try {
            row.ladder = ladder_residual(build_ladder(rep), rep.phi_values);
            const auto mats = fit_realization(rep, cfg.constants, thresh);
            const auto sc   = structure_constants(rep.system, rep.charges, cfg.constants);
            row.res         = verify_algebra(mats, sc);
            row.alg         = row.res.max();
            const auto cr   = verify_casimir(
              mats, sc, casimir_closed(rep.system, rep.charges, cfg.constants),
              std::string(to_string(rep.system)) + ".casimir_closed_form");
            row.kmat    = cr.matrix_value;
            row.kclosed = cr.closed_value;
            row.spread  = cr.spread / (1.0 + std::fabs(cr.matrix_value));
            row.disc    = cr.discrepancy;
            row.passed  = row.ladder < thresh && row.alg < thresh && row.spread < thresh;
        } catch(const ResidualError& e) {
            row.error = std::string(e.what()) + " (residual " + format_number(e.residual()) + ")";
        } catch(const Error& e) {
            row.error = e.what();
        }
        all_ok = all_ok && row.passed;
        if(std::isfinite(row.ladder)) max_ladder = std::max(max_ladder, row.ladder);
        if(std::isfinite(row.alg)) max_alg = std::max(max_alg, row.alg);
        if(std::isfinite(row.spread)) max_spread = std::max(max_spread, row.spread);
        rows.push_back(std::move(row));
    }
    RunReport r;
    r.exit_code = !table.missing.empty() ? exit_no_module : (all_ok ? exit_ok : exit_threshold);

    if(cfg.format == OutputFormat::json) {
        ojson j  = header(cfg, Command::verify);
        ojson jr = ojson::array();
        ojson ds = ojson::array();
        for(const auto& row : rows) {
            ojson o;
            o["p"]               = row.rep->p;
            o["E"]               = row.rep->E;
            o["u"]               = row.rep->u;
            o["ladder_residual"] = row.ladder;
            o["algebra_residual"] = {{"ab", row.res.ab}, {"ac", row.res.ac},
                                     {"bc", row.res.bc}, {"max", row.alg}};
            o["casimir"] = {{"matrix", row.kmat},
                            {"closed", row.kclosed},
                            {"relative_spread", row.spread}};
            o["passed"] = row.passed;
            if(!row.error.empty()) o["error"] = row.error;
            if(row.disc) {
                ojson d = to_json(*row.disc);
                d["p"]  = row.rep->p;
                ds.push_back(d);
            }
            jr.push_back(o);
        }
        j["rows"]    = jr;
        j["summary"] = {{"threshold", thresh},
                        {"max_ladder_residual", max_ladder},
                        {"max_algebra_residual", max_alg},
                        {"max_casimir_spread", max_spread},
                        {"all_passed", all_ok}};
        j["missing_p"]     = table.missing;
        j["discrepancies"] = ds;
        j["exit_code"]     = r.exit_code;
        r.text             = dump(j);
        return r;
    }
    std::vector<std::vector<std::string>> cells;
    for(const auto& row : rows)
        cells.push_back({std::to_string(row.rep->p), format_number(row.rep->E),
                         format_number(row.rep->u), format_number(row.ladder),
                         format_number(row.alg), format_number(row.spread), b2s(row.passed)});
    r.text = render_rows({"p", "E", "u", "ladder_residual", "algebra_residual",
                          "casimir_spread", "passed"},
                         cells, cfg.format);
    return r;
}

RunReport cmd_reconcile(const RunConfig& cfg) {
    validate(cfg, Command::reconcile);
    struct Row {
        int p;
        double E, u;
        std::string reading;
        ReconcileOutcome outcome;
    };
    std::vector<Row> rows;
    if(cfg.self_test) {
        CentralCharges c = cfg.parameters;
        for(int p = 0; p <= cfg.p_max; ++p) {
            const auto fac = factored_phi(*cfg.system, p, c);
            const Poly ref = fac.polynomial();
            rows.push_back({p, NAN, NAN, "self-test",
                            reconcile_polys(ref * 2.0, ref, p,
                                            std::string(to_string(*cfg.system)) +
                                              ".factored_phi.self_test")});
        }
    } else {
        const auto table =
          spectrum_table(*cfg.system, cfg.parameters, cfg.p_max, find_options(cfg));
        for(const auto& srow : table.rows)
            for(Reading rd : {Reading::A, Reading::B})
                rows.push_back({srow.rep.p, srow.rep.E, srow.rep.u,
                                std::string(to_string(rd)),
                                reconcile_generic(srow.rep, rd, cfg.constants)});
    }
    RunReport r;
    r.exit_code = exit_ok;
    if(cfg.format == OutputFormat::json) {
        ojson j  = header(cfg, Command::reconcile);
        ojson jr = ojson::array();
        std::size_t n_const = 0, n_disc = 0;
        for(const auto& row : rows) {
            ojson o;
            o["p"]       = row.p;
            o["E"]       = row.E;
            o["u"]       = row.u;
            o["reading"] = row.reading;
            if(const double* c = std::get_if<double>(&row.outcome)) {
                o["outcome"]  = "constant";
                o["constant"] = *c;
                ++n_const;
            } else {
                o["outcome"]     = "discrepancy";
                o["discrepancy"] = to_json(std::get<DiscrepancyRecord>(row.outcome));
                ++n_disc;
            }
            jr.push_back(o);
        }
        j["rows"]    = jr;
        j["summary"] = {{"outcomes", rows.size()},
                        {"constants", n_const},
                        {"discrepancies", n_disc}};
        j["exit_code"] = r.exit_code;
        r.text         = dump(j);
        return r;
    }
    std::vector<std::vector<std::string>> cells;
    for(const auto& row : rows) {
        const double* c = std::get_if<double>(&row.outcome);
        cells.push_back({std::to_string(row.p), format_number(row.E), format_number(row.u),
                         row.reading, c ? "constant" : "discrepancy",
                         c ? format_number(*c) : "",
                         c ? "" : std::get<DiscrepancyRecord>(row.outcome).note});
    }
    r.text = render_rows({"p", "E", "u", "reading", "outcome", "constant", "note"}, cells,
                         cfg.format);
    return r;
}

RunReport cmd_duality(const RunConfig& cfg) {
    validate(cfg, Command::duality);
    double worst = 0.0;
    int wp = 0;
    double w1 = 0.0, w2 = 0.0;
    std::size_t points = 0;
    auto axis = [&](int i) { return cfg.grid == 1 ? 0.0 : 5.0 * i / (cfg.grid - 1); };
    for(int p = 0; p <= cfg.p_max; ++p)
        for(int i = 0; i < cfg.grid; ++i)
            for(int k = 0; k < cfg.grid; ++k) {
                const double res = duality_check(p, axis(i), axis(k));
                ++points;
                if(res > worst || !std::isfinite(res)) {
                    worst = res;
                    wp    = p;
                    w1    = axis(i);
                    w2    = axis(k);
                }
            }
    constexpr double threshold = 1e-12;
    RunReport r;
    r.exit_code = worst < threshold ? exit_ok : exit_threshold;
    if(cfg.format == OutputFormat::json) {
        ojson j           = header(cfg, Command::duality);
        j["points"]       = points;
        j["max_residual"] = worst;
        j["worst_point"]  = {{"p", wp}, {"m1", w1}, {"m2", w2}};
        j["threshold"]    = threshold;
        j["passed"]       = worst < threshold;
        j["exit_code"]    = r.exit_code;
        r.text            = dump(j);
        return r;
    }
    r.text = render_rows({"p_max", "grid", "points", "max_residual", "passed"},
                         {{std::to_string(cfg.p_max), std::to_string(cfg.grid),
                           std::to_string(points), format_number(worst), b2s(worst < threshold)}},
                         cfg.format);
    return r;
}

RunReport run_command(Command cmd, const RunConfig& cfg) {
    switch(cmd) {
        case Command::spectrum: return cmd_spectrum(cfg);
        case Command::verify: return cmd_verify(cfg);
        case Command::reconcile: return cmd_reconcile(cfg);
        case Command::duality: return cmd_duality(cfg);
    }
    return cmd_spectrum(cfg);
}

} // namespace qalg

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

#include "CLI11.hpp"
#include "qalg/qalg.h"
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_config = 3;

int config_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return exit_config;
}

int check(qalg_status s) {
    if(s == QALG_OK) return 0;
    return config_error(qalg_last_error());
}

bool parse_param(const std::string& kv, std::string& key, double& value) {
    const auto eq = kv.find('=');
    if(eq == std::string::npos || eq == 0) return false;
    key = kv.substr(0, eq);
    const std::string v = kv.substr(eq + 1);
    try {
        std::size_t used = 0;
        value            = std::stod(v, &used);
        return used == v.size();
    } catch(const std::exception&) { return false; }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectra of quadratic symmetry algebras via deformed oscillator realizations"};
    app.set_version_flag("--version", std::string(qalg_version()));

    std::string command, system, config_path, reading, format, out_path, constants;
    std::vector<std::string> params;
    int p_max = 0, grid = 0;
    double tol = 0.0;
    bool self_test = false;

    app.add_option("command", command, "spectrum | verify | reconcile | duality")
      ->required()
      ->check(CLI::IsMember({"spectrum", "verify", "reconcile", "duality"}));
    auto* o_system = app.add_option("--system", system, "micz3d | osc4d | miczs3");
    app.add_option("--param", params, "central charge as key=value (repeatable)")
      ->allow_extra_args(false);
    app.add_option("--config", config_path, "JSON config file; flags override it");
    auto* o_pmax  = app.add_option("--p-max", p_max, "largest p (module dimension p+1)");
    auto* o_tol   = app.add_option("--tol", tol, "solver tolerance (default 1e-10)");
    auto* o_read  = app.add_option("--reading", reading, "generic structure function reading: A | B");
    auto* o_fmt   = app.add_option("--format", format, "json | csv | table");
    auto* o_out   = app.add_option("--out", out_path, "write the report here instead of stdout");
    auto* o_const = app.add_option("--constants", constants, "consistent | printed");
    auto* o_grid  = app.add_option("--grid", grid, "duality grid points per index axis");
    app.add_flag("--self-test", self_test, "reconcile the factored form against itself");

    try {
        app.parse(argc, argv);
    } catch(const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch(const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch(const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    std::unique_ptr<qalg_config, decltype(&qalg_config_destroy)> cfg(qalg_config_create(),
                                                                     &qalg_config_destroy);
    if(!cfg) return config_error("out of memory");

    if(!config_path.empty()) {
        std::ifstream in(config_path);
        if(!in) return config_error("cannot read config file: " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        if(int rc = check(qalg_config_load_json(cfg.get(), ss.str().c_str()))) return rc;
    }
    int rc = 0;
    if(o_system->count() && (rc = check(qalg_config_set_system(cfg.get(), system.c_str()))))
        return rc;
    for(const auto& kv : params) {
        std::string key;
        double value = 0.0;
        if(!parse_param(kv, key, value)) return config_error("malformed parameter: " + kv);
        if((rc = check(qalg_config_set_param(cfg.get(), key.c_str(), value)))) return rc;
    }
    if(o_pmax->count() && (rc = check(qalg_config_set_p_max(cfg.get(), p_max)))) return rc;
    if(o_tol->count() && (rc = check(qalg_config_set_tolerance(cfg.get(), tol)))) return rc;
    if(o_read->count() && (rc = check(qalg_config_set_reading(cfg.get(), reading.c_str()))))
        return rc;
    if(o_fmt->count() && (rc = check(qalg_config_set_format(cfg.get(), format.c_str()))))
        return rc;
    if(o_const->count() &&
       (rc = check(qalg_config_set_constants(cfg.get(), constants.c_str()))))
        return rc;
    if(o_grid->count() && (rc = check(qalg_config_set_grid(cfg.get(), grid)))) return rc;
    if(self_test && (rc = check(qalg_config_set_self_test(cfg.get(), 1)))) return rc;

    qalg_command cmd = QALG_CMD_SPECTRUM;
    if(command == "verify") cmd = QALG_CMD_VERIFY;
    if(command == "reconcile") cmd = QALG_CMD_RECONCILE;
    if(command == "duality") cmd = QALG_CMD_DUALITY;

    qalg_report* raw   = nullptr;
    qalg_status status = qalg_run(cfg.get(), cmd, &raw);
    std::unique_ptr<qalg_report, decltype(&qalg_report_destroy)> report(raw,
                                                                         &qalg_report_destroy);
    if(!report) {
        if(status == QALG_E_CONFIG) return config_error(qalg_last_error());
        std::cerr << "error: " << qalg_last_error() << "\n";
        return static_cast<int>(status);
    }
    const char* text = qalg_report_text(report.get());
    if(o_out->count()) {
        std::ofstream out(out_path, std::ios::binary);
        if(!out) return config_error("cannot write output file: " + out_path);
        out << text;
    } else {
        std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
    }
    return qalg_report_exit_code(report.get());
}

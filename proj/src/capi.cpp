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

#include "qalg/qalg.h"
#include "qalg/errors.hpp"
#include "qalg/repfinder.hpp"
#include "qalg/report.hpp"
#include <exception>
#include <new>
#include <string>

struct qalg_config {
    qalg::RunConfig cfg;
};

struct qalg_report {
    qalg::RunReport report;
};

namespace {

thread_local std::string t_last_error;

qalg_status fail(qalg_status s, const std::string& msg) {
    t_last_error = msg;
    return s;
}

template<typename F>
qalg_status guarded(F&& f) {
    try {
        t_last_error.clear();
        return f();
    } catch(const qalg::ConfigError& e) {
        return fail(QALG_E_CONFIG, e.what());
    } catch(const qalg::Error& e) {
        return fail(QALG_E_INVALID_ARG, e.what());
    } catch(const std::bad_alloc&) {
        return fail(QALG_E_INTERNAL, "out of memory");
    } catch(const std::exception& e) {
        return fail(QALG_E_INTERNAL, e.what());
    } catch(...) {
        return fail(QALG_E_INTERNAL, "unknown error");
    }
}

#define QALG_REQUIRE(ptr)                                                 \
    do {                                                                  \
        if(!(ptr)) return fail(QALG_E_INVALID_ARG, "null argument: " #ptr); \
    } while(0)

} // namespace

extern "C" {

const char* qalg_version(void) { return qalg::engine_version.data(); }

const char* qalg_last_error(void) { return t_last_error.c_str(); }

qalg_config* qalg_config_create(void) {
    try {
        return new qalg_config{};
    } catch(...) { return nullptr; }
}

void qalg_config_destroy(qalg_config* cfg) { delete cfg; }

qalg_status qalg_config_load_json(qalg_config* cfg, const char* json) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(json);
    return guarded([&] {
        qalg::RunConfig tmp = cfg->cfg;
        qalg::load_config_json(tmp, json);
        cfg->cfg = std::move(tmp);
        return QALG_OK;
    });
}

qalg_status qalg_config_set_system(qalg_config* cfg, const char* system) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(system);
    return guarded([&] {
        cfg->cfg.system = qalg::parse_system(system);
        return QALG_OK;
    });
}

qalg_status qalg_config_set_param(qalg_config* cfg, const char* symbol, double value) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(symbol);
    return guarded([&] {
        cfg->cfg.parameters.set(symbol, value);
        return QALG_OK;
    });
}

qalg_status qalg_config_set_p_max(qalg_config* cfg, int p_max) {
    QALG_REQUIRE(cfg);
    if(p_max < 0) return fail(QALG_E_CONFIG, "p_max must be non-negative");
    cfg->cfg.p_max = p_max;
    return QALG_OK;
}

qalg_status qalg_config_set_tolerance(qalg_config* cfg, double tol) {
    QALG_REQUIRE(cfg);
    if(!(tol > 0.0)) return fail(QALG_E_CONFIG, "tolerance must be positive");
    cfg->cfg.tolerance = tol;
    return QALG_OK;
}

qalg_status qalg_config_set_reading(qalg_config* cfg, const char* reading) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(reading);
    return guarded([&] {
        cfg->cfg.reading = qalg::parse_reading(reading);
        return QALG_OK;
    });
}

qalg_status qalg_config_set_format(qalg_config* cfg, const char* format) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(format);
    return guarded([&] {
        cfg->cfg.format = qalg::parse_format(format);
        return QALG_OK;
    });
}

qalg_status qalg_config_set_constants(qalg_config* cfg, const char* variant) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(variant);
    return guarded([&] {
        cfg->cfg.constants = qalg::parse_constants_variant(variant);
        return QALG_OK;
    });
}

qalg_status qalg_config_set_grid(qalg_config* cfg, int grid) {
    QALG_REQUIRE(cfg);
    if(grid < 1) return fail(QALG_E_CONFIG, "grid must be at least 1");
    cfg->cfg.grid = grid;
    return QALG_OK;
}

qalg_status qalg_config_set_self_test(qalg_config* cfg, int enabled) {
    QALG_REQUIRE(cfg);
    cfg->cfg.self_test = enabled != 0;
    return QALG_OK;
}

qalg_status qalg_run(const qalg_config* cfg, qalg_command cmd, qalg_report** out) {
    QALG_REQUIRE(out);
    *out = nullptr;
    QALG_REQUIRE(cfg);
    return guarded([&] {
        qalg::Command c;
        switch(cmd) {
            case QALG_CMD_SPECTRUM: c = qalg::Command::spectrum; break;
            case QALG_CMD_VERIFY: c = qalg::Command::verify; break;
            case QALG_CMD_RECONCILE: c = qalg::Command::reconcile; break;
            case QALG_CMD_DUALITY: c = qalg::Command::duality; break;
            default: return fail(QALG_E_INVALID_ARG, "unknown command");
        }
        auto* rep  = new qalg_report{qalg::run_command(c, cfg->cfg)};
        *out       = rep;
        switch(rep->report.exit_code) {
            case qalg::exit_ok: return QALG_OK;
            case qalg::exit_no_module:
                t_last_error = "no accepted representation for some p";
                return QALG_E_NO_MODULE;
            default:
                t_last_error = "verification threshold not met";
                return QALG_E_THRESHOLD;
        }
    });
}

const char* qalg_report_text(const qalg_report* rep) {
    return rep ? rep->report.text.c_str() : "";
}

int qalg_report_exit_code(const qalg_report* rep) {
    return rep ? rep->report.exit_code : static_cast<int>(QALG_E_INVALID_ARG);
}

void qalg_report_destroy(qalg_report* rep) { delete rep; }

qalg_status qalg_accepted_energies(const qalg_config* cfg, int p, double* energies,
                                   size_t capacity, size_t* count) {
    QALG_REQUIRE(cfg);
    QALG_REQUIRE(count);
    if(capacity > 0 && !energies) return fail(QALG_E_INVALID_ARG, "null argument: energies");
    return guarded([&] {
        if(p < 0) return fail(QALG_E_CONFIG, "p must be non-negative");
        qalg::validate(cfg->cfg, qalg::Command::spectrum);
        qalg::FindOptions opt;
        opt.tol         = cfg->cfg.tolerance;
        const auto reps = qalg::accepted_representations(*cfg->cfg.system,
                                                         cfg->cfg.parameters, p, opt);
        *count = reps.size();
        for(size_t i = 0; i < reps.size() && i < capacity; ++i) energies[i] = reps[i].E;
        return QALG_OK;
    });
}

double qalg_duality_residual(int p, double m1, double m2) {
    return qalg::duality_check(p, m1, m2);
}

} // extern "C"

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

#ifndef QALG_QALG_H
#define QALG_QALG_H

#include <stddef.h>

/* Stable C interface to the spectral engine. All handles are opaque; every
 * fallible call returns a qalg_status and records a message retrievable with
 * qalg_last_error() on the calling thread. */

#if defined(QALG_BUILDING_LIBRARY)
#define QALG_API __attribute__((visibility("default")))
#else
#define QALG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qalg_status {
    QALG_OK               = 0,
    QALG_E_NO_MODULE      = 2, /* some p has no accepted representation */
    QALG_E_CONFIG         = 3, /* invalid or incomplete configuration */
    QALG_E_THRESHOLD      = 4, /* a verification threshold was missed */
    QALG_E_INVALID_ARG    = 5, /* null handle or bad argument */
    QALG_E_INTERNAL       = 6
} qalg_status;

typedef enum qalg_command {
    QALG_CMD_SPECTRUM  = 0,
    QALG_CMD_VERIFY    = 1,
    QALG_CMD_RECONCILE = 2,
    QALG_CMD_DUALITY   = 3
} qalg_command;

typedef struct qalg_config qalg_config;
typedef struct qalg_report qalg_report;

QALG_API const char* qalg_version(void);
/* Message of the last failed call on this thread, "" if none. */
QALG_API const char* qalg_last_error(void);

QALG_API qalg_config* qalg_config_create(void);
QALG_API void qalg_config_destroy(qalg_config* cfg);

/* Merge a JSON document {"system":..., "parameters":{...}, "p_max":...}. */
QALG_API qalg_status qalg_config_load_json(qalg_config* cfg, const char* json);
QALG_API qalg_status qalg_config_set_system(qalg_config* cfg, const char* system);
QALG_API qalg_status qalg_config_set_param(qalg_config* cfg, const char* symbol,
                                           double value);
QALG_API qalg_status qalg_config_set_p_max(qalg_config* cfg, int p_max);
QALG_API qalg_status qalg_config_set_tolerance(qalg_config* cfg, double tol);
/* "A" or "B" */
QALG_API qalg_status qalg_config_set_reading(qalg_config* cfg, const char* reading);
/* "json", "csv" or "table" */
QALG_API qalg_status qalg_config_set_format(qalg_config* cfg, const char* format);
/* "consistent" or "printed" */
QALG_API qalg_status qalg_config_set_constants(qalg_config* cfg, const char* variant);
QALG_API qalg_status qalg_config_set_grid(qalg_config* cfg, int grid);
QALG_API qalg_status qalg_config_set_self_test(qalg_config* cfg, int enabled);

/* Runs a command. On QALG_OK, QALG_E_NO_MODULE and QALG_E_THRESHOLD a report
 * is stored in *out and must be released with qalg_report_destroy. On other
 * statuses *out is set to NULL. */
QALG_API qalg_status qalg_run(const qalg_config* cfg, qalg_command cmd,
                              qalg_report** out);
QALG_API const char* qalg_report_text(const qalg_report* rep);
QALG_API int qalg_report_exit_code(const qalg_report* rep);
QALG_API void qalg_report_destroy(qalg_report* rep);

/* Accepted energies for module dimension p+1, ascending. Writes at most
 * capacity values and the total count to *count. */
QALG_API qalg_status qalg_accepted_energies(const qalg_config* cfg, int p,
                                            double* energies, size_t capacity,
                                            size_t* count);

QALG_API double qalg_duality_residual(int p, double m1, double m2);

#ifdef __cplusplus
}
#endif

#endif

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
#include <string_view>

/** @file report.hpp
 *  @brief Run configuration and the four report-producing commands.
 */

namespace qalg {

inline constexpr std::string_view engine_version = "qalg 1.0.0";
inline constexpr std::string_view report_schema  = "specgen/1";

enum class OutputFormat { json, csv, table };
std::string_view to_string(OutputFormat f);
OutputFormat parse_format(std::string_view s);

enum class Command { spectrum, verify, reconcile, duality };
std::string_view to_string(Command c);
Command parse_command(std::string_view s);

/// Process exit statuses.
enum ExitCode : int {
    exit_ok          = 0,
    exit_no_module   = 2,
    exit_config      = 3,
    exit_threshold   = 4,
};

struct RunConfig {
    std::optional<SystemId> system;
    CentralCharges parameters;
    int p_max        = 5;
    double tolerance = 1e-10;
    Reading reading  = Reading::A;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> out_path;
    ConstantsVariant constants = ConstantsVariant::consistent;
    int grid       = 10;
    bool self_test = false;
};

/** @brief Merges a JSON config document into @p cfg.
 *
 *  @throw ConfigError on malformed JSON, unknown keys or wrong types.
 */
void load_config_json(RunConfig& cfg, std::string_view text);

/// @throw ConfigError naming the first problem found.
void validate(const RunConfig& cfg, Command cmd);

struct RunReport {
    /// Rendered in the requested format.
    std::string text;
    int exit_code = exit_ok;
};

/// @throw ConfigError for invalid configurations.
RunReport cmd_spectrum(const RunConfig& cfg);
RunReport cmd_verify(const RunConfig& cfg);
RunReport cmd_reconcile(const RunConfig& cfg);
RunReport cmd_duality(const RunConfig& cfg);

RunReport run_command(Command cmd, const RunConfig& cfg);

/// Shortest round-trip decimal form used in every output format.
std::string format_number(double x);

} // namespace qalg

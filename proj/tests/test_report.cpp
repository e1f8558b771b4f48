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

#include "json.hpp"
#include "qalg/errors.hpp"
#include "qalg/report.hpp"
#include <cmath>
#include <gtest/gtest.h>
#include <sstream>

using namespace qalg;
using json = nlohmann::json;

namespace {

RunConfig config(std::string_view text) {
    RunConfig cfg;
    load_config_json(cfg, text);
    return cfg;
}

RunConfig hydrogen(int p_max) {
    return config(R"({"system":"micz3d","parameters":{"m":0,"s":0,"c1":0,"c2":0},"p_max":)" +
                  std::to_string(p_max) + "}");
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream is(text);
    std::string line;
    while(std::getline(is, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while(std::getline(ls, cell, ',')) cells.push_back(cell);
        out.push_back(cells);
    }
    return out;
}

} // namespace

TEST(Config, Parse) {
    const auto cfg = config(
      R"({"system":"osc4d","parameters":{"m":0.5,"s":0,"c1":0,"c2":0,"omega":2},
          "p_max":3,"tolerance":1e-9,"reading":"B","format":"csv","constants":"printed"})");
    ASSERT_TRUE(cfg.system.has_value());
    EXPECT_EQ(*cfg.system, SystemId::osc4d);
    EXPECT_EQ(cfg.parameters.get("omega"), 2.0);
    EXPECT_EQ(cfg.p_max, 3);
    EXPECT_EQ(cfg.tolerance, 1e-9);
    EXPECT_EQ(cfg.reading, Reading::B);
    EXPECT_EQ(cfg.format, OutputFormat::csv);
    EXPECT_EQ(cfg.constants, ConstantsVariant::printed);
}

TEST(Config, Defaults) {
    const RunConfig cfg;
    EXPECT_EQ(cfg.tolerance, 1e-10);
    EXPECT_EQ(cfg.reading, Reading::A);
    EXPECT_EQ(cfg.format, OutputFormat::json);
}

TEST(Config, Rejections) {
    RunConfig cfg;
    EXPECT_THROW(load_config_json(cfg, "{not json"), ConfigError);
    EXPECT_THROW(load_config_json(cfg, R"({"sytem":"osc4d"})"), ConfigError);
    EXPECT_THROW(load_config_json(cfg, R"({"p_max":"three"})"), ConfigError);
    EXPECT_THROW(load_config_json(cfg, R"({"system":"kepler"})"), ConfigError);
    EXPECT_THROW(load_config_json(cfg, R"({"reading":"C"})"), ConfigError);
}

TEST(Config, MissingOmega) {
    const auto cfg = config(R"({"system":"osc4d","parameters":{"m":0,"s":0,"c1":0,"c2":0}})");
    try {
        cmd_spectrum(cfg);
        FAIL();
    } catch(const ConfigError& e) { EXPECT_STREQ(e.what(), "missing central charge: omega"); }
}

TEST(Config, ValidationErrors) {
    EXPECT_THROW(validate(RunConfig{}, Command::spectrum), ConfigError);
    auto cfg = hydrogen(2);
    cfg.parameters.set("omega", 1.0);
    EXPECT_THROW(validate(cfg, Command::spectrum), ConfigError);
    cfg = hydrogen(-1);
    EXPECT_THROW(validate(cfg, Command::spectrum), ConfigError);
    cfg = hydrogen(2);
    cfg.parameters.set("c1", -1.0);
    EXPECT_THROW(validate(cfg, Command::spectrum), ConfigError);
    RunConfig d;
    d.grid = 0;
    EXPECT_THROW(validate(d, Command::duality), ConfigError);
    d.grid = 3;
    EXPECT_NO_THROW(validate(d, Command::duality));
}

TEST(Spectrum, HydrogenRows) {
    const auto r = cmd_spectrum(hydrogen(2));
    EXPECT_EQ(r.exit_code, exit_ok);
    const auto j = json::parse(r.text);
    EXPECT_EQ(j["schema"], "specgen/1");
    EXPECT_EQ(j["engine"], "qalg 1.0.0");
    EXPECT_EQ(j["command"], "spectrum");
    ASSERT_EQ(j["rows"].size(), 3u);
    const double want[] = {-0.5, -0.125, -0.0555556};
    for(int i = 0; i < 3; ++i) EXPECT_NEAR(j["rows"][i]["E"].get<double>(), want[i], 1e-7);
    EXPECT_TRUE(j["missing_p"].empty());
    EXPECT_EQ(j["exit_code"], 0);
}

TEST(Spectrum, OscillatorRows) {
    const auto r = cmd_spectrum(
      config(R"({"system":"osc4d","parameters":{"m":0,"s":0,"c1":0,"c2":0,"omega":1},"p_max":1})"));
    const auto j = json::parse(r.text);
    ASSERT_EQ(j["rows"].size(), 2u);
    EXPECT_NEAR(j["rows"][0]["E"].get<double>(), 2.0, 1e-10);
    EXPECT_NEAR(j["rows"][1]["E"].get<double>(), 4.0, 1e-10);
}

TEST(Spectrum, DiscrepanciesCollected) {
    const auto r = cmd_spectrum(
      config(R"({"system":"micz3d","parameters":{"m":1,"s":0,"c1":0,"c2":0},"p_max":2})"));
    const auto j = json::parse(r.text);
    int energy = 0;
    for(const auto& d : j["discrepancies"]) {
        const auto tag = d["tag"].get<std::string>();
        EXPECT_TRUE(tag == "micz3d.printed_energy" || tag == "micz3d.printed_shift") << tag;
        energy += tag == "micz3d.printed_energy";
    }
    EXPECT_EQ(energy, 3);
}

TEST(Spectrum, ByteDeterministic) {
    for(auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::table}) {
        auto cfg   = hydrogen(4);
        cfg.format = f;
        const auto a = cmd_spectrum(cfg).text;
        const auto b = cmd_spectrum(cfg).text;
        EXPECT_EQ(a, b);
    }
}

TEST(Spectrum, CsvMatchesJson) {
    auto cfg = config(
      R"({"system":"miczs3","parameters":{"m":0.5,"mu":1,"alpha":1.3,"R":2},"p_max":4})");
    const auto j = json::parse(cmd_spectrum(cfg).text);
    cfg.format    = OutputFormat::csv;
    const auto cs = parse_csv(cmd_spectrum(cfg).text);
    ASSERT_EQ(cs.size(), j["rows"].size() + 1);
    EXPECT_EQ(cs[0][0], "p");
    EXPECT_EQ(cs[0][1], "E");
    for(std::size_t i = 0; i < j["rows"].size(); ++i) {
        EXPECT_EQ(std::stod(cs[i + 1][1]), j["rows"][i]["E"].get<double>());
        EXPECT_EQ(std::stod(cs[i + 1][2]), j["rows"][i]["u"].get<double>());
    }
}

TEST(Spectrum, TableHasHeader) {
    auto cfg   = hydrogen(1);
    cfg.format = OutputFormat::table;
    const auto t = cmd_spectrum(cfg).text;
    EXPECT_EQ(t.rfind("p", 0), 0u);
    EXPECT_NE(t.find("positivity_ok"), std::string::npos);
}

TEST(Verify, HydrogenPasses) {
    const auto r = cmd_verify(hydrogen(5));
    EXPECT_EQ(r.exit_code, exit_ok);
    const auto j = json::parse(r.text);
    EXPECT_TRUE(j["summary"]["all_passed"].get<bool>());
    EXPECT_LT(j["summary"]["max_algebra_residual"].get<double>(), 1e-8);
    EXPECT_EQ(j["rows"].size(), 6u);
}

TEST(Verify, SphereSummary) {
    const auto r = cmd_verify(
      config(R"({"system":"miczs3","parameters":{"m":0,"mu":0,"alpha":1,"R":1},"p_max":3})"));
    const auto j = json::parse(r.text);
    EXPECT_TRUE(j.contains("summary"));
    EXPECT_EQ(r.exit_code, j["summary"]["all_passed"].get<bool>() ? exit_ok : exit_threshold);
}

TEST(Verify, TrivialDimension) {
    for(auto text : {R"({"system":"micz3d","parameters":{"m":0,"s":0,"c1":0,"c2":0},"p_max":0})",
                     R"({"system":"osc4d","parameters":{"m":0,"s":0,"c1":0,"c2":0,"omega":1},"p_max":0})",
                     R"({"system":"miczs3","parameters":{"m":0,"mu":0,"alpha":1,"R":1},"p_max":0})"}) {
        const auto r = cmd_verify(config(text));
        EXPECT_EQ(r.exit_code, exit_ok) << text;
    }
}

TEST(Reconcile, TwoReadingsPerRow) {
    const auto j = json::parse(cmd_reconcile(hydrogen(2)).text);
    ASSERT_EQ(j["rows"].size(), 6u);
    for(const auto& row : j["rows"]) {
        const auto o = row["outcome"].get<std::string>();
        EXPECT_TRUE(o == "constant" || o == "discrepancy");
    }
}

TEST(Reconcile, SelfTestGivesTwo) {
    auto cfg      = hydrogen(3);
    cfg.self_test = true;
    const auto r  = cmd_reconcile(cfg);
    EXPECT_EQ(r.exit_code, exit_ok);
    const auto j = json::parse(r.text);
    ASSERT_EQ(j["rows"].size(), 4u);
    for(const auto& row : j["rows"]) EXPECT_NEAR(row["constant"].get<double>(), 2.0, 1e-12);
}

TEST(Reconcile, OscillatorRowsEmitted) {
    const auto r = cmd_reconcile(
      config(R"({"system":"osc4d","parameters":{"m":0,"s":0,"c1":0,"c2":0,"omega":1},"p_max":2})"));
    EXPECT_EQ(r.exit_code, exit_ok);
    EXPECT_EQ(json::parse(r.text)["rows"].size(), 6u);
}

TEST(Duality, Examples) {
    RunConfig cfg;
    cfg.p_max = 5;
    cfg.grid  = 10;
    auto r    = cmd_duality(cfg);
    EXPECT_EQ(r.exit_code, exit_ok);
    auto j = json::parse(r.text);
    EXPECT_LT(j["max_residual"].get<double>(), 1e-14);
    EXPECT_EQ(j["points"], 600);

    cfg.p_max = 0;
    cfg.grid  = 1;
    j         = json::parse(cmd_duality(cfg).text);
    EXPECT_EQ(j["points"], 1);
    EXPECT_EQ(j["max_residual"].get<double>(), 0.0);
    EXPECT_EQ(j["worst_point"]["m1"].get<double>(), 0.0);

    cfg.p_max = 9;
    cfg.grid  = 20;
    EXPECT_EQ(cmd_duality(cfg).exit_code, exit_ok);
}

TEST(Formatting, NumberRoundTrip) {
    for(double x : {0.1, -0.0555555555555555, 1e-300, 6.0, -1.0 / 3.0})
        EXPECT_EQ(std::stod(format_number(x)), x);
    EXPECT_EQ(parse_command("verify"), Command::verify);
    EXPECT_THROW(parse_command("fit"), ConfigError);
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

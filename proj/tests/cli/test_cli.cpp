#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "photonpath_cli/cli.hpp"

namespace {

namespace cli = photonpath::cli;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::string& command, const json& config, cli::Format format = cli::Format::kDefault,
            int threads = 1, bool validate_only = false) {
  cli::Invocation inv;
  inv.command = command;
  inv.format = format;
  inv.threads = threads;
  inv.validate_only = validate_only;
  std::ostringstream out, err;
  const int code = cli::run_text(inv, config.dump(), out, err);
  return {code, out.str(), err.str()};
}

Outcome run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

json params_config(const std::string& command, json params) {
  return json{{"command", command}, {"params", std::move(params)}};
}

// CSV body as rows of doubles keyed by header name.
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    ADD_FAILURE() << "no column " << name;
    return 0;
  }
};

Csv parse_csv(const std::string& text) {
  Csv c;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (c.header.empty()) {
      c.header = cells;
    } else {
      std::vector<double> row;
      for (const auto& s : cells) row.push_back(std::stod(s));
      c.rows.push_back(row);
    }
  }
  return c;
}

json load_example(const std::string& name) {
  std::ifstream f(std::string(PHOTONPATH_EXAMPLES_DIR) + "/" + name);
  return json::parse(f);
}

double value(const json& out, const std::string& name) { return out["results"][name]["value"].get<double>(); }

TEST(Cli, EveryExampleRunsAndIsDeterministic) {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PHOTONPATH_EXAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    cli::Invocation inv;
    inv.command = load_example(entry.path().filename().string())["command"].get<std::string>();
    inv.config_path = entry.path().string();
    std::ostringstream a, b, e1, e2;
    ASSERT_EQ(cli::run(inv, a, e1), cli::kExitOk) << entry.path() << ": " << e1.str();
    inv.threads = 4;
    ASSERT_EQ(cli::run(inv, b, e2), cli::kExitOk) << entry.path() << ": " << e2.str();
    EXPECT_EQ(a.str(), b.str()) << entry.path();
  }
  EXPECT_GE(seen, 14);
}

TEST(Cli, FockExampleGivesBunchedPair) {
  const Outcome o = run("fock", load_example("fock.json"), cli::Format::kJson);
  ASSERT_EQ(o.code, 0) << o.err;
  const json out = json::parse(o.out);
  const auto p = out["results"]["probabilities"]["value"];
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(p[0].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(p[1].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(p[2].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(out["command"], "fock");
  EXPECT_EQ(out["input_hash"].get<std::string>().size(), 64u);
}

TEST(Cli, JsonOutputRoundTrips) {
  const Outcome o = run("layers", load_example("layers_front.json"));
  ASSERT_EQ(o.code, 0) << o.err;
  const auto out = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(out.dump(2) + "\n", o.out);
  EXPECT_EQ(out["results"]["rho"]["unit"], "1");
}

TEST(Cli, InputHashIgnoresKeyOrderAndWhitespace) {
  cli::Invocation inv;
  inv.command = "hom";
  inv.validate_only = true;
  std::ostringstream a, b, e;
  ASSERT_EQ(cli::run_text(inv, R"({"params":{"splitter":{"reflectance":0.3,"phi_rho":0.1}}})", a, e), 0);
  ASSERT_EQ(cli::run_text(inv, "{ \"params\" : { \"splitter\" : {\"phi_rho\":0.1,\n \"reflectance\":0.3} } }", b, e), 0);
  EXPECT_EQ(json::parse(a.str())["input_hash"], json::parse(b.str())["input_hash"]);
  std::ostringstream c;
  ASSERT_EQ(cli::run_text(inv, R"({"params":{"splitter":{"reflectance":0.31,"phi_rho":0.1}}})", c, e), 0);
  EXPECT_NE(json::parse(a.str())["input_hash"], json::parse(c.str())["input_hash"]);
}

TEST(Cli, SagnacAtRestNeverReachesDetector) {
  const Outcome o = run("sagnac", load_example("sagnac_stationary.json"));
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(value(json::parse(o.out), "detection_probability"), 0.0, 1e-15);
}

TEST(Cli, LayersFrontAndBackTransmitEqually) {
  const Outcome f = run("layers", load_example("layers_front.json"));
  const Outcome b = run("layers", load_example("layers_back.json"));
  ASSERT_EQ(f.code, 0);
  ASSERT_EQ(b.code, 0);
  const json jf = json::parse(f.out), jb = json::parse(b.out);
  EXPECT_NEAR(value(jf, "transmittance"), value(jb, "transmittance"), 1e-12);
  EXPECT_GT(std::abs(value(jf, "reflectance") - value(jb, "reflectance")), 1e-3);  // lossy stack
}

TEST(Cli, MachZehnderPhaseSweepFollowsCosineSquared) {
  const Outcome o = run("mzi", load_example("mzi_sweep.json"));
  ASSERT_EQ(o.code, 0) << o.err;
  const Csv c = parse_csv(o.out);
  ASSERT_EQ(c.rows.size(), 64u);
  const std::size_t phi = c.col("params.phi1"), p1 = c.col("exit1_probability"), p2 = c.col("exit2_probability");
  for (const auto& row : c.rows) {
    const double expect = std::pow(std::cos(row[phi] / 2.0), 2);
    EXPECT_NEAR(row[p1], expect, 1e-12);
    EXPECT_NEAR(row[p1] + row[p2], 1.0, 1e-12);
  }
  EXPECT_DOUBLE_EQ(c.rows.back()[phi], 2.0 * std::numbers::pi);
}

TEST(Cli, HomSweepFollowsReflectance) {
  const Outcome o = run("hom", load_example("hom_sweep.json"));
  ASSERT_EQ(o.code, 0) << o.err;
  const Csv c = parse_csv(o.out);
  ASSERT_EQ(c.rows.size(), 21u);
  for (const auto& row : c.rows) {
    const double r = row[c.col("params.splitter.reflectance")];
    EXPECT_NEAR(row[c.col("coincidence_probability")], std::pow(2.0 * r - 1.0, 2), 1e-12);
  }
}

TEST(Cli, ThermalSweepReflectedMeanIsLinear) {
  const Outcome o = run("thermal", load_example("thermal_sweep.json"));
  ASSERT_EQ(o.code, 0) << o.err;
  const Csv c = parse_csv(o.out);
  for (const auto& row : c.rows) {
    EXPECT_NEAR(row[c.col("reflected_mean")], 3.0 * row[c.col("params.splitter.reflectance")], 1e-12);
  }
  EXPECT_EQ(c.col("reflected_pmf_5"), c.col("reflected_pmf_0") + 5);
}

TEST(Cli, IntegerSweepKeepsIntegers) {
  const Outcome o = run("fock", params_config("fock", {{"n1", {{"from", 0}, {"to", 6}, {"steps", 4}}},
                                                          {"n2", 1},
                                                          {"splitter", {{"reflectance", 0.5}}}}));
  // Rows have different lengths, so CSV refuses; JSON carries them.
  EXPECT_EQ(o.code, cli::kExitDomain);
  const Outcome j = run("fock",
                        params_config("fock", {{"n1", {{"from", 0}, {"to", 6}, {"steps", 4}}},
                                               {"n2", 1},
                                               {"splitter", {{"reflectance", 0.5}}}}),
                        cli::Format::kJson);
  ASSERT_EQ(j.code, 0) << j.err;
  const json rows = json::parse(j.out)["results"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_TRUE(rows[k]["value"].is_number_integer());
    EXPECT_EQ(rows[k]["results"]["total"]["value"].get<double>(), 2.0 * k + 1.0);
  }
}

TEST(Cli, SweepOutputIndependentOfThreadCount) {
  const json cfg = load_example("mzi_sweep.json");
  const Outcome a = run("mzi", cfg, cli::Format::kDefault, 1);
  const Outcome b = run("mzi", cfg, cli::Format::kDefault, 7);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvHeaderCarriesHashAndUnits) {
  const Outcome o = run("sagnac", load_example("sagnac.json"), cli::Format::kCsv);
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.rfind("# photonpath ", 0), 0u);
  EXPECT_NE(o.out.find("input_hash="), std::string::npos);
  EXPECT_NE(o.out.find("# column phase: rad"), std::string::npos);
  EXPECT_EQ(parse_csv(o.out).rows.size(), 1u);
}

TEST(Cli, CoherenceWarningIsReported) {
  const Outcome o = run("mzi", load_example("mzi.json"));
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(json::parse(o.out)["warnings"].size(), 1u);
}

// --- errors -----------------------------------------------------------------

void expect_config_error(const Outcome& o, const std::string& field) {
  EXPECT_EQ(o.code, cli::kExitConfig) << o.out;
  EXPECT_NE(o.err.find(field), std::string::npos) << o.err;
  EXPECT_TRUE(o.out.empty());
}

TEST(CliErrors, UnknownFieldIsNamed) {
  json cfg = load_example("fock.json");
  cfg["params"]["splitter"]["reflectanse"] = 0.5;
  expect_config_error(run("fock", cfg), "params.splitter.reflectanse");
  cfg = load_example("fock.json");
  cfg["extra"] = 1;
  expect_config_error(run("fock", cfg), "extra");
}

TEST(CliErrors, WrongTypeIsNamed) {
  json cfg = load_example("fock.json");
  cfg["params"]["n1"] = "one";
  expect_config_error(run("fock", cfg), "params.n1");
  cfg["params"]["n1"] = 1.5;
  expect_config_error(run("fock", cfg), "params.n1");
  cfg = load_example("layers_front.json");
  cfg["params"]["layers"][1]["d"] = json::array({1, 2});
  expect_config_error(run("layers", cfg), "params.layers[1].d");
}

TEST(CliErrors, MissingFieldIsNamed) {
  json cfg = load_example("sagnac.json");
  cfg["params"].erase("M2");
  expect_config_error(run("sagnac", cfg), "params.M2");
  expect_config_error(run("sagnac", json{{"command", "sagnac"}}), "params");
}

TEST(CliErrors, OutOfRangeIsNamed) {
  json cfg = load_example("hom_sweep.json");
  cfg["params"]["splitter"]["reflectance"] = 1.5;
  expect_config_error(run("hom", cfg), "params.splitter.reflectance");
  cfg = load_example("sheet.json");
  cfg["params"]["wavelength"] = -1.0;
  expect_config_error(run("sheet", cfg), "params.wavelength");
}

TEST(CliErrors, TwoSweepsAreRejected) {
  json cfg = load_example("mzi_sweep.json");
  cfg["params"]["phi2"] = {{"from", 0.0}, {"to", 1.0}, {"steps", 3}};
  expect_config_error(run("mzi", cfg), "params.phi");
}

TEST(CliErrors, CommandMismatchAndBadJson) {
  expect_config_error(run("hom", load_example("fock.json")), "command");
  cli::Invocation inv;
  inv.command = "fock";
  std::ostringstream out, err;
  EXPECT_EQ(cli::run_text(inv, "{\"params\": ", out, err), cli::kExitConfig);
  EXPECT_NE(err.str().find("not valid JSON"), std::string::npos);
}

TEST(CliErrors, UnphysicalSplitterIsDomainError) {
  const json cfg = params_config("splitter", {{"splitter",
                                                 {{"rho", {0.8, 0.0}},
                                                  {"tau", {0.0, 0.8}},
                                                  {"rho_prime", {0.8, 0.0}},
                                                  {"tau_prime", {0.0, 0.8}}}}});
  const Outcome o = run("splitter", cfg);
  EXPECT_EQ(o.code, cli::kExitDomain);
  EXPECT_NE(o.err.find("domain error"), std::string::npos);
  // The schema is fine, so validation alone passes.
  EXPECT_EQ(run("splitter", cfg, cli::Format::kDefault, 1, true).code, 0);
}

TEST(CliErrors, InvalidModeIsDomainError) {
  json cfg = load_example("states.json");
  cfg["params"]["mode"]["polarization"] = json::array({json::array({0.0, 0.0}), json::array({0.0, 0.0}), 1.0});
  EXPECT_EQ(run("states", cfg).code, cli::kExitDomain);
}

TEST(Cli, ValidateOnlyProducesEnvelope) {
  const Outcome o = run("diffract", load_example("diffract.json"), cli::Format::kDefault, 1, true);
  ASSERT_EQ(o.code, 0) << o.err;
  const json out = json::parse(o.out);
  EXPECT_TRUE(out["valid"].get<bool>());
  EXPECT_FALSE(out.contains("results"));
}

// --- argument parsing ---------------------------------------------------------

TEST(CliArgs, UsageErrorsExitOne) {
  EXPECT_EQ(run_args({"photonpath"}).code, cli::kExitUsage);
  EXPECT_EQ(run_args({"photonpath", "fock"}).code, cli::kExitUsage);
  EXPECT_EQ(run_args({"photonpath", "nosuch", "--config", "x.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run_args({"photonpath", "fock", "--config", "x.json", "--format", "xml"}).code, cli::kExitUsage);
}

TEST(CliArgs, HelpExitsZero) {
  const Outcome o = run_args({"photonpath", "--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("--config"), std::string::npos);
}

TEST(CliArgs, MissingConfigFileIsConfigError) {
  EXPECT_EQ(run_args({"photonpath", "fock", "--config", "/nonexistent/photonpath.json"}).code, cli::kExitConfig);
}

TEST(CliArgs, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "photonpath_cli_test_out.csv";
  const std::string config = std::string(PHOTONPATH_EXAMPLES_DIR) + "/hom_sweep.json";
  const Outcome o = run_args({"photonpath", "hom", "--config", config, "--out", path.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_EQ(parse_csv(text.str()).rows.size(), 21u);
  std::filesystem::remove(path);
}

}  // namespace

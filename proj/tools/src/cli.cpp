#include "photonpath_cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "commands.hpp"

namespace photonpath::cli {

namespace {

struct Sweep {
  std::vector<std::string> path;  // keys (or list indices) below params
  std::string name;               // dotted form
  std::vector<Json> values;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

bool is_range(const Json& v) {
  return v.is_object() && v.size() == 3 && v.contains("from") && v.contains("to") && v.contains("steps");
}

void find_ranges(const Json& v, std::vector<std::string>& path, std::vector<std::vector<std::string>>& found) {
  if (is_range(v)) {
    found.push_back(path);
    return;
  }
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      path.push_back(it.key());
      find_ranges(it.value(), path, found);
      path.pop_back();
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      path.push_back("[" + std::to_string(i) + "]");
      find_ranges(v[i], path, found);
      path.pop_back();
    }
  }
}

std::string dotted(const std::vector<std::string>& path) {
  std::string out = "params";
  for (const auto& p : path) out += (p.front() == '[' ? "" : ".") + p;
  return out;
}

Json& at_path(Json& root, const std::vector<std::string>& path) {
  Json* v = &root;
  for (const auto& p : path) v = p.front() == '[' ? &(*v)[std::stoul(p.substr(1))] : &(*v)[p];
  return *v;
}

std::optional<Sweep> detect_sweep(const Json& params) {
  std::vector<std::string> path;
  std::vector<std::vector<std::string>> found;
  find_ranges(params, path, found);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) {
    throw ConfigError(dotted(found[1]), "only one parameter may be swept (also swept: " + dotted(found[0]) + ")");
  }
  Sweep s;
  s.path = found[0];
  s.name = dotted(s.path);
  Json copy = params;
  const Json& r = at_path(copy, s.path);
  const double from = json_number(r["from"], s.name + ".from");
  const double to = json_number(r["to"], s.name + ".to");
  if (!r["steps"].is_number_integer()) throw ConfigError(s.name + ".steps", "expected an integer");
  const long long steps = r["steps"].get<long long>();
  if (steps < 1 || steps > 1'000'000) throw ConfigError(s.name + ".steps", "must lie in [1, 1000000]");
  // Integer endpoints with an integral stride keep integer values, so counts can be swept.
  const bool integral = r["from"].is_number_integer() && r["to"].is_number_integer() &&
                        (steps == 1 || (r["to"].get<long long>() - r["from"].get<long long>()) % (steps - 1) == 0);
  for (long long i = 0; i < steps; ++i) {
    if (integral) {
      const long long a = r["from"].get<long long>(), b = r["to"].get<long long>();
      s.values.push_back(steps == 1 ? a : a + (b - a) / (steps - 1) * i);
    } else {
      s.values.push_back(steps == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
  }
  return s;
}

struct Config {
  Json params;
  Format format = Format::kDefault;
  std::string out_path;
  std::string hash;
};

Config parse_config(const Invocation& inv, const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("<root>", std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("<root>", "expected a table");
  Config c;
  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    if (key == "command") {
      if (!it->is_string() || it->get<std::string>() != inv.command) {
        throw ConfigError("command", "config is for '" + (it->is_string() ? it->get<std::string>() : std::string("?")) +
                                         "' but the command line asks for '" + inv.command + "'");
      }
    } else if (key == "params") {
      c.params = *it;
    } else if (key == "output") {
      const Params out(*it, "output");
      if (out.has("format")) c.format = out.choice("format", {"json", "csv"}) == "json" ? Format::kJson : Format::kCsv;
      if (out.has("path")) {
        const Json& p = out.raw("path");
        if (!p.is_string() || p.get<std::string>().empty()) throw ConfigError("output.path", "expected a file name");
        c.out_path = p.get<std::string>();
      }
      out.finish();
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  if (c.params.is_null()) throw ConfigError("params", "required field is missing");
  if (!c.params.is_object()) throw ConfigError("params", "expected a table");
  if (inv.format != Format::kDefault) c.format = inv.format;
  if (!inv.out_path.empty()) c.out_path = inv.out_path;
  // Canonical form: keys sorted, no whitespace.
  c.hash = sha256_hex(inv.command + "\n" + nlohmann::json::parse(text).dump());
  return c;
}

Runner prepare(const Command& cmd, const Json& params) { return cmd.prepare(Params(params, "params")); }

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

Json envelope(const std::string& command, const Config& c) {
  Json env;
  env["command"] = command;
  env["input_hash"] = c.hash;
  env["version"] = library_version();
  return env;
}

std::string json_output(const std::string& command, const Config& c, const Results& r) {
  Json env = envelope(command, c);
  env["results"] = r.results();
  env["residuals"] = r.residuals();
  env["warnings"] = r.warnings();
  return env.dump(2) + "\n";
}

std::string csv_output(const std::string& command, const Config& c, const std::optional<Sweep>& sweep,
                       const std::vector<Results>& rows) {
  std::ostringstream os;
  os << "# photonpath " << library_version() << " command=" << command << " input_hash=" << c.hash << "\n";
  std::vector<std::string> warnings;
  for (const Results& r : rows)
    for (const auto& w : r.warnings())
      if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
  for (const auto& w : warnings) os << "# warning: " << w << "\n";
  const auto first = rows.front().columns();
  std::vector<std::string> names;
  if (sweep) {
    os << "# column " << sweep->name << ": swept parameter\n";
    names.push_back(sweep->name);
  }
  for (const auto& col : first) {
    os << "# column " << col.name << ": " << (col.unit.empty() ? "1" : col.unit) << "\n";
    names.push_back(col.name);
  }
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto cols = rows[k].columns();
    if (cols.size() != first.size()) {
      throw DomainError("sweep row " + std::to_string(k) + " has " + std::to_string(cols.size()) +
                        " columns, the first row has " + std::to_string(first.size()));
    }
    bool lead = true;
    if (sweep) {
      os << format_number(sweep->values[k].get<double>());
      lead = false;
    }
    for (const auto& col : cols) {
      os << (lead ? "" : ",") << format_number(col.value);
      lead = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string sweep_json_output(const std::string& command, const Config& c, const Sweep& sweep,
                              const std::vector<Results>& rows) {
  Json env = envelope(command, c);
  Json table = Json::array();
  std::vector<std::string> warnings;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    table.push_back(Json{{"value", sweep.values[k]}, {"results", rows[k].results()}, {"residuals", rows[k].residuals()}});
    for (const auto& w : rows[k].warnings())
      if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
  }
  env["results"] = Json{{"swept", sweep.name}, {"rows", table}};
  env["residuals"] = Json::object();
  env["warnings"] = warnings;
  return env.dump(2) + "\n";
}

std::vector<Results> run_sweep(const Command& cmd, const Json& params, const Sweep& sweep, int threads) {
  const std::size_t n = sweep.values.size();
  std::vector<Results> rows(n);
  std::vector<std::exception_ptr> errors(n);
  auto work = [&](std::size_t k) {
    try {
      Json p = params;
      at_path(p, sweep.path) = sweep.values[k];
      prepare(cmd, p)(rows[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), n);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < n; k += workers) work(k);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Command& c : commands()) v.push_back(c.name);
    return v;
  }();
  return names;
}

int run_text(const Invocation& inv, const std::string& text, std::ostream& out, std::ostream& err) {
  const Command* cmd = find_command(inv.command);
  if (!cmd) {
    err << "error: unknown command '" << inv.command << "'\n";
    return kExitUsage;
  }
  std::string output;
  std::string out_path;
  try {
    const Config c = parse_config(inv, text);
    out_path = c.out_path;
    const std::optional<Sweep> sweep = detect_sweep(c.params);
    if (sweep) {
      // Schema check against the first value; every row is re-checked when run.
      Json p = c.params;
      at_path(p, sweep->path) = sweep->values.front();
      prepare(*cmd, p);
    } else {
      prepare(*cmd, c.params);
    }
    if (inv.validate_only) {
      Json env = envelope(inv.command, c);
      env["valid"] = true;
      output = env.dump(2) + "\n";
    } else if (sweep) {
      const std::vector<Results> rows = run_sweep(*cmd, c.params, *sweep, inv.threads);
      output = c.format == Format::kJson ? sweep_json_output(inv.command, c, *sweep, rows)
                                         : csv_output(inv.command, c, sweep, rows);
    } else {
      Results r;
      prepare(*cmd, c.params)(r);
      output = c.format == Format::kCsv ? csv_output(inv.command, c, std::nullopt, {r})
                                        : json_output(inv.command, c, r);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }
  if (out_path.empty()) {
    out << output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << output;
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  std::ifstream f(inv.config_path, std::ios::binary);
  if (!f) {
    err << "config error: " << inv.config_path << ": cannot read config file\n";
    return kExitConfig;
  }
  std::ostringstream text;
  text << f.rdbuf();
  return run_text(inv, text.str(), out, err);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon path, scattering and diffraction calculations driven by JSON configs", "photonpath"};
  Invocation inv;
  std::string format = "default";
  app.add_option("command", inv.command, "Operation to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--config", inv.config_path, "JSON config file")->required();
  app.add_option("--out", inv.out_path, "Write results here instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--validate-only", inv.validate_only, "Parse and schema-check the config, then stop");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  inv.format = format == "json" ? Format::kJson : format == "csv" ? Format::kCsv : Format::kDefault;

  inv.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("PHOTONPATH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096) {
      err << "usage error: PHOTONPATH_THREADS must be a positive integer\n";
      return kExitUsage;
    }
    inv.threads = std::min(inv.threads, static_cast<int>(v));
  }
  return run(inv, out, err);
}

}  // namespace photonpath::cli

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "photonpath/photonpath.hpp"
#include "photonpath_cli/cli.hpp"

namespace photonpath::cli {

using Json = nlohmann::ordered_json;

// Typed, path-aware reader over one JSON table. Every accessor records the
// key; finish() rejects keys nobody asked for.
class Params {
 public:
  Params(const Json& table, std::string path);

  const std::string& path() const { return path_; }
  std::string field(const std::string& key) const;
  bool has(const std::string& key) const;

  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  double positive(const std::string& key) const;
  double non_negative(const std::string& key) const;
  int integer(const std::string& key) const;
  int integer(const std::string& key, int fallback) const;
  bool boolean(const std::string& key, bool fallback) const;
  cdouble complex(const std::string& key) const;
  cdouble complex(const std::string& key, cdouble fallback) const;
  Vec3 vec3(const std::string& key) const;
  Vec3 vec3(const std::string& key, const Vec3& fallback) const;
  std::string choice(const std::string& key, const std::vector<std::string>& allowed) const;
  std::string choice(const std::string& key, const std::vector<std::string>& allowed,
                     const std::string& fallback) const;
  Params table(const std::string& key) const;
  std::vector<Params> table_list(const std::string& key) const;
  const Json& raw(const std::string& key) const;

  void finish() const;

 private:
  const Json* lookup(const std::string& key) const;

  const Json* table_;
  std::string path_;
  mutable std::set<std::string> used_;
};

double json_number(const Json& v, const std::string& field);
cdouble json_complex(const Json& v, const std::string& field);

// Shared schema pieces.
WaveParams read_wave(const Params& p);
SplitterCoefficients read_splitter(const Params& p);
SplitterCoefficients read_splitter_or_default(const Params& p, const std::string& key);
CMat3 read_tensor(const Params& p);
Direction read_direction(const Params& p, const std::string& theta_key, const std::string& phi_key);
int read_helicity(const Params& p, const std::string& key);

}  // namespace photonpath::cli

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "params.hpp"

namespace photonpath::cli {

// Output of one command run. Every numeric entry is checked for finiteness
// on insertion; a non-finite value is a domain error.
class Results {
 public:
  void value(const std::string& name, double v, const std::string& unit);
  void value(const std::string& name, cdouble v, const std::string& unit);
  void value(const std::string& name, const Vec3& v, const std::string& unit);
  void value(const std::string& name, const std::vector<double>& v, const std::string& unit);
  void value(const std::string& name, const std::vector<cdouble>& v, const std::string& unit);
  void flag(const std::string& name, bool v);
  void text(const std::string& name, const std::string& v);
  void table(const std::string& name, Json rows);
  void residual(const std::string& name, double v);
  void warn(const std::string& w) { warnings_.push_back(w); }

  const Json& results() const { return results_; }
  const Json& residuals() const { return residuals_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  struct Column {
    std::string name;
    std::string unit;
    double value;
  };
  // Scalar view for CSV rows: complex values ([re, im]) split into _re/_im,
  // lists indexed, flags as 0/1, residuals prefixed with "residual_".
  std::vector<Column> columns() const;

 private:
  void put(const std::string& name, Json v, const std::string& unit);

  Json results_ = Json::object();
  std::set<std::string> complex_;
  Json residuals_ = Json::object();
  std::vector<std::string> warnings_;
};

Json complex_json(cdouble z);

}  // namespace photonpath::cli

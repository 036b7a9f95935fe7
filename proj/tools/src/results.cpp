#include "results.hpp"

#include <cmath>

namespace photonpath::cli {

namespace {

void check_finite(const std::string& name, double v) {
  if (!std::isfinite(v)) throw DomainError("result '" + name + "' is not finite");
}

void flatten(const std::string& name, const Json& v, bool complex, const std::string& unit,
             std::vector<Results::Column>& out) {
  if (v.is_boolean()) {
    out.push_back({name, unit, v.get<bool>() ? 1.0 : 0.0});
  } else if (v.is_number()) {
    out.push_back({name, unit, v.get<double>()});
  } else if (complex && v.is_array() && v.size() == 2 && v[0].is_number()) {
    out.push_back({name + "_re", unit, v[0].get<double>()});
    out.push_back({name + "_im", unit, v[1].get<double>()});
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(name + "_" + std::to_string(i), v[i], complex, unit, out);
  }
}

}  // namespace

Json complex_json(cdouble z) { return Json::array({z.real(), z.imag()}); }

void Results::put(const std::string& name, Json v, const std::string& unit) {
  results_[name] = Json{{"value", std::move(v)}, {"unit", unit}};
}

void Results::value(const std::string& name, double v, const std::string& unit) {
  check_finite(name, v);
  put(name, v, unit);
}

void Results::value(const std::string& name, cdouble v, const std::string& unit) {
  check_finite(name, v.real());
  check_finite(name, v.imag());
  put(name, complex_json(v), unit);
  complex_.insert(name);
}

void Results::value(const std::string& name, const Vec3& v, const std::string& unit) {
  value(name, std::vector<double>{v.x(), v.y(), v.z()}, unit);
}

void Results::value(const std::string& name, const std::vector<double>& v, const std::string& unit) {
  Json arr = Json::array();
  for (double x : v) {
    check_finite(name, x);
    arr.push_back(x);
  }
  put(name, std::move(arr), unit);
}

void Results::value(const std::string& name, const std::vector<cdouble>& v, const std::string& unit) {
  Json arr = Json::array();
  for (cdouble z : v) {
    check_finite(name, z.real());
    check_finite(name, z.imag());
    arr.push_back(complex_json(z));
  }
  put(name, std::move(arr), unit);
  complex_.insert(name);
}

void Results::flag(const std::string& name, bool v) { put(name, v, "1"); }

void Results::text(const std::string& name, const std::string& v) { put(name, v, ""); }

void Results::table(const std::string& name, Json rows) {
  const auto walk = [&](const auto& self, const Json& v) -> void {
    if (v.is_number()) check_finite(name, v.get<double>());
    if (v.is_structured())
      for (const auto& c : v) self(self, c);
  };
  walk(walk, rows);
  put(name, std::move(rows), "");
}

void Results::residual(const std::string& name, double v) {
  check_finite(name, v);
  residuals_[name] = v;
}

std::vector<Results::Column> Results::columns() const {
  std::vector<Column> out;
  for (auto it = results_.begin(); it != results_.end(); ++it) {
    flatten(it.key(), it.value()["value"], complex_.count(it.key()) > 0, it.value()["unit"].get<std::string>(), out);
  }
  for (auto it = residuals_.begin(); it != residuals_.end(); ++it) {
    out.push_back({"residual_" + it.key(), "1", it.value().get<double>()});
  }
  return out;
}

}  // namespace photonpath::cli

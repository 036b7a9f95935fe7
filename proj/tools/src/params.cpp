#include "params.hpp"

#include <cmath>

namespace photonpath::cli {

namespace {

std::string kind_of(const Json& v) {
  if (v.is_null()) return "null";
  if (v.is_boolean()) return "boolean";
  if (v.is_number()) return "number";
  if (v.is_string()) return "string";
  if (v.is_array()) return "array";
  return "table";
}

}  // namespace

double json_number(const Json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number, got " + kind_of(v));
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

cdouble json_complex(const Json& v, const std::string& field) {
  if (v.is_number()) return json_number(v, field);
  if (!v.is_array() || v.size() != 2) {
    throw ConfigError(field, "expected a complex number [re, im], got " + kind_of(v));
  }
  return {json_number(v[0], field + "[0]"), json_number(v[1], field + "[1]")};
}

Params::Params(const Json& table, std::string path) : table_(&table), path_(std::move(path)) {
  if (!table.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected a table, got " + kind_of(table));
}

std::string Params::field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

bool Params::has(const std::string& key) const { return table_->contains(key); }

const Json* Params::lookup(const std::string& key) const {
  used_.insert(key);
  auto it = table_->find(key);
  return it == table_->end() ? nullptr : &*it;
}

const Json& Params::raw(const std::string& key) const {
  const Json* v = lookup(key);
  if (!v) throw ConfigError(field(key), "required field is missing");
  return *v;
}

double Params::number(const std::string& key) const { return json_number(raw(key), field(key)); }

double Params::number(const std::string& key, double fallback) const {
  const Json* v = lookup(key);
  return v ? json_number(*v, field(key)) : fallback;
}

double Params::positive(const std::string& key) const {
  const double x = number(key);
  if (!(x > 0.0)) throw ConfigError(field(key), "must be positive");
  return x;
}

double Params::non_negative(const std::string& key) const {
  const double x = number(key);
  if (!(x >= 0.0)) throw ConfigError(field(key), "must be non-negative");
  return x;
}

int Params::integer(const std::string& key) const {
  const Json& v = raw(key);
  if (!v.is_number_integer()) throw ConfigError(field(key), "expected an integer, got " + kind_of(v));
  const auto x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) throw ConfigError(field(key), "integer out of range");
  return static_cast<int>(x);
}

int Params::integer(const std::string& key, int fallback) const {
  return has(key) ? integer(key) : fallback;
}

bool Params::boolean(const std::string& key, bool fallback) const {
  const Json* v = lookup(key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ConfigError(field(key), "expected a boolean, got " + kind_of(*v));
  return v->get<bool>();
}

cdouble Params::complex(const std::string& key) const { return json_complex(raw(key), field(key)); }

cdouble Params::complex(const std::string& key, cdouble fallback) const {
  const Json* v = lookup(key);
  return v ? json_complex(*v, field(key)) : fallback;
}

Vec3 Params::vec3(const std::string& key) const {
  const Json& v = raw(key);
  if (!v.is_array() || v.size() != 3) throw ConfigError(field(key), "expected a 3-vector [x, y, z]");
  return {json_number(v[0], field(key) + "[0]"), json_number(v[1], field(key) + "[1]"),
          json_number(v[2], field(key) + "[2]")};
}

Vec3 Params::vec3(const std::string& key, const Vec3& fallback) const {
  return has(key) ? vec3(key) : fallback;
}

std::string Params::choice(const std::string& key, const std::vector<std::string>& allowed) const {
  const Json& v = raw(key);
  if (!v.is_string()) throw ConfigError(field(key), "expected a string, got " + kind_of(v));
  const auto s = v.get<std::string>();
  for (const auto& a : allowed)
    if (a == s) return s;
  std::string list;
  for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
  throw ConfigError(field(key), "'" + s + "' is not one of {" + list + "}");
}

std::string Params::choice(const std::string& key, const std::vector<std::string>& allowed,
                           const std::string& fallback) const {
  return has(key) ? choice(key, allowed) : fallback;
}

Params Params::table(const std::string& key) const { return Params(raw(key), field(key)); }

std::vector<Params> Params::table_list(const std::string& key) const {
  const Json& v = raw(key);
  if (!v.is_array()) throw ConfigError(field(key), "expected a list of tables, got " + kind_of(v));
  std::vector<Params> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(v[i], field(key) + "[" + std::to_string(i) + "]");
  return out;
}

void Params::finish() const {
  for (auto it = table_->begin(); it != table_->end(); ++it) {
    if (!used_.count(it.key())) throw ConfigError(field(it.key()), "unknown field");
  }
}

WaveParams read_wave(const Params& p) {
  const double lambda = p.positive("wavelength");
  return WaveParams::from_wavelength(lambda);
}

SplitterCoefficients read_splitter(const Params& p) {
  SplitterCoefficients s;
  if (p.has("rho") || p.has("tau") || p.has("rho_prime") || p.has("tau_prime")) {
    s = {p.complex("rho"), p.complex("tau"), p.complex("rho_prime"), p.complex("tau_prime")};
  } else {
    double mod_rho;
    if (p.has("reflectance")) {
      if (p.has("mod_rho")) throw ConfigError(p.field("mod_rho"), "give either mod_rho or reflectance, not both");
      const double r = p.number("reflectance");
      if (!(r >= 0.0 && r <= 1.0)) throw ConfigError(p.field("reflectance"), "must lie in [0, 1]");
      mod_rho = std::sqrt(r);
    } else {
      mod_rho = p.number("mod_rho");
      if (!(mod_rho >= 0.0 && mod_rho <= 1.0)) throw ConfigError(p.field("mod_rho"), "must lie in [0, 1]");
    }
    s = make_symmetric_splitter(mod_rho, p.number("phi_rho", 0.0));
  }
  p.finish();
  return s;
}

SplitterCoefficients read_splitter_or_default(const Params& p, const std::string& key) {
  if (!p.has(key)) return make_symmetric_splitter(1.0 / std::sqrt(2.0), 0.0);
  return read_splitter(p.table(key));
}

CMat3 read_tensor(const Params& p) {
  const bool iso = p.has("isotropic"), full = p.has("tensor");
  if (iso == full) throw ConfigError(p.field("isotropic"), "give exactly one of isotropic or tensor");
  if (iso) return CMat3::Identity() * p.complex("isotropic");
  const Json& t = p.raw("tensor");
  const std::string f = p.field("tensor");
  if (!t.is_array() || t.size() != 3) throw ConfigError(f, "expected 3 rows of 3 complex entries");
  CMat3 m;
  for (int i = 0; i < 3; ++i) {
    const std::string row = f + "[" + std::to_string(i) + "]";
    if (!t[i].is_array() || t[i].size() != 3) throw ConfigError(row, "expected 3 complex entries");
    for (int j = 0; j < 3; ++j) m(i, j) = json_complex(t[i][j], row + "[" + std::to_string(j) + "]");
  }
  return m;
}

Direction read_direction(const Params& p, const std::string& theta_key, const std::string& phi_key) {
  return {p.number(theta_key), p.number(phi_key)};
}

int read_helicity(const Params& p, const std::string& key) {
  const int s = p.integer(key, 1);
  if (s != 1 && s != -1) throw ConfigError(p.field(key), "helicity must be +1 or -1");
  return s;
}

}  // namespace photonpath::cli

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace photonpath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;

// Malformed or schema-invalid configuration. The message starts with the
// dotted path of the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Format { kDefault, kJson, kCsv };

struct Invocation {
  std::string command;
  std::string config_path;
  std::string out_path;  // empty: write to `out`
  Format format = Format::kDefault;
  bool validate_only = false;
  int threads = 1;
};

const std::vector<std::string>& command_names();

// Runs one invocation. Results go to `out` (or the file named by
// out_path), diagnostics to `err`. Returns the process exit code.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

// Same, starting from the config text instead of a file.
int run_text(const Invocation& inv, const std::string& config_text, std::ostream& out,
             std::ostream& err);

// Argument parsing plus run(); args[0] is the program name. Reads
// PHOTONPATH_THREADS for the sweep thread cap.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace photonpath::cli

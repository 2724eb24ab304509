#pragma once

#include <map>
#include <optional>
#include <string>

namespace nlbs {

/// INI-style run configuration with sections [model], [family], [grid],
/// [tolerances].  Unknown keys are rejected; numeric values parse as 64-bit
/// reals; signs parse as +1/-1.  Command-line flags override file values.
class RunConfig {
 public:
  RunConfig() = default;

  static RunConfig from_file(const std::string& path);
  static RunConfig from_text(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> text(const std::string& key) const;
  std::optional<double> number(const std::string& key) const;
  std::optional<int> sign(const std::string& key) const;
  std::optional<int> integer(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;  // "section.key" -> raw text
};

}  // namespace nlbs

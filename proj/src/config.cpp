#include "nlbs/config.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "nlbs/errors.hpp"

namespace nlbs {

namespace {

constexpr std::array kKnownKeys = {
    "model.a",     "model.b",     "model.c",      "family.id",   "family.c1",
    "family.c2",   "family.eps",  "family.delta", "family.k",    "grid.x_lo",
    "grid.x_hi",   "grid.nx",     "grid.t0",      "grid.t1",     "grid.nt",
    "grid.safety", "tolerances.tol"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

RunConfig RunConfig::from_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw Error("config line " + std::to_string(lineno) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = section + "." + trim(line.substr(0, eq));
    bool known = false;
    for (const char* k : kKnownKeys) known = known || key == k;
    if (!known)
      throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    cfg.values_[key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

std::optional<std::string> RunConfig::text(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> RunConfig::number(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) return std::nullopt;
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(*raw, &used);
  } catch (const std::exception&) {
    throw Error("config key '" + key + "': '" + *raw + "' is not a number");
  }
  if (used != raw->size())
    throw Error("config key '" + key + "': '" + *raw + "' is not a number");
  return v;
}

std::optional<int> RunConfig::sign(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) return std::nullopt;
  if (*raw == "+1" || *raw == "1") return 1;
  if (*raw == "-1") return -1;
  throw Error("config key '" + key + "': sign must be +1 or -1, got '" + *raw + "'");
}

std::optional<int> RunConfig::integer(const std::string& key) const {
  const auto v = number(key);
  if (!v) return std::nullopt;
  const int i = static_cast<int>(*v);
  if (static_cast<double>(i) != *v)
    throw Error("config key '" + key + "' must be an integer");
  return i;
}

}  // namespace nlbs

#include "rgg/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rgg/errors.hpp"

namespace rgg::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line, section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError("config line " + std::to_string(line_no) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty() || section.find('.') != std::string::npos)
        throw ValidationError("config line " + std::to_string(line_no) + ": bad section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty() || key.find('.') != std::string::npos)
      throw ValidationError("config line " + std::to_string(line_no) + ": bad key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (c.has(full)) throw ValidationError("config line " + std::to_string(line_no) + ": duplicate key '" + full + "'");
    c.set(full, trim(line.substr(eq + 1)));
  }
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string env_name(const std::string& key) {
  std::string out = "RGG_";
  for (char ch : key) out += (ch == '.' || ch == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

void ExperimentConfig::apply_env(const std::vector<std::string>& known) {
  std::vector<std::string> keys = known;
  for (const auto& [k, v] : values_) keys.push_back(k);
  for (const auto& k : keys) {
    if (const char* v = std::getenv(env_name(k).c_str())) values_[k] = v;
  }
}

std::string ExperimentConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError("missing required field '" + key + "'");
  return it->second;
}

std::string ExperimentConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
  const std::string v = get(key);
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw ValidationError("field '" + key + "': expected a number, got '" + v + "'");
  }
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::int64_t ExperimentConfig::get_int(const std::string& key) const {
  const std::string v = get(key);
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument("trailing");
    return i;
  } catch (const std::exception&) {
    // allow 1e4 style integers
    const double d = get_double(key);
    if (d != std::floor(d)) throw ValidationError("field '" + key + "': expected an integer, got '" + v + "'");
    return static_cast<std::int64_t>(d);
  }
}

std::int64_t ExperimentConfig::get_int(const std::string& key, std::int64_t fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t ExperimentConfig::get_seed() const {
  const std::int64_t s = get_int("seed", 1);
  if (s < 0) throw ValidationError("field 'seed': must be nonnegative");
  return static_cast<std::uint64_t>(s);
}

std::vector<double> ExperimentConfig::get_list(const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(get(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("field '" + key + "': bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ValidationError("field '" + key + "': empty list");
  return out;
}

std::string ExperimentConfig::canonical() const {
  std::string out;
  for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
  return out;
}

std::string ExperimentConfig::id() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& [k, v] : values_) {
    if (k == "out" || k == "workers" || k == "format") continue;
    for (char ch : k + "=" + v + "\n") {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001b3ULL;
    }
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 15];
  return s;
}

}  // namespace rgg::cli

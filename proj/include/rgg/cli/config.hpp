#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rgg::cli {

/// Flat key/value experiment description. Keys inside a `[section]` are
/// stored as `section.key`. The command itself lives under `command`.
class ExperimentConfig {
 public:
  ExperimentConfig() = default;

  /// `key = value` lines, `[section]` headers, `#` or `;` comments.
  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  /// Environment overrides, named by env_name(key) (RGG_SEED for seed,
  /// RGG_ESTIMATE_LAMBDA for estimate.lambda). Only keys already present
  /// or listed in `known` are looked up.
  void apply_env(const std::vector<std::string>& known = {});

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  void set_default(const std::string& key, std::string value) { values_.try_emplace(key, std::move(value)); }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string get(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_seed() const;
  /// Comma-separated list of numbers.
  std::vector<double> get_list(const std::string& key) const;

  std::string command() const { return get("command", ""); }

  /// Canonical text: sorted `key = value` lines.
  std::string canonical() const;
  /// 16 hex digits of FNV-1a over the canonical text, excluding keys that
  /// do not change results (out, workers, format).
  std::string id() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;

 private:
  std::map<std::string, std::string> values_;
};

/// The process environment variable name for a key: RGG_ + upper-cased key
/// with '.' and '-' mapped to '_'.
std::string env_name(const std::string& key);

}  // namespace rgg::cli

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "screening/model.hpp"

namespace screening {

/// Raw, unvalidated content of a config document.
struct ConfigDocument {
  PayoffParams payoffs;
  GaussianSignalModel signal;
};

class ConfigParseError : public InvalidModelError {
 public:
  ConfigParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidModelError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the flat JSON form
///   {"pi", "x_q", "x_u", "c", "mu_q": [theta, gamma], "mu_u": [theta, gamma],
///    "sigma_theta", "sigma_gamma", "rho"}.
/// Malformed JSON raises ConfigParseError with a 1-based line and column;
/// missing or mistyped fields raise InvalidModelError.
ConfigDocument parse_config_document(std::string_view text);

/// Parse, validate payoffs and certify MLRP.
ModelConfig parse_config(std::string_view text);
ModelConfig load_config(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

/// Canonical serialization (fixed key order, shortest round-trip numbers).
std::string serialize_config(const PayoffParams& payoffs, const GaussianSignalModel& signal);
std::string serialize_config(const ModelConfig& config);

}  // namespace screening

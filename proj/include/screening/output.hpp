#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace screening {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_number(double value);

/// Accumulates a CSV document; cells are written verbatim (no quoting is
/// needed for the numeric and identifier columns this project emits).
class CsvDocument {
 public:
  explicit CsvDocument(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  const std::string& text() const { return text_; }
  std::size_t rows() const { return rows_; }

 private:
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string text_;
};

/// Writes through a temporary sibling and renames over the target, so a
/// reader never observes a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string content_digest(std::string_view bytes);

struct RunManifest {
  std::string config_digest;
  std::string tool_version;
  std::vector<std::uint64_t> seeds;
  std::string command_line;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;
  std::vector<std::string> outputs;

  std::string to_json() const;
};

std::string utc_timestamp();

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kManifestName = "manifest.json";

}  // namespace screening

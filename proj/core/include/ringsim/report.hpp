#pragma once

#include <string>
#include <vector>

namespace ringsim {

/// Deterministic float formatting for reports ("%.12g").
std::string format_double(double v);

/// Minimal CSV assembly: comment header lines, one column row, data rows.
class CsvBuilder {
 public:
  void comment(const std::string& line);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

/// Write a file, creating parent directories. Throws IoError.
void write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Collects output artifacts and writes a manifest.json listing each file
/// with its SHA-256 content hash. Identical runs produce identical manifests.
class Manifest {
 public:
  explicit Manifest(std::string out_dir);

  /// Write content to out_dir/name and record its hash.
  void emit(const std::string& name, const std::string& content);

  /// Write out_dir/manifest.json (sorted by file name).
  void finalize(const std::string& command);

  const std::string& out_dir() const { return out_dir_; }

 private:
  std::string out_dir_;
  std::vector<std::pair<std::string, std::string>> files_;  // name, sha256
};

}  // namespace ringsim

#include "ringsim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringsim/errors.hpp"
#include "ringsim/sha256.hpp"

namespace ringsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void CsvBuilder::comment(const std::string& line) {
  text_ += "# " + line + "\n";
}

void CsvBuilder::header(const std::vector<std::string>& columns) {
  row(columns);
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + p.parent_path().string() + "'");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Manifest::Manifest(std::string out_dir) : out_dir_(std::move(out_dir)) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir_, ec);
  if (ec) throw IoError("cannot create output directory '" + out_dir_ + "'");
}

void Manifest::emit(const std::string& name, const std::string& content) {
  write_file(out_dir_ + "/" + name, content);
  files_.emplace_back(name, sha256_hex(content));
}

void Manifest::finalize(const std::string& command) {
  std::sort(files_.begin(), files_.end());
  std::string json = "{\n  \"command\": \"" + command + "\",\n  \"files\": [\n";
  for (std::size_t i = 0; i < files_.size(); ++i) {
    json += "    {\"name\": \"" + files_[i].first + "\", \"sha256\": \"" +
            files_[i].second + "\"}";
    json += (i + 1 < files_.size()) ? ",\n" : "\n";
  }
  json += "  ]\n}\n";
  write_file(out_dir_ + "/manifest.json", json);
}

}  // namespace ringsim

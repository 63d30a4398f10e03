#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace zeta_arr {

// Content-addressed store of command outputs. Each entry is
// <dir>/<key>.json whose first line is the SHA-256 of the payload that
// follows; entries failing that check are treated as misses. Filesystem
// problems are reported to `log` and never abort the computation.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::ostream& log);

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& payload) const;

  static std::string make_key(const std::string& canonical_job);

 private:
  std::filesystem::path entry_path(const std::string& key) const;

  std::filesystem::path dir_;
  std::ostream& log_;
};

std::string sha256_hex(const std::string& data);

}  // namespace zeta_arr

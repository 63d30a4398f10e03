#include "zeta_arr/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <system_error>

namespace zeta_arr {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

ResultCache::ResultCache(std::filesystem::path dir, std::ostream& log)
    : dir_(std::move(dir)), log_(log) {}

std::string ResultCache::make_key(const std::string& canonical_job) {
  return sha256_hex(canonical_job);
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
  return dir_ / (key + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  const auto path = entry_path(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    log_ << "warning: cannot read cache entry " << path.string() << "\n";
    return std::nullopt;
  }
  std::string checksum;
  std::getline(in, checksum);
  std::ostringstream rest;
  rest << in.rdbuf();
  std::string payload = rest.str();
  if (checksum != sha256_hex(payload)) {
    log_ << "warning: corrupted cache entry " << path.string() << ", recomputing\n";
    return std::nullopt;
  }
  return payload;
}

void ResultCache::store(const std::string& key, const std::string& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    log_ << "warning: cannot create cache directory " << dir_.string() << ": " << ec.message()
         << "\n";
    return;
  }
  const auto target = entry_path(key);
  std::random_device rd;
  const auto temp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << sha256_hex(payload) << "\n" << payload;
    if (!out) {
      log_ << "warning: cannot write cache entry " << temp.string() << "\n";
      std::filesystem::remove(temp, ec);
      return;
    }
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    log_ << "warning: cannot install cache entry " << target.string() << ": " << ec.message()
         << "\n";
    std::filesystem::remove(temp, ec);
  }
}

}  // namespace zeta_arr

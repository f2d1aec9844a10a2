#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

namespace klein {

/// Content-addressed result cache. Each entry is a file named by the 64-bit
/// FNV-1a hash of its key; the first line of the file repeats the key (so a
/// hash collision degrades to a miss, never to a wrong answer) and the rest
/// is the payload, stored byte-exactly.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::optional<std::string> lookup(const std::string& key) const {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::string stored_key;
    if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
    std::string payload((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    return payload;
  }

  void store(const std::string& key, const std::string& payload) const {
    auto target = path_for(key);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << key << '\n' << payload;
    }
    std::filesystem::rename(tmp, target);
  }

  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::filesystem::path path_for(const std::string& key) const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / (std::string(buf) + ".json");
  }

  std::filesystem::path dir_;
};

}  // namespace klein

#pragma once

// On-disk result cache keyed by content hashes.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cgw::cli {

std::string sha256_hex(std::string_view data);

// One entry per file: a short text header (key, version, timestamp, payload
// checksum) followed by the payload bytes.
class Cache {
 public:
  // An empty directory disables the cache. A directory that cannot be
  // created or written disables it too, after a warning on warn.
  Cache(std::filesystem::path dir, std::string version, std::ostream& warn);

  bool enabled() const noexcept { return enabled_; }
  const std::filesystem::path& directory() const noexcept { return dir_; }

  std::string key(std::string_view descriptor, std::string_view operation,
                  std::string_view parameters) const;
  std::filesystem::path path_of(const std::string& key) const;

  // nullopt on a miss; corrupted or mismatched entries are reported on warn
  // and treated as misses.
  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, std::string_view payload) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream& warn_;
  bool enabled_ = false;
};

}  // namespace cgw::cli

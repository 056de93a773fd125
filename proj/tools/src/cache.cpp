#include "cgw_cli/cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace cgw::cli {

namespace {

constexpr std::string_view kMagic = "cgw-cache-entry 1";

// Advisory lock on a sidecar file, held for the lifetime of the object.
class EntryLock {
 public:
  EntryLock(const std::filesystem::path& path, int op) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ >= 0 && ::flock(fd_, op) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~EntryLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  EntryLock(const EntryLock&) = delete;
  EntryLock& operator=(const EntryLock&) = delete;

 private:
  int fd_ = -1;
};

std::string utc_timestamp() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<std::string> header_field(std::string_view line,
                                        std::string_view name) {
  if (line.size() > name.size() + 2 && line.substr(0, name.size()) == name &&
      line.substr(name.size(), 2) == ": ") {
    return std::string(line.substr(name.size() + 2));
  }
  return std::nullopt;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir, std::string version, std::ostream& warn)
    : dir_(std::move(dir)), version_(std::move(version)), warn_(warn) {
  if (dir_.empty()) {
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  auto probe = dir_ / (".probe-" + std::to_string(::getpid()));
  {
    std::ofstream f(probe);
    enabled_ = !ec && f.good() && (f << "ok").good();
  }
  std::filesystem::remove(probe, ec);
  if (!enabled_) {
    warn_ << "warning: cache directory '" << dir_.string()
          << "' is not writable; continuing without cache\n";
  }
}

std::string Cache::key(std::string_view descriptor, std::string_view operation,
                       std::string_view parameters) const {
  std::string material = "version=" + version_ + "\n";
  material += "descriptor=" + std::string(descriptor) + "\n";
  material += "operation=" + std::string(operation) + "\n";
  material += "parameters=" + std::string(parameters) + "\n";
  return sha256_hex(material);
}

std::filesystem::path Cache::path_of(const std::string& key) const {
  return dir_ / (key + ".entry");
}

std::optional<std::string> Cache::load(const std::string& key) const {
  if (!enabled_) {
    return std::nullopt;
  }
  auto path = path_of(key);
  EntryLock lock(dir_ / (key + ".lock"), LOCK_SH);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  auto reject = [&](const std::string& why) -> std::optional<std::string> {
    warn_ << "warning: cache entry " << path.string() << " " << why
          << "; recomputing\n";
    return std::nullopt;
  };
  auto end = text.find("\n\n");
  if (end == std::string::npos) {
    return reject("has no header");
  }
  std::istringstream header(text.substr(0, end));
  std::string line;
  std::optional<std::string> k, version, checksum, size;
  std::getline(header, line);
  if (line != kMagic) {
    return reject("has an unknown format");
  }
  while (std::getline(header, line)) {
    if (auto v = header_field(line, "key")) k = v;
    if (auto v = header_field(line, "version")) version = v;
    if (auto v = header_field(line, "checksum")) checksum = v;
    if (auto v = header_field(line, "size")) size = v;
  }
  std::string payload = text.substr(end + 2);
  if (!k || *k != key || !version || *version != version_) {
    return reject("belongs to another key or version");
  }
  if (!checksum || *checksum != sha256_hex(payload) || !size ||
      *size != std::to_string(payload.size())) {
    return reject("failed its checksum");
  }
  return payload;
}

void Cache::store(const std::string& key, std::string_view payload) const {
  if (!enabled_) {
    return;
  }
  EntryLock lock(dir_ / (key + ".lock"), LOCK_EX);
  auto path = path_of(key);
  auto tmp = dir_ / (key + ".tmp-" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << kMagic << "\n"
        << "key: " << key << "\n"
        << "version: " << version_ << "\n"
        << "timestamp: " << utc_timestamp() << "\n"
        << "checksum: " << sha256_hex(payload) << "\n"
        << "size: " << payload.size() << "\n\n"
        << payload;
    if (!out.good()) {
      warn_ << "warning: could not write cache entry " << path.string() << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    warn_ << "warning: could not write cache entry " << path.string() << "\n";
  }
}

}  // namespace cgw::cli

#include "burnloop/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "burnloop/config.hpp"

namespace burnloop {

namespace config {

namespace {
std::mutex mu;
int max_order = 1024;
std::string cache_override;
int cache_flag = -1;  // -1 unset, 0 off, 1 on
}  // namespace

int max_group_order() {
  std::lock_guard<std::mutex> lk(mu);
  return max_order;
}
void set_max_group_order(int bound) {
  std::lock_guard<std::mutex> lk(mu);
  max_order = bound;
}

std::string cache_dir() {
  {
    std::lock_guard<std::mutex> lk(mu);
    if (!cache_override.empty()) return cache_override;
  }
  if (const char* d = std::getenv("BURNLOOP_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return std::string(x) + "/burnloop";
  if (const char* h = std::getenv("HOME")) return std::string(h) + "/.cache/burnloop";
  return ".burnloop-cache";
}
void set_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lk(mu);
  cache_override = dir;
}

bool cache_enabled() {
  {
    std::lock_guard<std::mutex> lk(mu);
    if (cache_flag >= 0) return cache_flag;
  }
  if (const char* v = std::getenv("BURNLOOP_NO_CACHE"))
    if (v[0] == '1') return false;
  return true;
}
void set_cache_enabled(bool on) {
  std::lock_guard<std::mutex> lk(mu);
  cache_flag = on ? 1 : 0;
}

}  // namespace config

namespace cache {

std::optional<std::string> load(const std::string& key) {
  if (!config::cache_enabled()) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(config::cache_dir()) / (key + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

void store(const std::string& key, const std::string& payload) {
  if (!config::cache_enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(config::cache_dir(), ec);
  if (ec) return;
  std::filesystem::path p = std::filesystem::path(config::cache_dir()) / (key + ".json");
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << payload;
  }
  std::filesystem::rename(tmp, p, ec);
}

}  // namespace cache

}  // namespace burnloop

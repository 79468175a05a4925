#pragma once

#include <string>

namespace burnloop::config {

/// Largest group order any constructor will materialize (default 1024).
int max_group_order();
void set_max_group_order(int bound);

/// Directory for the on-disk artifact cache. Resolution order:
/// BURNLOOP_CACHE_DIR, then XDG_CACHE_HOME/burnloop, then ~/.cache/burnloop.
std::string cache_dir();
void set_cache_dir(const std::string& dir);

/// Disk caching can be switched off entirely (BURNLOOP_NO_CACHE=1).
bool cache_enabled();
void set_cache_enabled(bool on);

}  // namespace burnloop::config

#pragma once

#include <map>

#include "quadric/excep.hpp"

namespace support {

// One shared enumeration per sign, extended on demand.
inline const quadric::ExceptionalCache& cache(long max_rank, quadric::EpsSign s = quadric::EpsSign::Positive) {
  static std::map<int, quadric::ExceptionalCache> caches;
  auto it = caches.find(static_cast<int>(s));
  if (it == caches.end())
    it = caches.emplace(static_cast<int>(s), quadric::ExceptionalCache::enumerate(max_rank, {0, 1, 0, 1}, s)).first;
  else if (it->second.max_rank() < max_rank)
    it->second.extend(max_rank);
  return it->second;
}

}  // namespace support

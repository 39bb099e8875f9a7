#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quadric/excep.hpp"

namespace quadric::cli {

enum class Output { Json, Csv, Table };

struct RunConfig {
  EpsSign eps_sign = EpsSign::Positive;
  std::optional<std::string> cache_path;
  long margin = 2;
  int float_digits = 6;
  Output output = Output::Table;
  std::string golden_dir;
};

// Loads the cache at config.cache_path (if any), extends it to max_rank and writes it back
// when it grew. Without a path the cache lives in memory only.
ExceptionalCache obtain_cache(const RunConfig& config, long max_rank);

// args excludes the program name. Returns 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadric::cli

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadric {

enum class ErrorCode {
  NotIntegral,
  NotPositiveRank,
  ZeroRank,
  ZeroClass,
  BadInterval,
  CacheInsufficient,
  InvalidCache,
  NotGaeta,
  SearchExhausted,
  Degenerate,
  NotAssociated,
  NotSemistable,
  ParseError,
  TableMismatch,
};

std::string_view to_string(ErrorCode code);

// Domain error carried through the library and mapped to exit code 1 by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace quadric

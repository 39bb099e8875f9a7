#include "quadric/error.hpp"

namespace quadric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotPositiveRank: return "NotPositiveRank";
    case ErrorCode::ZeroRank: return "ZeroRank";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::CacheInsufficient: return "CacheInsufficient";
    case ErrorCode::InvalidCache: return "InvalidCache";
    case ErrorCode::NotGaeta: return "NotGaeta";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotAssociated: return "NotAssociated";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TableMismatch: return "TableMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace quadric

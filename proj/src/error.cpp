#include "kummer/error.hpp"

namespace kummer {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TrivialPell: return "TrivialPell";
    case ErrorCode::IntegrityError: return "IntegrityError";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::DegenerateWall: return "DegenerateWall";
    case ErrorCode::VerticalWall: return "VerticalWall";
    case ErrorCode::UnsupportedNef: return "UnsupportedNef";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace kummer

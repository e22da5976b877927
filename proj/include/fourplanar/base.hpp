#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fourplanar {

enum class ErrorCode {
  ParseError,
  DanglingReference,
  SelfCrossing,
  NonSphere,
  DisconnectedMap,
  ChainTooLong,
  StageOrder,
  TotalMismatch,
  OpenBlock,
  OverlappingBlocks,
  NoEligiblePair,
  HomotopyCreated,
  PreconditionFailed,
  NotA0Triangle,
  AlreadyInBlock,
  IterationCapExceeded,
  BadParameter,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::SelfCrossing: return "SelfCrossing";
    case ErrorCode::NonSphere: return "NonSphere";
    case ErrorCode::DisconnectedMap: return "DisconnectedMap";
    case ErrorCode::ChainTooLong: return "ChainTooLong";
    case ErrorCode::StageOrder: return "StageOrder";
    case ErrorCode::TotalMismatch: return "TotalMismatch";
    case ErrorCode::OpenBlock: return "OpenBlock";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::NoEligiblePair: return "NoEligiblePair";
    case ErrorCode::HomotopyCreated: return "HomotopyCreated";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotA0Triangle: return "NotA0Triangle";
    case ErrorCode::AlreadyInBlock: return "AlreadyInBlock";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::BadParameter: return "BadParameter";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A non-fatal finding attached to a node, dart, face or edge.
struct Diagnostic {
  std::string rule;    // e.g. "CrossingDegree", "NotChecked", "PatternIncomplete"
  std::string where;   // id of the offending object
  std::string detail;  // free text
};

inline std::string format(const Diagnostic& d) {
  std::string s = d.rule;
  if (!d.where.empty()) s += " at " + d.where;
  if (!d.detail.empty()) s += ": " + d.detail;
  return s;
}

}  // namespace fourplanar

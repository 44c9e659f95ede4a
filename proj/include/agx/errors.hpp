#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agx {

enum class Errc {
  // element store
  DuplicateToken,
  InvalidToken,
  AttributeNeedsOwner,
  NoSuchElement,
  AttributeOnAttribute,
  NotAContainer,
  ContainmentCycle,
  EmptyEndpointList,
  AttributeEndpoint,
  SelfAdjacency,
  DepthLimitExceeded,
  // sets
  UnregisteredGenerator,
  OperandNotASet,
  CountableOperand,
  NotASet,
  DerivedSetImmutable,
  // logic
  UnboundVariable,
  ArityMismatch,
  DuplicatePredicate,
  UnregisteredFunction,
  UnknownPredicate,
  MalformedRule,
  ConflictingAssignment,
  MaxIterationsExceeded,
  UnorderedTemporalFrame,
  EmptyFrame,
  // knowledge
  GroupMismatch,
  NotAFragmentCarrier,
  UnknownKind,
  NoFragment,
  NoConverter,
  // persistence
  ValidationFailed,
  ParseError,
  UnknownRecordType,
  DanglingReference,
  VersionUnsupported,
  SequenceGap,
  ChecksumMismatch,
  TruncatedSnapshot,
  IoError,
  // bus
  DuplicateModule,
  SectionConflict,
  InvalidHandle,
  UnknownTarget,
  NotOnAccessList,
  NoSuchSection,
  // query surface
  UnknownName,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateToken: return "DuplicateToken";
    case Errc::InvalidToken: return "InvalidToken";
    case Errc::AttributeNeedsOwner: return "AttributeNeedsOwner";
    case Errc::NoSuchElement: return "NoSuchElement";
    case Errc::AttributeOnAttribute: return "AttributeOnAttribute";
    case Errc::NotAContainer: return "NotAContainer";
    case Errc::ContainmentCycle: return "ContainmentCycle";
    case Errc::EmptyEndpointList: return "EmptyEndpointList";
    case Errc::AttributeEndpoint: return "AttributeEndpoint";
    case Errc::SelfAdjacency: return "SelfAdjacency";
    case Errc::DepthLimitExceeded: return "DepthLimitExceeded";
    case Errc::UnregisteredGenerator: return "UnregisteredGenerator";
    case Errc::OperandNotASet: return "OperandNotASet";
    case Errc::CountableOperand: return "CountableOperand";
    case Errc::NotASet: return "NotASet";
    case Errc::DerivedSetImmutable: return "DerivedSetImmutable";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DuplicatePredicate: return "DuplicatePredicate";
    case Errc::UnregisteredFunction: return "UnregisteredFunction";
    case Errc::UnknownPredicate: return "UnknownPredicate";
    case Errc::MalformedRule: return "MalformedRule";
    case Errc::ConflictingAssignment: return "ConflictingAssignment";
    case Errc::MaxIterationsExceeded: return "MaxIterationsExceeded";
    case Errc::UnorderedTemporalFrame: return "UnorderedTemporalFrame";
    case Errc::EmptyFrame: return "EmptyFrame";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotAFragmentCarrier: return "NotAFragmentCarrier";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::NoFragment: return "NoFragment";
    case Errc::NoConverter: return "NoConverter";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownRecordType: return "UnknownRecordType";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::VersionUnsupported: return "VersionUnsupported";
    case Errc::SequenceGap: return "SequenceGap";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::TruncatedSnapshot: return "TruncatedSnapshot";
    case Errc::IoError: return "IoError";
    case Errc::DuplicateModule: return "DuplicateModule";
    case Errc::SectionConflict: return "SectionConflict";
    case Errc::InvalidHandle: return "InvalidHandle";
    case Errc::UnknownTarget: return "UnknownTarget";
    case Errc::NotOnAccessList: return "NotOnAccessList";
    case Errc::NoSuchSection: return "NoSuchSection";
    case Errc::UnknownName: return "UnknownName";
    case Errc::Internal: return "Internal";
  }
  return "?";
}

/// Engine-wide exception. `line`/`col` are 1-based and meaningful only for
/// parse-class errors; `names` carries extra identifiers (e.g. the two rules
/// of a ConflictingAssignment).
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Error(Errc code, std::string msg, std::size_t line, std::size_t col)
      : std::runtime_error(std::string(errc_name(code)) + " at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  const std::vector<std::string>& names() const { return names_; }
  Error&& with_names(std::vector<std::string> ns) && {
    names_ = std::move(ns);
    return std::move(*this);
  }

private:
  Errc code_;
  std::size_t line_{0};
  std::size_t col_{0};
  std::vector<std::string> names_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace agx

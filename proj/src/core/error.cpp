#include "srcsel/core/error.hpp"

namespace srcsel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingGain: return "MissingGain";
    case ErrorCode::EmptySource: return "EmptySource";
    case ErrorCode::DegenerateSplit: return "DegenerateSplit";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NonBinaryLabels: return "NonBinaryLabels";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NoPositives: return "NoPositives";
    case ErrorCode::ZeroBaseline: return "ZeroBaseline";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::AllConstructionsEmpty: return "AllConstructionsEmpty";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SampleSpaceExhausted: return "SampleSpaceExhausted";
    case ErrorCode::UnknownSubset: return "UnknownSubset";
    case ErrorCode::NonpositiveOptimum: return "NonpositiveOptimum";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::NonNumericFeature: return "NonNumericFeature";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::DuplicateSourceName: return "DuplicateSourceName";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace srcsel

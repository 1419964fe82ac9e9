#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srcsel {

enum class ErrorCode {
  InvalidArgument,
  MissingGain,
  EmptySource,
  DegenerateSplit,
  EmptySubset,
  NonBinaryLabels,
  SingularSystem,
  EmptyInput,
  NoPositives,
  ZeroBaseline,
  BudgetExceeded,
  AllConstructionsEmpty,
  RankDeficient,
  SampleSpaceExhausted,
  UnknownSubset,
  NonpositiveOptimum,
  MissingColumn,
  NonNumericFeature,
  EmptyPartition,
  DuplicateSourceName,
  SchemaMismatch,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. Callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace srcsel

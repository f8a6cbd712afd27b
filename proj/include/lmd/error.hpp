#ifndef LMD_ERROR_HPP
#define LMD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lmd {

// Exit-code categories used by the CLI: 2 usage, 3 data, 4 missing artifact,
// 5 internal.
enum class ErrorCategory : int {
  kUsage = 2,
  kData = 3,
  kMissingArtifact = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what),
        category_(category),
        code_(std::move(code)) {}

  ErrorCategory category() const noexcept { return category_; }
  // Machine-parsable category token, e.g. "MalformedLine".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

struct MalformedLine : Error {
  explicit MalformedLine(const std::string& what)
      : Error(ErrorCategory::kData, "MalformedLine", what) {}
};

struct OutOfOrderEvent : Error {
  explicit OutOfOrderEvent(const std::string& what)
      : Error(ErrorCategory::kData, "OutOfOrderEvent", what) {}
};

struct DegenerateData : Error {
  explicit DegenerateData(const std::string& what)
      : Error(ErrorCategory::kData, "DegenerateData", what) {}
};

struct NonFiniteFeature : Error {
  explicit NonFiniteFeature(const std::string& what)
      : Error(ErrorCategory::kData, "NonFiniteFeature", what) {}
};

struct NonFiniteLoss : Error {
  explicit NonFiniteLoss(const std::string& what)
      : Error(ErrorCategory::kData, "NonFiniteLoss", what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorCategory::kData, "DimensionMismatch", what) {}
};

struct VersionMismatch : Error {
  explicit VersionMismatch(const std::string& what)
      : Error(ErrorCategory::kData, "VersionMismatch", what) {}
};

struct CorruptModel : Error {
  explicit CorruptModel(const std::string& what)
      : Error(ErrorCategory::kData, "CorruptModel", what) {}
};

struct MissingArtifact : Error {
  explicit MissingArtifact(const std::string& what)
      : Error(ErrorCategory::kMissingArtifact, "MissingArtifact", what) {}
};

struct ConfigInvalid : Error {
  explicit ConfigInvalid(const std::string& what)
      : Error(ErrorCategory::kUsage, "ConfigInvalid", what) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& what)
      : Error(ErrorCategory::kData, "EmptyInput", what) {}
};

struct EmptyGrid : Error {
  explicit EmptyGrid(const std::string& what)
      : Error(ErrorCategory::kData, "EmptyGrid", what) {}
};

struct TooManyFeatures : Error {
  explicit TooManyFeatures(const std::string& what)
      : Error(ErrorCategory::kData, "TooManyFeatures", what) {}
};

struct EmptyBackground : Error {
  explicit EmptyBackground(const std::string& what)
      : Error(ErrorCategory::kData, "EmptyBackground", what) {}
};

struct UnknownUser : Error {
  explicit UnknownUser(const std::string& what)
      : Error(ErrorCategory::kData, "UnknownUser", what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what)
      : Error(ErrorCategory::kInternal, "InternalError", what) {}
};

}  // namespace lmd

#endif  // LMD_ERROR_HPP

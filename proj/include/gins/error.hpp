#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gins {

/// Process exit codes shared by the library errors and the command line tool.
enum class ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kCertificationFailed = 3,
  kSizeLimit = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ExitCode::kInvalidInput, what) {}
};

class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(const std::string& what) : Error(ExitCode::kSizeLimit, what) {}
};

/// Raised when random trials of a generic initial ideal computation disagree
/// or the candidate fails a necessary property. Carries the rendered candidates.
class CertificationFailed : public Error {
 public:
  CertificationFailed(const std::string& what, std::vector<std::string> candidates)
      : Error(ExitCode::kCertificationFailed, what), candidates_(std::move(candidates)) {}
  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<std::string> candidates_;
};

/// The two sides of a complement duality check disagreed.
class DualityViolation : public Error {
 public:
  explicit DualityViolation(const std::string& what) : Error(ExitCode::kCheckFailed, what) {}
};

}  // namespace gins

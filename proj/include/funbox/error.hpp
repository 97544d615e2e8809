#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace funbox {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad id, bad parameter, malformed file).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exact search refused because the instance exceeds a configured guard.
class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, std::size_t limit)
      : Error(what + " (limit " + std::to_string(limit) + "; raise with FUNBOX_MAX_N)"), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// A structural claim about the input does not hold (not a half graph, not an ABC graph, ...).
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& what) : Error(what) {}
  StructureError(const std::string& what, unsigned u, unsigned v)
      : Error(what + " (vertices " + std::to_string(u) + ", " + std::to_string(v) + ")"), pair_{{u, v}} {}
  /// Offending vertex pair, when the violation is witnessed by one.
  const std::optional<std::pair<unsigned, unsigned>>& pair() const { return pair_; }

 private:
  std::optional<std::pair<unsigned, unsigned>> pair_;
};

/// The premises of the refutation procedure do not hold; one message per violated premise.
class PremiseError : public Error {
 public:
  explicit PremiseError(std::vector<std::string> violated);
  const std::vector<std::string>& violated() const { return violated_; }

 private:
  std::vector<std::string> violated_;
};

/// An emitted certificate or realization failed its own validation. Always a bug.
class ValidationError : public Error {
 public:
  using Error::Error;
};

inline PremiseError::PremiseError(std::vector<std::string> violated)
    : Error([&] {
        std::string msg = "refutation premises violated:";
        for (const auto& v : violated) msg += " [" + v + "]";
        return msg;
      }()),
      violated_(std::move(violated)) {}

}  // namespace funbox

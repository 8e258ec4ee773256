#pragma once

#include <stdexcept>
#include <string>

namespace oddminor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, unknown vertex ids, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run on an instance above its size guard.
class SizeLimitExceeded : public Error {
 public:
  SizeLimitExceeded(const std::string& what, int size, int limit)
      : Error(what + ": " + std::to_string(size) + " vertices exceeds limit " +
              std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  int size() const { return size_; }
  int limit() const { return limit_; }

 private:
  int size_;
  int limit_;
};

/// The graph does not satisfy the hypothesis an operation needs (for example,
/// no bipartite join subdivision to decompose around).
class HypothesisUnmet : public Error {
 public:
  using Error::Error;
};

/// A branch that the underlying combinatorics guarantees failed to certify.
/// Always indicates a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Outcome of a certificate check. `reason` is a short machine-readable code
/// when `ok` is false.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace oddminor

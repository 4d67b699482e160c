#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fieldbound {

/// Argument outside an operation's domain (l < 3, k < s, malformed parameters).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounding method whose hypotheses fail for the given candidate, e.g.
/// Method B on an exceptional parameter or Method A with R >= 1.
class InapplicableMethod : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The least-solution search ran past its iteration cap.
class CappedSearch : public std::runtime_error {
 public:
  explicit CappedSearch(std::uint64_t cap)
      : std::runtime_error("no solution found below cap " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class SingularInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pentagon completion hit a zero denominator.
class DegenerateConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite truncation of an infinite minimisation could not be certified.
class WindowAssertion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSignature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IncompleteCampaign : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fieldbound

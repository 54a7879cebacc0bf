#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace kahlercalc {

/// Malformed textual input: DSL source, rational literals, record files.
/// `offset` is the byte position inside the offending string when known,
/// `field` the record field name when parsing structured input.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t offset = npos,
                      std::string field = {})
      : std::runtime_error(what), offset_(offset), field_(std::move(field)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t offset_;
  std::string field_;
};

/// A mathematical precondition failed: division by zero, pole, degree
/// overflow, nonpositive Kahler parameters, malformed index multiplicity.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbolic verification that later stages depend on did not pass.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kahlercalc

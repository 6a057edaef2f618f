#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmforge {

// Three families, mirrored by the CLI exit codes:
//   InputError    -> 1  (bad file, bad formula, bad arguments)
//   ContractError -> 2  (a theorem-backed check failed: an implementation bug)
//   CapExceeded   -> 3  (instance too large for the configured bounds)

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class FormatError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : InputError("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class MissingVariable : public InputError {
 public:
  explicit MissingVariable(std::size_t index)
      : InputError("valuation has no value for p" + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ArityMismatch : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class Degenerate : public InputError {
 public:
  using InputError::InputError;
};

class AxiomViolation : public ContractError {
 public:
  using ContractError::ContractError;
};

class TheoremViolation : public ContractError {
 public:
  TheoremViolation(std::string part, const std::string& what)
      : ContractError("theorem part " + part + " violated: " + what), part_(std::move(part)) {}
  const std::string& part() const noexcept { return part_; }

 private:
  std::string part_;
};

class GeneratorMismatch : public ContractError {
 public:
  using ContractError::ContractError;
};

class NotWellDefined : public ContractError {
 public:
  using ContractError::ContractError;
};

class DeltaMismatch : public ContractError {
 public:
  using ContractError::ContractError;
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("closure exceeded cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 protected:
  CapExceeded(std::size_t cap, const std::string& what) : std::runtime_error(what), cap_(cap) {}

 private:
  std::size_t cap_;
};

class RoundCapExceeded : public CapExceeded {
 public:
  explicit RoundCapExceeded(std::size_t rounds)
      : CapExceeded(rounds, "completion did not stabilize within " + std::to_string(rounds) +
                                " rounds") {}
};

}  // namespace kmforge

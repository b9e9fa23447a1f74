#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvmodal {

/// Element representation does not match the algebra it is used with.
class CarrierMismatch : public std::runtime_error {
public:
  explicit CarrierMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Requested element (e.g. a non-contractive witness) does not exist.
class NoSuchElement : public std::runtime_error {
public:
  explicit NoSuchElement(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Formula text rejected; carries the byte offset and the token set that
/// would have been accepted there.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class NotASolution : public std::runtime_error {
public:
  explicit NotASolution(const std::string& what) : std::runtime_error(what) {}
};

class PrefixSolution : public std::runtime_error {
public:
  explicit PrefixSolution(const std::string& what) : std::runtime_error(what) {}
};

class AlgebraTooContractive : public std::runtime_error {
public:
  explicit AlgebraTooContractive(const std::string& what) : std::runtime_error(what) {}
};

/// Δ breaks the piecewise-linear unfolding; such sequents go to the MVn
/// bounded search instead.
class DeltaNotSupported : public std::runtime_error {
public:
  explicit DeltaNotSupported(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mvmodal

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace osg {

enum class ErrorKind {
  SizeOutOfRange,
  NotAssociative,
  NotPartialOrder,
  NotCompatible,
  BindingMismatch,
  PotencyOutOfRange,
  IndexOutOfRange,
  EmptySubset,
  SyntaxError,
  UnboundVariable,
  DuplicateBinder,
  UnknownCheckId,
  MalformedWitness,
  FormatError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the toolkit. `witness()` carries the offending
/// element indices where the error has one (e.g. the (a,b,c) triple that
/// breaks associativity).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<unsigned> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<unsigned>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<unsigned> witness_;
};

/// Which partial-order axiom a relation violates.
enum class OrderAxiom { Reflexivity, Antisymmetry, Transitivity };

class NotPartialOrderError : public Error {
 public:
  NotPartialOrderError(OrderAxiom axiom, const std::string& what, std::vector<unsigned> witness)
      : Error(ErrorKind::NotPartialOrder, what, std::move(witness)), axiom_(axiom) {}
  OrderAxiom axiom() const noexcept { return axiom_; }

 private:
  OrderAxiom axiom_;
};

/// Positioned error from the conjecture parser or the corpus reader.
/// Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : Error(kind, what), line_(line), column_(column), expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace osg

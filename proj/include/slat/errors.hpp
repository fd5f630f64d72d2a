#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace slat {

// Every failure the library reports derives from this, so callers can catch
// one type at the boundary and still pattern-match on the concrete class.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A join table that is not a semilattice table.  `witness` holds the elements
// that break the law (one for idempotence, two for commutativity, three for
// associativity, the offending coordinates for a range error).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& msg, std::vector<int> w)
      : Error(msg), witness(std::move(w)) {}
  std::vector<int> witness;
};

class IdempotenceViolation : public ValidationError {
 public:
  explicit IdempotenceViolation(int x)
      : ValidationError("idempotence fails at element " + std::to_string(x), {x}) {}
};

class CommutativityViolation : public ValidationError {
 public:
  CommutativityViolation(int x, int y)
      : ValidationError("commutativity fails at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")",
                        {x, y}) {}
};

class AssociativityViolation : public ValidationError {
 public:
  AssociativityViolation(int x, int y, int z)
      : ValidationError("associativity fails at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ", " + std::to_string(z) + ")",
                        {x, y, z}) {}
};

class IndexOutOfRange : public ValidationError {
 public:
  IndexOutOfRange(int where, int value)
      : ValidationError("value " + std::to_string(value) +
                            " out of range at position " + std::to_string(where),
                        {where, value}) {}
};

// Requested product would exceed the configured carrier bound.
class SizeOverflow : public Error {
 public:
  explicit SizeOverflow(const std::string& msg) : Error(msg) {}
};

// Input is larger than the configured bound for an exhaustive scan.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

class NotAPartition : public Error {
 public:
  explicit NotAPartition(const std::string& msg) : Error(msg) {}
};

class NotACongruence : public Error {
 public:
  explicit NotACongruence(const std::string& msg) : Error(msg) {}
};

class NotSubsemilattice : public Error {
 public:
  explicit NotSubsemilattice(const std::string& msg) : Error(msg) {}
};

class NotADirectSum : public Error {
 public:
  explicit NotADirectSum(const std::string& msg) : Error(msg) {}
};

class NotComplementaryPair : public Error {
 public:
  explicit NotComplementaryPair(const std::string& msg) : Error(msg) {}
};

class UnknownAxiom : public Error {
 public:
  explicit UnknownAxiom(const std::string& name)
      : Error("unknown axiom name: " + name) {}
};

// Raised when a verified precondition still leads to an impossible state;
// indicates a bug in the library, never a bad input.
class InternalContradiction : public Error {
 public:
  explicit InternalContradiction(const std::string& msg) : Error(msg) {}
};

// Cover-list input whose order has a pair with no least upper bound.
class NoJoinExists : public Error {
 public:
  NoJoinExists(int x, int y)
      : Error("elements " + std::to_string(x) + " and " + std::to_string(y) +
              " have no least upper bound"),
        x(x),
        y(y) {}
  int x;
  int y;
};

// Malformed textual input.  Position is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what_arg)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what_arg),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace slat

#pragma once

#include <stdexcept>
#include <string>

namespace fomc {

// Failure classes surfaced by the library. The CLI maps these onto exit
// codes: parse errors -> 2, precondition violations -> 3, property
// failures -> 4.
enum class ErrorKind {
  Parse,
  Precondition,
  Property,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string what) : std::runtime_error(std::move(what)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w = "division by zero") : Error(ErrorKind::Precondition, w) {}
};
struct InvalidSimplex : Error {
  explicit InvalidSimplex(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct SyntaxError : Error {
  SyntaxError(std::size_t offset, const std::string& expected)
      : Error(ErrorKind::Parse, "syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset(offset),
        expected(expected) {}
  std::size_t offset;  // 1-based character position
  std::string expected;
};
struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& w) : Error(ErrorKind::Parse, w) {}
};
struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name) : Error(ErrorKind::Precondition, "unbound variable: " + name) {}
};
struct UnknownSentence : Error {
  explicit UnknownSentence(const std::string& name) : Error(ErrorKind::Precondition, "unknown sentence: " + name) {}
};
struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct CycleOrOrderViolation : Error {
  explicit CycleOrOrderViolation(const std::string& w) : Error(ErrorKind::Property, w) {}
};
struct BadOutputBlock : Error {
  explicit BadOutputBlock(const std::string& w) : Error(ErrorKind::Property, w) {}
};
struct DuplicateArgIndex : Error {
  explicit DuplicateArgIndex(const std::string& w) : Error(ErrorKind::Property, w) {}
};
struct TableTooLarge : Error {
  explicit TableTooLarge(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct SynthesisCapExceeded : Error {
  explicit SynthesisCapExceeded(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct WidthMismatch : Error {
  explicit WidthMismatch(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct UnknownNodeType : Error {
  explicit UnknownNodeType(const std::string& w) : Error(ErrorKind::Precondition, "unknown node type: " + w) {}
};
struct SizeOverflow : Error {
  explicit SizeOverflow(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct NotPowerOfTwo : Error {
  explicit NotPowerOfTwo(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};
struct UnknownToken : Error {
  explicit UnknownToken(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};

}  // namespace fomc

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wordrep {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  TooLarge,
  SameLetter,
  NotInAlphabet,
  NonContiguousAlphabet,
  AlphabetMismatch,
  PartialOrientation,
  CyclicInput,
  NotK4Free,
  TooManyEdges,
  ImproperColoring,
  TooManyColors,
  TooLargeToVerify,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SameLetter: return "SameLetter";
    case ErrorKind::NotInAlphabet: return "NotInAlphabet";
    case ErrorKind::NonContiguousAlphabet: return "NonContiguousAlphabet";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::PartialOrientation: return "PartialOrientation";
    case ErrorKind::CyclicInput: return "CyclicInput";
    case ErrorKind::NotK4Free: return "NotK4Free";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::TooManyColors: return "TooManyColors";
    case ErrorKind::TooLargeToVerify: return "TooLargeToVerify";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures remember where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wordrep

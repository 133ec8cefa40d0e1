#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace possmc {

enum class ErrorKind {
  Parse,
  Range,
  Precision,
  DimensionMismatch,
  NotSquare,
  UnknownState,
  UnknownAtom,
  InvalidLasso,
  EmptyFragment,
  Syntax,
  UnsupportedFormula,
  NoClosedDual,
  WrongMode,
  NotDeterministic,
  ApMismatch,
  Format,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `position` is set for errors found
/// while scanning text (formulas, guards, decimals).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace possmc

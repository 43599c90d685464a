#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tvg {

enum class Errc {
  IndexOutOfRange,
  DimensionMismatch,
  TooFewPoints,
  NotConvexPosition,
  WrongDimension,
  InvalidArguments,
  SizeMismatch,
  PartitionMismatch,
  NotTverberg,
  NotRadon,
  TooManyPartitions,
  NoPathFound,
  UnsupportedFormat,
  DegenerateAfterRetries,
  ParseError,
  EmptyInput,
  FieldMismatch,
  DivisionByZero,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map them to stable exit statuses.
class TvgError : public std::runtime_error {
 public:
  TvgError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tvg

#include "tvg/rational.hpp"

#include <cctype>

#include "tvg/error.hpp"

namespace tvg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NotConvexPosition: return "NotConvexPosition";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::InvalidArguments: return "InvalidArguments";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::PartitionMismatch: return "PartitionMismatch";
    case Errc::NotTverberg: return "NotTverberg";
    case Errc::NotRadon: return "NotRadon";
    case Errc::TooManyPartitions: return "TooManyPartitions";
    case Errc::NoPathFound: return "NoPathFound";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw TvgError(Errc::ParseError, "not a rational number: '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw TvgError(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  if (text.front() == '-') q = -q;
  return q;
}

}  // namespace tvg

#include "possmc/poss.hpp"

#include <cmath>
#include <ostream>

#include "possmc/error.hpp"

namespace possmc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Precision: return "PrecisionError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::InvalidLasso: return "InvalidLasso";
    case ErrorKind::EmptyFragment: return "EmptyFragment";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnsupportedFormula: return "UnsupportedFormula";
    case ErrorKind::NoClosedDual: return "NoClosedDual";
    case ErrorKind::WrongMode: return "WrongMode";
    case ErrorKind::NotDeterministic: return "NotDeterministic";
    case ErrorKind::ApMismatch: return "ApMismatch";
    case ErrorKind::Format: return "FormatError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

Poss Poss::from_micros(std::uint32_t micros) {
  if (micros > kScale) {
    throw Error(ErrorKind::Range,
                "possibility out of range: " + std::to_string(micros) + " micros");
  }
  Poss p;
  p.micros_ = micros;
  return p;
}

Poss parse_poss(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t int_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  const std::size_t int_digits = i - int_begin;

  std::size_t frac_begin = i;
  std::size_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    frac_begin = ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    frac_digits = i - frac_begin;
  }
  if (i != text.size() || int_digits + frac_digits == 0) {
    throw Error(ErrorKind::Parse, "not a decimal numeral: " + quoted, i);
  }
  if (frac_digits > 6) {
    throw Error(ErrorKind::Precision,
                "more than 6 fractional digits: " + quoted, frac_begin + 6);
  }

  // Leading zeros are harmless; anything else above 9 digits is out of range.
  std::uint64_t whole = 0;
  for (std::size_t k = int_begin; k < int_begin + int_digits; ++k) {
    whole = whole * 10 + static_cast<std::uint64_t>(text[k] - '0');
    if (whole > 1) {
      throw Error(ErrorKind::Range, "value outside [0,1]: " + quoted);
    }
  }
  std::uint64_t frac = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    frac *= 10;
    if (k < frac_digits) frac += static_cast<std::uint64_t>(text[frac_begin + k] - '0');
  }
  const std::uint64_t micros = whole * Poss::kScale + frac;
  if (micros > Poss::kScale) {
    throw Error(ErrorKind::Range, "value outside [0,1]: " + quoted);
  }
  if (negative && micros != 0) {
    throw Error(ErrorKind::Range, "value outside [0,1]: " + quoted);
  }
  return Poss::from_micros(static_cast<std::uint32_t>(micros));
}

std::string to_string(Poss x) {
  const std::uint32_t m = x.micros();
  if (m == Poss::kScale) return "1";
  if (m == 0) return "0";
  std::string digits = std::to_string(m);
  digits.insert(0, 6 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return "0." + digits;
}

std::ostream& operator<<(std::ostream& os, Poss x) { return os << to_string(x); }

namespace literals {
Poss operator""_p(long double value) {
  const long double scaled = value * static_cast<long double>(Poss::kScale);
  if (scaled < 0 || scaled > static_cast<long double>(Poss::kScale)) {
    throw Error(ErrorKind::Range, "literal outside [0,1]");
  }
  return Poss::from_micros(static_cast<std::uint32_t>(std::llround(scaled)));
}
}  // namespace literals

}  // namespace possmc

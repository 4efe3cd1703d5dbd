#include "gclab/rational.hpp"

#include <cctype>

#include "gclab/error.hpp"

namespace gclab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NodeNotInSet: return "NodeNotInSet";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotCorrect: return "NotCorrect";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::LineNotUsed: return "LineNotUsed";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::ProfileOverflow: return "ProfileOverflow";
    case ErrorCode::NotGC: return "NotGC";
    case ErrorCode::NotMaximalCubic: return "NotMaximalCubic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");

  Rational r;
  if (r.set_str(std::string(text), 10) != 0)
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  if (sgn(r.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace gclab

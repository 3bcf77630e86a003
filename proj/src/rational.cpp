#include "superhom/rational.hpp"

#include <cctype>

#include "superhom/error.hpp"

namespace superhom {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::MixedKinds: return "MixedKinds";
    case ErrorCode::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace superhom

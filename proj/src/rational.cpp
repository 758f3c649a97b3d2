#include "graphcake/rational.hpp"

#include <cctype>
#include <sstream>

#include "graphcake/errors.hpp"

namespace graphcake {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::kParseError, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::kParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string approximate(const Rational& value, int digits) {
  mpf_class f(value, 128);
  std::ostringstream out;
  out.precision(digits);
  out << f.get_d();
  return out.str();
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidGraph: return "InvalidGraph";
    case ErrorKind::kInvalidInstance: return "InvalidInstance";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnknownEdge: return "UnknownEdge";
    case ErrorKind::kMalformedPiece: return "MalformedPiece";
    case ErrorKind::kDisconnectedPiece: return "DisconnectedPiece";
    case ErrorKind::kNotAlmostBridgeless: return "NotAlmostBridgeless";
    case ErrorKind::kLabelingNotContiguous: return "LabelingNotContiguous";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kInsufficientValue: return "InsufficientValue";
    case ErrorKind::kZeroValuePiece: return "ZeroValuePiece";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kNotAStar: return "NotAStar";
    case ErrorKind::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::kNotHeightTwoTree: return "NotHeightTwoTree";
    case ErrorKind::kTooManyAgents: return "TooManyAgents";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kUnknownFixture: return "UnknownFixture";
    case ErrorKind::kUnknownProtocol: return "UnknownProtocol";
    case ErrorKind::kBadParameters: return "BadParameters";
  }
  return "Error";
}

}  // namespace graphcake

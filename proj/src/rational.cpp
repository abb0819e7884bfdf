#include "rotlab/rational.hpp"

#include "rotlab/errors.hpp"

#include <cctype>

namespace rotlab {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  Rational r{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", offset + i + 1);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j + 1);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  BigInt num = parse_integer(text.substr(0, slash), 0);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') throw ParseError("negative denominator", slash + 2);
  BigInt den = parse_integer(den_text, slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 2);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace rotlab

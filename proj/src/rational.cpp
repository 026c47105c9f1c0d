#include "lieder/rational.hpp"

#include <sstream>

#include "lieder/errors.hpp"

namespace lieder {

namespace {

Integer parse_integer(const std::string& text, const std::string& context) {
  if (text.empty())
    throw ParseError("empty integer in rational \"" + context + "\"");
  for (std::size_t p = 0; p < text.size(); ++p) {
    const char ch = text[p];
    if (ch == '-' && p == 0 && text.size() > 1) continue;
    if (ch < '0' || ch > '9')
      throw ParseError("invalid rational \"" + context +
                       "\": expected an integer or \"p/q\"");
  }
  return Integer(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw ParseError("empty rational literal");

  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));

  const Integer num = parse_integer(s.substr(0, slash), text);
  const Integer den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in rational \"" + text + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

Vec unit_vector(std::size_t dim, std::size_t index) {
  Vec v(dim);
  v[index] = 1;
  return v;
}

}  // namespace lieder

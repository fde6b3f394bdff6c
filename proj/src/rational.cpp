#include "fgc/rational.hpp"

#include <cctype>

#include "fgc/error.hpp"

namespace fgc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return Rational(neg ? mpz_class(-z) : z);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  auto bad = [&] {
    return Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  };
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '-' || es[0] == '+')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) throw bad();
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string digits;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw bad();
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) throw bad();
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  }
  if (!all_digits(digits)) throw bad();
  mpz_class num(digits, 10);
  if (neg) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational q = exp10 < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    Rational p = parse_integer(s.substr(0, slash), text);
    Rational q = parse_integer(s.substr(slash + 1), text);
    if (q == 0)
      throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational r = p / q;
    r.canonicalize();
    return r;
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return parse_integer(s, text);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign(const Rational& q) { return sgn(q); }

Rational pow_int(const Rational& q, long e) {
  Rational base = e < 0 ? Rational(1) / q : q;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r = 1;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace fgc

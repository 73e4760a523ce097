#include "gvp/rational.hpp"

#include <cctype>
#include <limits>

#include "gvp/error.hpp"

namespace gvp {

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
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(ErrorKind::parse, "bad rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      fail(ErrorKind::parse, "bad decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    std::string digits = std::string(whole) + std::string(frac);
    result = Rational(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) fail(ErrorKind::parse, "bad number '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) fail(ErrorKind::invalid_argument, "value " + to_string(value) + " is not integral");
  const mpz_class& num = value.get_num();
  if (!num.fits_slong_p()) fail(ErrorKind::invalid_argument, "value " + to_string(value) + " out of range");
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return num.get_si();
}

Rational floor_rational(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational ratio(long num, long den) {
  if (den == 0) fail(ErrorKind::invalid_argument, "zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

}  // namespace gvp

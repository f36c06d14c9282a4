#include "dgli/rational.hpp"

#include <cctype>

namespace dgli {
namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
  const auto slash = s.find('/');
  std::string_view num_tok = s.substr(0, slash);
  std::string_view den_tok =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (den_tok.find('/') != std::string_view::npos ||
      !valid_integer_token(num_tok, /*allow_sign=*/true) ||
      !valid_integer_token(den_tok, /*allow_sign=*/false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  Integer num(std::string(num_tok), 10);
  Integer den(std::string(den_tok), 10);
  return Rational(num, den);
}

std::string Rational::str() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::display() const {
  return is_integer() ? numerator().get_str() : str();
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial_ext(long n, long k) {
  if (n == -1 && k == -1) return Integer(1);
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace dgli

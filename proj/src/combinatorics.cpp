#include "parabolic/combinatorics.hpp"

#include <cctype>
#include <stdexcept>

namespace parabolic {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int j) {
  if (n < 0) throw std::invalid_argument("binomial: negative top " + std::to_string(n));
  if (j < 0 || j > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return out;
}

Rational binomial(const Rational& r, int j) {
  if (j < 0) return 0;
  Rational out = 1;
  for (int i = 0; i < j; ++i) {
    out *= r - i;
    out /= i + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  auto fail = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string::npos) {
    Rational out;
    try {
      out = Rational(Integer(text.substr(0, slash), 10), Integer(text.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw fail();
    }
    if (out.get_den() == 0) throw fail();
    out.canonicalize();
    return out;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  int scale = 0;
  bool seen_point = false;
  for (; pos < text.size() && text[pos] != 'e' && text[pos] != 'E'; ++pos) {
    char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) --scale;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();
  if (pos < text.size()) {
    std::string exponent = text.substr(pos + 1);
    if (exponent.empty()) throw fail();
    try {
      std::size_t used = 0;
      scale += std::stoi(exponent, &used);
      if (used != exponent.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  Rational out{Integer(digits, 10)};
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    out /= ten_power;
  } else {
    out *= ten_power;
  }
  return negative ? Rational(-out) : out;
}

}  // namespace parabolic

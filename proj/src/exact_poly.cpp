#include "parabolic/exact_poly.hpp"

#include <stdexcept>

namespace parabolic {

ExactPoly::ExactPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPoly ExactPoly::monomial(Rational c, int degree) {
  if (degree < 0) throw std::invalid_argument("ExactPoly::monomial: negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return ExactPoly(std::move(coeffs));
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational ExactPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational ExactPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational ExactPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPoly ExactPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::negated_argument() const {
  ExactPoly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

ExactPoly ExactPoly::shifted(int shift) const {
  if (is_zero()) return {};
  if (shift < 0) throw std::invalid_argument("ExactPoly::shifted: negative shift");
  std::vector<Rational> out(static_cast<std::size_t>(shift), Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return ExactPoly(std::move(out));
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

ExactPoly operator*(const ExactPoly& lhs, const ExactPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return ExactPoly(std::move(out));
}

std::string ExactPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (i == 0 || !unit) out += parabolic::to_string(magnitude);
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& num, const ExactPoly& den) {
  if (den.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  ExactPoly remainder = num;
  std::vector<Rational> quotient;
  const int dd = den.degree();
  const Rational lead = den.leading();
  if (remainder.degree() >= dd) quotient.resize(static_cast<std::size_t>(remainder.degree() - dd) + 1);
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    const int shift = remainder.degree() - dd;
    Rational factor = remainder.leading() / lead;
    quotient[shift] = factor;
    remainder -= ExactPoly::monomial(factor, shift) * den;
  }
  return {ExactPoly(std::move(quotient)), remainder};
}

}  // namespace parabolic

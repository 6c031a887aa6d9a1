#include "alliance/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "alliance/errors.hpp"

namespace alliance {

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c < 0) throw std::invalid_argument("negative coefficient");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(mpz_class c, int k) {
  if (c < 0) throw std::invalid_argument("negative coefficient");
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return Polynomial();
  std::vector<mpz_class> v(k + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

const mpz_class& Polynomial::coeff(int k) const {
  static const mpz_class kZero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

mpz_class evaluate_at_one(const Polynomial& p) {
  mpz_class total = 0;
  for (const auto& c : p.coeffs()) total += c;
  return total;
}

int min_support(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no support");
  for (int k = 0;; ++k)
    if (p.coeff(k) != 0) return k;
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const mpz_class& c = p.coeff(k);
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c != 1 || k == 0) out << c.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

namespace {

// One term of the form [coeff][*][x[^exp]]; reports exponent and coefficient.
void parse_term(std::string_view term, mpz_class& coeff, int& exp) {
  std::string s;
  for (char ch : term)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw parse_error("empty term");
  if (s.front() == '-') throw parse_error("negative coefficient in \"" + s + "\"");
  std::size_t xpos = s.find('x');
  std::string num = s.substr(0, xpos == std::string::npos ? s.size() : xpos);
  if (!num.empty() && num.back() == '*') num.pop_back();
  if (num.empty()) {
    if (xpos == std::string::npos) throw parse_error("empty term");
    coeff = 1;
  } else {
    for (char ch : num)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw parse_error("bad coefficient in \"" + s + "\"");
    coeff = mpz_class(num, 10);
  }
  if (xpos == std::string::npos) {
    exp = 0;
    return;
  }
  std::string rest = s.substr(xpos + 1);
  if (rest.empty()) {
    exp = 1;
    return;
  }
  if (rest.front() != '^') throw parse_error("expected '^' in \"" + s + "\"");
  rest.erase(0, 1);
  if (rest.empty()) throw parse_error("missing exponent in \"" + s + "\"");
  for (char ch : rest)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw parse_error("bad exponent in \"" + s + "\"");
  if (rest.size() > 6) throw parse_error("exponent out of range in \"" + s + "\"");
  exp = std::stoi(rest);
}

}  // namespace

Polynomial parse_poly(std::string_view text) {
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : text) {
    if (ch == '+') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);
  Polynomial total;
  bool any = false;
  for (const auto& t : terms) {
    if (t.find_first_not_of(" \t\r\n") == std::string::npos) {
      if (terms.size() == 1) throw parse_error("empty polynomial");
      throw parse_error("dangling '+'");
    }
    mpz_class c;
    int k;
    parse_term(t, c, k);
    total += Polynomial::monomial(c, k);
    any = true;
  }
  if (!any) throw parse_error("empty polynomial");
  return total;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace alliance

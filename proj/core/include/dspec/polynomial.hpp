#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dspec/scalar.hpp"

namespace dspec {

// Univariate polynomial over Q. Coefficients are stored lowest degree first and kept
// trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial constant(Rational c);
  static Polynomial monomial(std::size_t degree, Rational c = 1);
  // From a coefficient list with the leading coefficient first.
  static Polynomial from_descending(const std::vector<Rational>& descending);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as 0; check is_zero() where it matters.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Rational>& ascending() const { return c_; }
  std::vector<Rational> descending() const;
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  // Largest k with t^k dividing p (0 for the zero polynomial).
  std::size_t low_order_zeros() const;
  Polynomial shift_down(std::size_t k) const;  // p / t^k, exact when k <= low_order_zeros()

  Rational evaluate(const Rational& x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

// Yun's algorithm: returns (f_i, i) with p = lc * prod f_i^i, each f_i monic and square-free
// and the f_i pairwise coprime. Factors equal to 1 are omitted.
std::vector<std::pair<Polynomial, std::size_t>> square_free_decomposition(const Polynomial& p);

// All complex roots with multiplicity, via companion-matrix eigenvalues of each square-free
// factor followed by Newton polishing. Roots within 1e-10 (relative) of the real axis are
// returned as real. Order is unspecified.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p);

// "1,-8,15,0" (descending).
std::string format_coefficients(const Polynomial& p);

}  // namespace dspec

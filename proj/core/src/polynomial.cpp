#include "dspec/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dspec/error.hpp"

namespace dspec {

namespace {

using cld = std::complex<long double>;

long double to_long_double(const Rational& q) {
  mpf_class x(q, 192);
  double hi = x.get_d();
  mpf_class rest = x - hi;
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::vector<cld> roots_of_square_free(const Polynomial& f) {
  const std::size_t d = f.degree();
  std::vector<long double> a(d + 1);  // monic, ascending
  for (std::size_t k = 0; k <= d; ++k) a[k] = to_long_double(f.coefficient(k) / f.leading());

  if (d == 0) return {};
  if (d == 1) return {cld(-a[0], 0)};
  if (d == 2) {
    long double b = a[1], c = a[0];
    long double disc = b * b - 4 * c;
    if (disc >= 0) {
      // Avoid cancellation between -b and the root of the discriminant.
      long double q = -0.5L * (b + std::copysign(std::sqrt(disc), b));
      if (q == 0) return {cld(0, 0), cld(0, 0)};
      return {cld(q, 0), cld(c / q, 0)};
    }
    long double im = std::sqrt(-disc) / 2;
    return {cld(-b / 2, im), cld(-b / 2, -im)};
  }

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -static_cast<double>(a[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<cld> z(d);
  if (solver.info() == Eigen::Success) {
    for (std::size_t i = 0; i < d; ++i) {
      auto ev = solver.eigenvalues()(static_cast<Eigen::Index>(i));
      z[i] = cld(ev.real(), ev.imag());
    }
  } else {
    // Standard Aberth starting circle.
    long double radius = 1;
    for (std::size_t k = 0; k < d; ++k) radius = std::max(radius, 1 + std::fabs(a[k]));
    for (std::size_t i = 0; i < d; ++i) z[i] = std::polar(radius, 0.4L + 6.283185307179586L * i / d);
  }

  auto eval = [&](cld x, cld& deriv) {
    cld p = a[d];
    cld dp = 0;
    for (std::size_t k = d; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + a[k];
    }
    deriv = dp;
    return p;
  };

  // Aberth-Ehrlich refinement keeps the approximations apart, unlike independent Newton steps.
  for (int iter = 0; iter < 100; ++iter) {
    long double biggest = 0;
    for (std::size_t i = 0; i < d; ++i) {
      cld dp;
      cld p = eval(z[i], dp);
      if (p == cld(0)) continue;
      cld ratio = p / dp;
      cld sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      cld step = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      biggest = std::max(biggest, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (biggest < 1e-17L) break;
  }
  return z;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

Polynomial Polynomial::monomial(std::size_t degree, Rational c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_descending(const std::vector<Rational>& descending) {
  return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

std::vector<Rational> Polynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Rational lc = leading();
  for (auto& c : p.c_) c /= lc;
  return p;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

std::size_t Polynomial::low_order_zeros() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return is_zero() ? 0 : k;
}

Polynomial Polynomial::shift_down(std::size_t k) const {
  if (k >= c_.size()) return {};
  return Polynomial(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::complex<long double> Polynomial::evaluate(std::complex<long double> x) const {
  std::complex<long double> acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + to_long_double(c_[k]);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.ascending();
  const std::size_t db = b.degree();
  if (a.is_zero() || a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  const Rational& lb = b.leading();
  for (std::size_t k = a.degree() + 1; k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lb;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficient(j);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<Polynomial, std::size_t>> square_free_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(df, a).first;
  Polynomial d = c - b.derivative();
  std::size_t i = 1;
  while (!(b.degree() == 0)) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  std::vector<std::complex<double>> out;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    for (const cld& z : roots_of_square_free(factor)) {
      double re = static_cast<double>(z.real());
      double im = static_cast<double>(z.imag());
      double mag = std::hypot(re, im);
      if (std::fabs(im) <= 1e-10 * (1 + mag)) im = 0;
      if (std::fabs(re) <= 1e-300) re = 0;
      if (re == 0) re = 0.0;  // no negative zero
      if (im == 0) im = 0.0;
      for (std::size_t k = 0; k < mult; ++k) out.emplace_back(re, im);
    }
  }
  return out;
}

std::string format_coefficients(const Polynomial& p) {
  std::string out;
  auto desc = p.descending();
  for (std::size_t k = 0; k < desc.size(); ++k) {
    if (k) out += ',';
    out += to_string(desc[k]);
  }
  return out;
}

}  // namespace dspec

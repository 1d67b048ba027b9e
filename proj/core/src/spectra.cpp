#include "dspec/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>

#include "dspec/error.hpp"

namespace dspec {

namespace {

Integer div_exact(const Integer& a, std::size_t k) {
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
  return q;
}
Rational div_exact(const Rational& a, std::size_t k) { return a / static_cast<unsigned long>(k); }
Gaussian div_exact(const Gaussian& a, std::size_t k) { return a / Rational(static_cast<unsigned long>(k)); }

// Coefficients c_0..c_n (ascending) of det(tI - A), c_n = 1.
template <class T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a) {
  if (!a.square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  if (n == 0) return c;
  Matrix<T> m = Matrix<T>::identity(n);  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> am = a * m;
    c[n - k] = -div_exact(am.trace(), k);
    if (k == n) break;
    m = std::move(am);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return c;
}

void canonicalize(std::complex<double>& z) {
  double re = z.real(), im = z.imag();
  double mag = std::hypot(re, im);
  if (std::fabs(re) <= 1e-10 * (1 + mag)) re = 0;
  if (std::fabs(im) <= 1e-10 * (1 + mag)) im = 0;
  z = {re + 0.0, im + 0.0};
}

std::vector<std::complex<double>> roots_for_display(const CharPoly& p) {
  std::vector<std::complex<double>> out(p.zero_multiplicity(), {0.0, 0.0});
  for (auto z : numeric_roots(nonzero_part(p).polynomial())) {
    canonicalize(z);
    out.push_back(z);
  }
  sort_for_display(out);
  return out;
}

std::string format_double(double x) {
  if (x == 0) x = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

double zero_threshold(const std::vector<std::complex<double>>& v) {
  double mx = 0;
  for (const auto& z : v) mx = std::max(mx, std::abs(z));
  return 1e-8 * (1 + mx);
}

}  // namespace

CharPoly::CharPoly(Polynomial p) : p_(std::move(p)) {
  if (p_.is_zero() || p_.leading() != 1) throw InvalidArgument("characteristic polynomial must be monic");
}

CharPoly char_poly(const ExactMatrix& m) {
  std::vector<Rational> c;
  if (is_integral(m)) {
    for (const auto& z : faddeev_leverrier(to_integer_matrix(m))) c.emplace_back(z);
  } else {
    c = faddeev_leverrier(m);
  }
  return CharPoly(Polynomial(std::move(c)));
}

CharPoly char_poly(const GaussianMatrix& m) {
  auto g = faddeev_leverrier(m);
  std::vector<Rational> c;
  c.reserve(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k].im != 0) throw NonRealCoefficient("coefficient of t^" + std::to_string(k) + " is not real");
    c.push_back(g[k].re);
  }
  return CharPoly(Polynomial(std::move(c)));
}

CharPoly nonzero_part(const CharPoly& p) {
  return CharPoly(p.polynomial().shift_down(p.zero_multiplicity()));
}

void sort_for_display(std::vector<std::complex<double>>& values) {
  std::stable_sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

SpectrumReport spectrum_of(const AnyMatrix& m, MatrixKind kind) {
  SpectrumReport r;
  r.kind = kind;
  if (const auto* x = std::get_if<ExactMatrix>(&m)) {
    r.exact = char_poly(*x);
  } else if (const auto* g = std::get_if<GaussianMatrix>(&m)) {
    r.exact = char_poly(*g);
  } else {
    const auto& f = std::get<FloatMatrix>(m);
    const auto n = static_cast<Eigen::Index>(f.rows());
    Eigen::MatrixXd e(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) e(i, j) = f(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (n > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
      for (Eigen::Index i = 0; i < n; ++i) r.floats.emplace_back(solver.eigenvalues()(i) + 0.0, 0.0);
    }
    sort_for_display(r.floats);
    return r;
  }
  r.floats = roots_for_display(*r.exact);
  return r;
}

SpectrumReport spectrum(const Digraph& d, MatrixKind kind, BuildOptions options) {
  return spectrum_of(build_matrix(d, kind, options), kind);
}

std::vector<std::complex<double>> nonzero_floats(const SpectrumReport& r) {
  double tol = zero_threshold(r.floats);
  std::vector<std::complex<double>> out;
  for (const auto& z : r.floats)
    if (std::abs(z) > tol) out.push_back(z);
  sort_for_display(out);
  return out;
}

bool nonzero_spectra_equal(const SpectrumReport& a, const SpectrumReport& b) {
  if (a.kind != b.kind) throw KindMismatch("cannot compare spectra of different kinds");
  if (a.exact && b.exact) return nonzero_part(*a.exact) == nonzero_part(*b.exact);
  if (a.exact.has_value() != b.exact.has_value()) throw KindMismatch("exact and float reports cannot be compared");
  auto x = nonzero_floats(a), y = nonzero_floats(b);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > 1e-7) return false;
  return true;
}

std::string format_value(std::complex<double> z) {
  // Float kinds leave rounding noise where an exact zero belongs.
  constexpr double noise = 1e-12;
  if (std::fabs(z.real()) < noise) z.real(0);
  if (std::fabs(z.imag()) < noise) z.imag(0);
  if (z.imag() == 0) return format_double(z.real());
  std::string im = format_double(std::fabs(z.imag())) + "i";
  if (z.real() == 0) return (z.imag() < 0 ? "-" : "") + im;
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

std::string to_line(const SpectrumReport& r) {
  std::string out(kind_name(r.kind));
  if (r.exact) out += "; poly=" + format_coefficients(r.exact->polynomial());
  out += "; roots=";
  for (std::size_t k = 0; k < r.floats.size(); ++k) {
    if (k) out += ',';
    out += format_value(r.floats[k]);
  }
  return out;
}

}  // namespace dspec

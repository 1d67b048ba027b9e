#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dspec/matrices.hpp"
#include "dspec/polynomial.hpp"

namespace dspec {

// Monic det(tI - M) with exact rational coefficients.
class CharPoly {
 public:
  CharPoly() : p_(Polynomial::constant(1)) {}
  // Throws InvalidArgument unless p is monic.
  explicit CharPoly(Polynomial p);

  const Polynomial& polynomial() const { return p_; }
  std::size_t degree() const { return p_.degree(); }
  std::vector<Rational> coefficients() const { return p_.descending(); }
  std::size_t zero_multiplicity() const { return p_.low_order_zeros(); }

  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.p_ == b.p_; }
  friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }

 private:
  Polynomial p_;
};

// Faddeev-LeVerrier in exact arithmetic. Integer matrices take an mpz fast path.
CharPoly char_poly(const ExactMatrix& m);
// Hermitian input: throws NonRealCoefficient if an imaginary part survives.
CharPoly char_poly(const GaussianMatrix& m);

// p / t^zero_multiplicity.
CharPoly nonzero_part(const CharPoly& p);

struct SpectrumReport {
  MatrixKind kind{};
  std::optional<CharPoly> exact;  // absent for the two normalized Laplacian kinds
  // Sorted by real part, then imaginary part, both descending; |floats| = matrix dimension.
  std::vector<std::complex<double>> floats;
};

SpectrumReport spectrum(const Digraph& d, MatrixKind kind, BuildOptions options = {});
// Eigenvalues of an already-built matrix of the given kind.
SpectrumReport spectrum_of(const AnyMatrix& m, MatrixKind kind);

// Throws KindMismatch when the kinds differ.
bool nonzero_spectra_equal(const SpectrumReport& a, const SpectrumReport& b);

// Nonzero eigenvalues of a float report (the tolerance rule of nonzero_spectra_equal).
std::vector<std::complex<double>> nonzero_floats(const SpectrumReport& r);

void sort_for_display(std::vector<std::complex<double>>& values);
// Shortest of 6 significant digits; complex values as a+bi / a-bi.
std::string format_value(std::complex<double> z);
// "kind; poly=1,-8,15,0; roots=5,3,0" (the poly field is omitted for float-only kinds).
std::string to_line(const SpectrumReport& r);

}  // namespace dspec

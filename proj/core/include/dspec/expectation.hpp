#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "dspec/polynomial.hpp"
#include "dspec/spectra.hpp"

namespace dspec {

// A written-down spectrum, parsed from a comma-separated list of items:
//   q, q^k          rational eigenvalue (with multiplicity k)
//   pm(a,b,c)       a + b*sqrt(c) and a - b*sqrt(c); c < 0 gives a conjugate pair
//   nested(a,p,q,c) the four values a +- sqrt(p +- q*sqrt(c))
//   poly(c_n,...,c_0) the roots of the given monic polynomial
//   ~x              a decimal approximation, matched to 5e-5
// Everything but ~x is exact and contributes a factor to `exact_factor`.
struct ExpectedSpectrum {
  std::string text;
  Polynomial exact_factor = Polynomial::constant(1);
  std::vector<std::complex<double>> exact_values;  // numeric form of the exact items
  std::vector<double> decimals;

  std::size_t size() const { return exact_values.size() + decimals.size(); }
};

// Throws ParseError on malformed text.
ExpectedSpectrum parse_expected(std::string_view text);

inline constexpr double decimal_tolerance = 5e-5;
inline constexpr double closed_form_float_tolerance = 1e-9;

struct MatchResult {
  bool ok = false;
  std::string detail;  // first mismatch, empty on success
};

// Exact reports: with no decimals the char poly must equal exact_factor; otherwise exact_factor
// must divide it and the cofactor's roots must match the decimals one to one.
// Float reports: every value is matched numerically (1e-9 for closed forms, 5e-5 for decimals).
MatchResult match_spectrum(const SpectrumReport& actual, const ExpectedSpectrum& expected);

}  // namespace dspec

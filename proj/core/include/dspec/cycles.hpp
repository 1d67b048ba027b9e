#pragma once

#include <cstddef>
#include <vector>

#include "dspec/digraph.hpp"
#include "dspec/scalar.hpp"

namespace dspec {

struct CycleCountVector {
  std::vector<Integer> counts;  // counts[m-1] = N_m = trace(A^m)

  std::size_t order() const { return counts.size(); }
  const Integer& operator[](std::size_t m) const { return counts.at(m - 1); }  // 1-based
  friend bool operator==(const CycleCountVector&, const CycleCountVector&) = default;
};

// Throws InvalidArgument for M = 0.
CycleCountVector count_cycles(const Digraph& d, std::size_t max_order);

// Max row sum of A(D), an upper bound on its spectral radius.
Integer spectral_radius_bound(const Digraph& d);

// |exp(sum_{m<=M} t^m N_m / m) - 1/det(I - tA)|. Requires |t| * bound < 1 (any t when the
// bound is 0) and M >= 1; throws InvalidArgument otherwise.
double bowen_lanford_residual(const Digraph& d, const Rational& t, std::size_t max_order);

struct CycleSpectrumCheck {
  bool holds = true;          // false only on a counterexample
  bool counts_equal = false;  // N_m agree for m <= max(|V1|, |V2|)
};

CycleSpectrumCheck cycle_equality_implies_spectrum(const Digraph& a, const Digraph& b);

}  // namespace dspec

#include "dspec/cycles.hpp"

#include <algorithm>
#include <cmath>

#include "dspec/error.hpp"
#include "dspec/matrices.hpp"
#include "dspec/spectra.hpp"

namespace dspec {

CycleCountVector count_cycles(const Digraph& d, std::size_t max_order) {
  if (max_order == 0) throw InvalidArgument("cycle count order must be positive");
  IntegerMatrix a = to_integer_matrix(adjacency_matrix(d));
  CycleCountVector out;
  out.counts.reserve(max_order);
  IntegerMatrix power = a;
  for (std::size_t m = 1; m <= max_order; ++m) {
    out.counts.push_back(power.trace());
    if (m < max_order) power = power * a;
  }
  return out;
}

Integer spectral_radius_bound(const Digraph& d) {
  std::size_t best = 0;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.out_edges(v).size());
  return Integer(static_cast<unsigned long>(best));
}

double bowen_lanford_residual(const Digraph& d, const Rational& t, std::size_t max_order) {
  if (max_order == 0) throw InvalidArgument("truncation order must be positive");
  Integer bound = spectral_radius_bound(d);
  if (bound > 0 && abs(t) * bound >= 1)
    throw InvalidArgument("t = " + to_string(t) + " is outside the convergence region |t| < 1/" + to_string(bound));

  CycleCountVector n = count_cycles(d, max_order);
  Rational sum = 0;
  Rational tm = 1;
  for (std::size_t m = 1; m <= max_order; ++m) {
    tm *= t;
    sum += tm * n[m] / static_cast<unsigned long>(m);
  }
  double lhs = std::exp(sum.get_d());

  const std::size_t size = d.vertex_count();
  ExactMatrix im = ExactMatrix::identity(size);
  ExactMatrix a = adjacency_matrix(d);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) im(i, j) -= t * a(i, j);
  Rational det = determinant(std::move(im));
  double rhs = Rational(1 / det).get_d();
  return std::fabs(lhs - rhs);
}

CycleSpectrumCheck cycle_equality_implies_spectrum(const Digraph& a, const Digraph& b) {
  CycleSpectrumCheck r;
  std::size_t order = std::max<std::size_t>({a.vertex_count(), b.vertex_count(), 1});
  r.counts_equal = count_cycles(a, order) == count_cycles(b, order);
  if (r.counts_equal) {
    r.holds = nonzero_spectra_equal(spectrum(a, MatrixKind::Adjacency), spectrum(b, MatrixKind::Adjacency));
  }
  return r;
}

}  // namespace dspec

#include "dspec/expectation.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <limits>

#include "dspec/error.hpp"

namespace dspec {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Top-level split on commas, ignoring those inside parentheses.
std::vector<std::string> split_items(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      std::string item = trim(s.substr(start, i - start));
      if (!item.empty()) out.push_back(item);
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::vector<Rational> call_args(const std::string& item, const std::string& name, std::size_t arity) {
  std::string inner = item.substr(name.size() + 1, item.size() - name.size() - 2);
  std::vector<Rational> out;
  for (const auto& a : split_items(inner)) out.push_back(parse_rational(a));
  if (arity && out.size() != arity)
    throw ParseError(0, "'" + item + "' needs " + std::to_string(arity) + " arguments");
  return out;
}

bool is_call(const std::string& item, const std::string& name) {
  return item.size() > name.size() + 1 && item.compare(0, name.size() + 1, name + "(") == 0 && item.back() == ')';
}

// t - a as a polynomial.
Polynomial linear(const Rational& a) { return Polynomial(std::vector<Rational>{-a, 1}); }

std::complex<double> cd(const Rational& q) { return {q.get_d(), 0.0}; }

}  // namespace

ExpectedSpectrum parse_expected(std::string_view text) {
  ExpectedSpectrum e;
  e.text = std::string(text);
  for (const auto& item : split_items(text)) {
    try {
      if (item[0] == '~') {
        double x = 0;
        const char* first = item.data() + 1;
        const char* last = item.data() + item.size();
        auto res = std::from_chars(first, last, x);
        if (res.ec != std::errc() || res.ptr != last) throw ParseError(0, "bad decimal '" + item + "'");
        e.decimals.push_back(x);
      } else if (is_call(item, "pm")) {
        auto a = call_args(item, "pm", 3);
        // (t - a)^2 - b^2 c
        Polynomial shifted = linear(a[0]);
        e.exact_factor = e.exact_factor * (shifted * shifted - Polynomial::constant(a[1] * a[1] * a[2]));
        std::complex<double> root = std::sqrt(cd(a[2])) * a[1].get_d();
        e.exact_values.push_back(cd(a[0]) + root);
        e.exact_values.push_back(cd(a[0]) - root);
      } else if (is_call(item, "nested")) {
        auto a = call_args(item, "nested", 4);
        // ((t - a)^2 - p)^2 - q^2 c
        Polynomial y = linear(a[0]);
        Polynomial inner = y * y - Polynomial::constant(a[1]);
        e.exact_factor = e.exact_factor * (inner * inner - Polynomial::constant(a[2] * a[2] * a[3]));
        std::complex<double> s = std::sqrt(cd(a[3])) * a[2].get_d();
        for (auto w : {cd(a[1]) + s, cd(a[1]) - s}) {
          e.exact_values.push_back(cd(a[0]) + std::sqrt(w));
          e.exact_values.push_back(cd(a[0]) - std::sqrt(w));
        }
      } else if (is_call(item, "poly")) {
        auto c = call_args(item, "poly", 0);
        Polynomial p = Polynomial::from_descending(c);
        if (p.is_zero() || p.leading() != 1) throw ParseError(0, "'" + item + "' must be monic");
        e.exact_factor = e.exact_factor * p;
        for (auto z : numeric_roots(p)) e.exact_values.push_back(z);
      } else {
        auto caret = item.find('^');
        Rational q = parse_rational(trim(item.substr(0, caret)));
        std::size_t k = caret == std::string::npos ? 1 : std::stoul(item.substr(caret + 1));
        for (std::size_t j = 0; j < k; ++j) {
          e.exact_factor = e.exact_factor * linear(q);
          e.exact_values.push_back(cd(q));
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ParseError(0, "bad spectrum item '" + item + "': " + ex.what());
    }
  }
  return e;
}

namespace {

// Greedy nearest matching of expected values (strictest tolerance first) to actual values.
MatchResult match_numeric(std::vector<std::complex<double>> actual,
                          std::vector<std::pair<std::complex<double>, double>> wanted) {
  if (actual.size() != wanted.size())
    return {false, "expected " + std::to_string(wanted.size()) + " values, found " + std::to_string(actual.size())};
  std::stable_sort(wanted.begin(), wanted.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::vector<bool> used(actual.size(), false);
  for (const auto& [value, tol] : wanted) {
    std::size_t best = actual.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < actual.size(); ++i) {
      if (used[i]) continue;
      double dist = std::abs(actual[i] - value);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (best == actual.size() || best_dist > tol)
      return {false, "no eigenvalue within " + format_value({tol, 0}) + " of " + format_value(value) +
                         (best < actual.size() ? " (nearest " + format_value(actual[best]) + ")" : "")};
    used[best] = true;
  }
  return {true, {}};
}

}  // namespace

MatchResult match_spectrum(const SpectrumReport& actual, const ExpectedSpectrum& expected) {
  if (!actual.exact) {
    std::vector<std::pair<std::complex<double>, double>> wanted;
    for (auto z : expected.exact_values) wanted.emplace_back(z, closed_form_float_tolerance);
    for (double x : expected.decimals) wanted.emplace_back(std::complex<double>(x, 0), decimal_tolerance);
    return match_numeric(actual.floats, std::move(wanted));
  }
  const Polynomial& p = actual.exact->polynomial();
  if (expected.decimals.empty()) {
    if (p == expected.exact_factor) return {true, {}};
    return {false, "characteristic polynomial " + format_coefficients(p) + " differs from expected " +
                       format_coefficients(expected.exact_factor)};
  }
  auto [quotient, remainder] = divmod(p, expected.exact_factor);
  if (!remainder.is_zero())
    return {false, "expected factor " + format_coefficients(expected.exact_factor) + " does not divide " +
                       format_coefficients(p)};
  std::vector<std::pair<std::complex<double>, double>> wanted;
  for (double x : expected.decimals) wanted.emplace_back(std::complex<double>(x, 0), decimal_tolerance);
  return match_numeric(numeric_roots(quotient), std::move(wanted));
}

}  // namespace dspec

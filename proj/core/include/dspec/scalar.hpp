#pragma once

#include <gmpxx.h>

#include <string>

namespace dspec {

using Integer = mpz_class;
using Rational = mpq_class;

// a + b i with rational a, b.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() : re(0), im(0) {}
  Gaussian(int r) : re(r), im(0) {}  // NOLINT: implicit from small literals is intended
  Gaussian(Rational r) : re(std::move(r)), im(0) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  // Division by a rational only; that is all the algorithms here need.
  Gaussian& operator/=(const Rational& q) {
    re /= q;
    im /= q;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Rational& q) { return a /= q; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

// "p/q", or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// "a/b+c/d*i"; the imaginary part is always written.
std::string to_string(const Gaussian& g);

Rational parse_rational(const std::string& text);

}  // namespace dspec

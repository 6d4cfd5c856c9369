#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value is stored as integer coordinates with a common positive denominator
// in the power basis 1, zeta, ..., zeta^{phi(N)-1}, reduced modulo the N-th
// cyclotomic polynomial.  Conductors are never minimized; values of different
// conductors meet in the lcm field.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cellmod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Phi_N as a monic integer polynomial, ascending coefficients.
std::vector<Integer> cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

class Cyclotomic {
 public:
  Cyclotomic() : n_(1), num_(1), den_(1) {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return from_integer(1); }
  static Cyclotomic from_integer(const Integer& v);
  static Cyclotomic from_rational(const Rational& v);
  // zeta_n^k
  static Cyclotomic root_of_unity(unsigned n, long long k);

  unsigned conductor() const { return n_; }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_rational() const;
  // requires is_rational()
  Rational rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  // throws std::domain_error on zero
  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;
  // complex conjugation, zeta -> zeta^{-1}
  Cyclotomic conj() const;

  // image in Q(zeta_m); requires conductor() | m
  Cyclotomic embedded(unsigned m) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  // total order (common-conductor lexicographic); for deterministic sorting only
  static int compare(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) < 0; }

  std::complex<double> to_complex() const;
  // decimal rendering with the requested number of significant digits;
  // display only, never used for equality
  std::string to_decimal_string(unsigned digits = 6) const;
  // symbolic rendering like "1/2 - 1/2*z12^2"
  std::string to_string() const;

 private:
  void reduce_and_normalize(std::vector<Integer> poly, const Integer& den);
  void normalize();

  unsigned n_;
  std::vector<Integer> num_;  // length phi(n_)
  Integer den_;               // > 0
};

// Root-of-unity data for a type A_{k} fusion category: order = 2(k+1) and an
// exponent l coprime to k+1 selecting q = zeta_order^l.
struct QuantumSpec {
  unsigned order = 4;
  unsigned exponent = 1;

  QuantumSpec() = default;
  QuantumSpec(unsigned order_, unsigned exponent_);
  static QuantumSpec for_rank(unsigned k, unsigned l = 1);

  unsigned rank() const { return order / 2 - 1; }  // the k
  Cyclotomic q_power(long long j) const;           // q^j
  Cyclotomic braiding_root() const;                // z with z^2 = q, order 2*order

  friend bool operator==(const QuantumSpec& a, const QuantumSpec& b) {
    return a.order == b.order && a.exponent == b.exponent;
  }
};

// [n] = (q^n - q^{-n})/(q - q^{-1}) via the recurrence [n] = [2][n-1] - [n-2]
Cyclotomic quantum_number(long long n, const QuantumSpec& spec);
// [m]! = [1][2]...[m], with [0]! = 1
Cyclotomic quantum_factorial(long long m, const QuantumSpec& spec);

}  // namespace cellmod

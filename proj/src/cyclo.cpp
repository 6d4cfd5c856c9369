#include "cellmod/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace cellmod {

namespace {

struct Context {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<Integer> phi_poly;  // monic, degree phi
};

// divides a by b (monic), both ascending; remainder must be zero
std::vector<Integer> exact_div(std::vector<Integer> a, const std::vector<Integer>& b) {
  const size_t db = b.size() - 1;
  if (a.size() - 1 < db) throw std::logic_error("exact_div: degree underflow");
  std::vector<Integer> q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& c : a)
    if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

const Context& context(unsigned n) {
  static std::map<unsigned, std::unique_ptr<Context>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto ctx = std::make_unique<Context>();
  ctx->n = n;
  ctx->phi_poly = cyclotomic_polynomial(n);
  ctx->phi = static_cast<unsigned>(ctx->phi_poly.size() - 1);
  return *cache.emplace(n, std::move(ctx)).first->second;
}

// in-place reduction of an ascending integer polynomial modulo phi_poly
void reduce_mod_phi(std::vector<Integer>& p, const Context& ctx) {
  const unsigned phi = ctx.phi;
  for (size_t i = p.size(); i-- > phi;) {
    Integer c = p[i];
    if (c == 0) continue;
    p[i] = 0;
    for (unsigned j = 0; j < phi; ++j) p[i - phi + j] -= c * ctx.phi_poly[j];
  }
  p.resize(phi);
}

Integer gcd_int(Integer a, Integer b) {
  using boost::multiprecision::gcd;
  return gcd(a, b);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  if (n == 1) return num;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = exact_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

void Cyclotomic::normalize() {
  if (den_ < 0) throw std::logic_error("negative denominator");
  Integer g = den_;
  for (const auto& c : num_) {
    if (c != 0) g = gcd_int(g, c < 0 ? Integer(-c) : c);
    if (g == 1) break;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

void Cyclotomic::reduce_and_normalize(std::vector<Integer> poly, const Integer& den) {
  const Context& ctx = context(n_);
  reduce_mod_phi(poly, ctx);
  num_ = std::move(poly);
  den_ = den;
  normalize();
}

Cyclotomic Cyclotomic::from_integer(const Integer& v) {
  Cyclotomic c;
  c.num_[0] = v;
  return c;
}

Cyclotomic Cyclotomic::from_rational(const Rational& v) {
  Cyclotomic c;
  c.num_[0] = boost::multiprecision::numerator(v);
  c.den_ = boost::multiprecision::denominator(v);
  c.normalize();
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long long k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  long long r = k % static_cast<long long>(n);
  if (r < 0) r += n;
  Cyclotomic c;
  c.n_ = n;
  std::vector<Integer> poly(static_cast<size_t>(r) + 1, 0);
  poly[static_cast<size_t>(r)] = 1;
  c.reduce_and_normalize(std::move(poly), Integer(1));
  return c;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value: value is irrational");
  return Rational(num_[0], den_);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("embedded: conductor must divide target");
  const unsigned stride = m / n_;
  std::vector<Integer> poly(static_cast<size_t>(num_.size() - 1) * stride + 1, 0);
  for (size_t i = 0; i < num_.size(); ++i) poly[i * stride] = num_[i];
  Cyclotomic r;
  r.n_ = m;
  r.reduce_and_normalize(std::move(poly), den_);
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = std::lcm(n_, o.n_);
    *this = embedded(m);
    return *this += o.embedded(m);
  }
  // common denominator den_*o.den_ then renormalize
  std::vector<Integer> poly(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) poly[i] = num_[i] * o.den_ + o.num_[i] * den_;
  num_ = std::move(poly);
  den_ *= o.den_;
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (n_ != o.n_) {
    unsigned m = std::lcm(n_, o.n_);
    *this = embedded(m);
    return *this *= o.embedded(m);
  }
  const size_t da = num_.size(), db = o.num_.size();
  std::vector<Integer> poly(da + db - 1, 0);
  for (size_t i = 0; i < da; ++i) {
    if (num_[i] == 0) continue;
    for (size_t j = 0; j < db; ++j) {
      if (o.num_[j] == 0) continue;
      poly[i + j] += num_[i] * o.num_[j];
    }
  }
  reduce_and_normalize(std::move(poly), den_ * o.den_);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse: division by zero");
  if (is_rational()) {
    Cyclotomic r = *this;
    bool neg = r.num_[0] < 0;
    Integer n0 = neg ? Integer(-r.num_[0]) : r.num_[0];
    Integer d0 = r.den_;
    r.num_[0] = neg ? Integer(-d0) : d0;
    r.den_ = n0;
    r.normalize();
    return r;
  }
  // extended Euclid in Q[x] against Phi_n
  using Poly = std::vector<Rational>;
  const Context& ctx = context(n_);
  auto deg = [](const Poly& p) {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  Poly r0(ctx.phi_poly.size());
  for (size_t i = 0; i < ctx.phi_poly.size(); ++i) r0[i] = Rational(ctx.phi_poly[i]);
  Poly r1(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) r1[i] = Rational(num_[i], den_);
  Poly s0{Rational(0)}, s1{Rational(1)};  // coefficients of *this
  while (true) {
    long d1 = deg(r1);
    if (d1 < 0) throw std::logic_error("inverse: vanishing remainder before unit");
    if (d1 == 0) break;
    long d0 = deg(r0);
    // r0 -= (lead0/lead1) x^{d0-d1} r1, looped down to deg(r0) < deg(r1)
    Poly q(static_cast<size_t>(d0 - d1) + 1, Rational(0));
    while (d0 >= d1) {
      Rational c = r0[static_cast<size_t>(d0)] / r1[static_cast<size_t>(d1)];
      q[static_cast<size_t>(d0 - d1)] = c;
      for (long j = 0; j <= d1; ++j)
        r0[static_cast<size_t>(d0 - d1 + j)] -= c * r1[static_cast<size_t>(j)];
      d0 = deg(r0);
    }
    // s0 -= q * s1
    Poly ns(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) ns[i + j] -= q[i] * s1[j];
    }
    std::swap(r0, r1);
    s0 = std::move(ns);
    std::swap(s0, s1);
  }
  // r1 is a nonzero constant: inverse = s1 / r1
  Rational c = r1[0];
  Integer den = 1;
  for (const auto& x : s1) den = den / gcd_int(den, boost::multiprecision::denominator(x)) *
                                 boost::multiprecision::denominator(x);
  den *= boost::multiprecision::numerator(c) < 0
             ? Integer(-boost::multiprecision::numerator(c))
             : boost::multiprecision::numerator(c);
  Cyclotomic out;
  out.n_ = n_;
  std::vector<Integer> poly(std::max<size_t>(s1.size(), 1), 0);
  Rational scale = Rational(den) / c;
  for (size_t i = 0; i < s1.size(); ++i) {
    Rational v = s1[i] * scale;
    if (boost::multiprecision::denominator(v) != 1)
      throw std::logic_error("inverse: denominator clearing failed");
    poly[i] = boost::multiprecision::numerator(v);
  }
  out.reduce_and_normalize(std::move(poly), den < 0 ? Integer(-den) : den);
  if (den < 0)
    for (auto& x : out.num_) x = -x;
  return out;
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = Cyclotomic::one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Integer> poly(n_, 0);
  poly[0] = num_[0];
  for (size_t i = 1; i < num_.size(); ++i) poly[n_ - i] += num_[i];
  Cyclotomic r;
  r.n_ = n_;
  r.reduce_and_normalize(std::move(poly), den_);
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return Cyclotomic::compare(a, b) == 0;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = std::lcm(a.n_, b.n_);
  if (a.n_ != m || b.n_ != m) return compare(a.embedded(m), b.embedded(m));
  for (size_t i = 0; i < a.num_.size(); ++i) {
    Integer l = a.num_[i] * b.den_, r = b.num_[i] * a.den_;
    if (l != r) return l < r ? -1 : 1;
  }
  return 0;
}

std::complex<double> Cyclotomic::to_complex() const {
  const double tau = 2.0 * boost::math::constants::pi<double>();
  std::complex<double> acc(0.0, 0.0);
  double den = static_cast<double>(den_);
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    double arg = tau * static_cast<double>(i) / static_cast<double>(n_);
    acc += static_cast<double>(num_[i]) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc / den;
}

std::string Cyclotomic::to_decimal_string(unsigned digits) const {
  std::complex<double> z = to_complex();
  std::ostringstream os;
  os.precision(static_cast<int>(digits));
  double re = z.real(), im = z.imag();
  // chop artifacts far below the significant range
  if (std::abs(re) < 1e-12) re = 0.0;
  if (std::abs(im) < 1e-12) im = 0.0;
  os << re;
  if (im >= 0)
    os << "+" << im << "i";
  else
    os << "-" << -im << "i";
  return os.str();
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational r(num_[i], den_);
    if (!first) os << (r < 0 ? " - " : " + ");
    else if (r < 0)
      os << "-";
    first = false;
    Integer p = boost::multiprecision::numerator(r);
    if (p < 0) p = -p;
    Integer q = boost::multiprecision::denominator(r);
    bool unit_coeff = (p == 1 && q == 1);
    if (!unit_coeff || i == 0) {
      os << p;
      if (q != 1) os << "/" << q;
    }
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

QuantumSpec::QuantumSpec(unsigned order_, unsigned exponent_) : order(order_), exponent(exponent_) {
  if (order < 4 || order % 2 != 0)
    throw std::invalid_argument("QuantumSpec: order must be even and at least 4");
  if (std::gcd(exponent, order / 2) != 1)
    throw std::invalid_argument("QuantumSpec: exponent must be coprime to order/2");
}

QuantumSpec QuantumSpec::for_rank(unsigned k, unsigned l) {
  if (k < 1) throw std::invalid_argument("QuantumSpec: rank must be at least 1");
  return QuantumSpec(2 * (k + 1), l);
}

Cyclotomic QuantumSpec::q_power(long long j) const {
  return Cyclotomic::root_of_unity(order, j * static_cast<long long>(exponent));
}

Cyclotomic QuantumSpec::braiding_root() const {
  return Cyclotomic::root_of_unity(2 * order, exponent);
}

Cyclotomic quantum_number(long long n, const QuantumSpec& spec) {
  if (n < 0) throw std::invalid_argument("quantum_number: n must be nonnegative");
  Cyclotomic two = spec.q_power(1) + spec.q_power(-1);
  Cyclotomic prev = Cyclotomic::zero();  // [0]
  Cyclotomic cur = Cyclotomic::one();    // [1]
  if (n == 0) return prev;
  for (long long i = 1; i < n; ++i) {
    Cyclotomic next = two * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Cyclotomic quantum_factorial(long long m, const QuantumSpec& spec) {
  if (m < 0) throw std::invalid_argument("quantum_factorial: m must be nonnegative");
  Cyclotomic acc = Cyclotomic::one();
  for (long long i = 2; i <= m; ++i) acc *= quantum_number(i, spec);
  return acc;
}

}  // namespace cellmod

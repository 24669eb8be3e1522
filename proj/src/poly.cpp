#include "qcong/poly.hpp"

#include <algorithm>
#include <utility>

#include "qcong/error.hpp"
#include "qcong/kernels.hpp"

namespace qcong {

namespace {

const Rational kZero{0};

// Scales p to integer coefficients: p = ints / den.
std::vector<Integer> clear_denominators(const Poly& p, Integer& den) {
  den = 1;
  if (!p.is_integral())
    for (const Rational& c : p.coeffs())
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    if (den == 1) {
      out[i] = c.get_num();
    } else {
      mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      out[i] *= c.get_num();
    }
  }
  return out;
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = Rational(coeffs[i]);
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  integral_ = std::all_of(c_.begin(), c_.end(),
                          [](const Rational& c) { return c.get_den() == 1; });
}

const Rational& Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(c_.size() + k);
  std::copy(c_.begin(), c_.end(), v.begin() + static_cast<long>(k));
  Poly r;
  r.c_ = std::move(v);
  r.integral_ = integral_;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    integral_ = true;
    return *this;
  }
  for (Rational& c : c_) c *= s;
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Integer da, db;
  const auto ia = clear_denominators(a, da);
  const auto ib = clear_denominators(b, db);
  const auto prod = kernels::mul_dense(ia, ib);
  std::vector<Rational> v(prod.size());
  const Integer den = da * db;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    v[i] = Rational(prod[i], den);
    if (den != 1) v[i].canonicalize();
  }
  return Poly(std::move(v));
}

DivRem divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly(), p};

  // Only the nonzero divisor terms take part; q_binomial divides by
  // two-term polynomials over and over.
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  std::vector<std::pair<std::size_t, Rational>> terms;
  for (std::size_t i = 0; i < dq; ++i)
    if (sgn(q.coeffs()[i]) != 0) terms.emplace_back(i, q.coeffs()[i]);
  const Rational& lead = q.leading();
  const bool unit_lead = lead == 1;

  std::vector<Rational> r = p.coeffs();
  std::vector<Rational> quot(r.size() - dq);
  Rational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational& top = r[k + dq];
    if (sgn(top) == 0) continue;
    if (unit_lead)
      quot[k] = top;
    else
      quot[k] = top / lead;
    for (const auto& [i, c] : terms) {
      t = quot[k] * c;
      r[k + i] -= t;
    }
    top = 0;
  }
  r.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly exact_div(const Poly& p, const Poly& q) {
  DivRem qr = divrem(p, q);
  if (!qr.rem.is_zero())
    throw NotDivisible("exact_div: nonzero remainder " + to_string(qr.rem));
  return std::move(qr.quot);
}

Poly subst_power(const Poly& p, unsigned long m) {
  if (m == 0) throw InvalidArgument("subst_power: m must be >= 1");
  if (m == 1 || p.is_zero()) return p;
  std::vector<Rational> v((p.size() - 1) * m + 1);
  for (std::size_t i = 0; i < p.size(); ++i) v[i * m] = p.coeffs()[i];
  return Poly(std::move(v));
}

Poly pow(Poly base, unsigned long e) {
  Poly acc = Poly::constant(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Poly product(std::vector<Poly> factors) {
  if (factors.empty()) return Poly::constant(1);
  while (factors.size() > 1) {
    std::vector<Poly> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2)
      next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  return p * Rational(1 / p.leading());
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
  Integer den;
  std::vector<Integer> v = clear_denominators(p, den);
  Integer g = 0;
  for (const Integer& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return v;
  if (sgn(v.back()) < 0) g = -g;
  for (Integer& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

Poly primitive_part(const Poly& p) {
  return Poly::from_integers(primitive_integer_coeffs(p));
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = abs(c);
    std::string body;
    if (i == 0 || mag != 1)
      body = (mag.get_den() == 1 || i == 0) ? mag.get_str()
                                           : "(" + mag.get_str() + ")";
    if (i >= 1) body += var;
    if (i >= 2) body += "^" + std::to_string(i);
    out += body;
  }
  return out;
}

}  // namespace qcong

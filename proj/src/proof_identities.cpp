#include <omp.h>

#include <utility>

#include "qcong/error.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/rootexpand.hpp"

// Identities used inside the proof of the q-binomial expansion at roots of
// unity: the root-of-unity filter of (x; q)_{an}, the six averaging formulae,
// the two exceptional sums, and the O(eps^2) two-monomial relation.

namespace qcong {

namespace {

using XVec = std::vector<CyclotomicNumber>;

Rational rpow(const Rational& base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

CongruenceReport mismatch(std::string family, const CyclotomicNumber& diff,
                          std::string detail) {
  CongruenceReport r;
  r.family = std::move(family);
  r.remainder = diff.as_poly();
  r.detail = std::move(detail);
  return r.finalize();
}

CongruenceReport pass(std::string family) {
  CongruenceReport r;
  r.family = std::move(family);
  return r.finalize();
}

// (1/n) sum_j (zeta^j x; q)_{an} at a rational q, against
// sum_b [an choose bn] (-x)^{bn} q^{bn(bn-1)/2}.
CongruenceReport root_filter(long a, long n, const Rational& q) {
  const auto un = static_cast<unsigned long>(n);
  const long N = a * n;
  XVec avg(static_cast<std::size_t>(N + 1), CyclotomicNumber(un));
  for (long j = 1; j <= n; ++j) {
    const CyclotomicNumber zj = CyclotomicNumber::zeta_power(un, j);
    XVec cur{CyclotomicNumber(un, 1)};
    Rational ql = 1;
    for (long l = 0; l < N; ++l) {
      const CyclotomicNumber c = zj * ql;  // factor (1 - c x)
      XVec next(cur.size() + 1, CyclotomicNumber(un));
      for (std::size_t i = 0; i < cur.size(); ++i) {
        next[i] += cur[i];
        next[i + 1] -= c * cur[i];
      }
      cur = std::move(next);
      ql *= q;
    }
    for (std::size_t i = 0; i < cur.size(); ++i) avg[i] += cur[i];
  }
  for (auto& c : avg) c *= frac(1, n);

  for (long i = 0; i <= N; ++i) {
    Rational expect = 0;
    if (i % n == 0) {
      const long b = i / n;
      const auto tri = static_cast<unsigned long>(i * (i - 1) / 2);
      expect = q_binomial(N, b * n).eval(q) * rpow(q, tri);
      if (i % 2 == 1) expect = -expect;
    }
    const CyclotomicNumber d = avg[static_cast<std::size_t>(i)] - CyclotomicNumber(un, expect);
    if (!d.is_zero())
      return mismatch("root_filter", d,
                      "q=" + to_string(q) + " x^" + std::to_string(i) + " coefficient");
  }
  return pass("root_filter");
}

class Averager {
 public:
  Averager(long n, const Rational& x) : n_(n), un_(static_cast<unsigned long>(n)), x_(x) {}

  // t(y) = y / (1 - y) at y = zeta^e x
  CyclotomicNumber t(long e) const {
    const CyclotomicNumber y = CyclotomicNumber::zeta_power(un_, e) * x_;
    return y * (CyclotomicNumber(un_, 1) - y).inverse();
  }

  template <class F>
  CyclotomicNumber average(F f) const {
    CyclotomicNumber sum(un_);
    for (long j = 1; j <= n_; ++j) sum += f(j);
    return sum * frac(1, n_);
  }

 private:
  long n_;
  unsigned long un_;
  Rational x_;
};

bool valid_class(long k, long n) { return ((k % n) + n) % n != 0; }

CongruenceReport summations(long n, const Rational& x, std::optional<long> k_opt,
                            std::optional<long> l_opt) {
  const auto un = static_cast<unsigned long>(n);
  if (k_opt && !valid_class(*k_opt, n))
    throw InvalidResidueClass("k must satisfy k != 0 (mod n)");
  if (l_opt) {
    if (!valid_class(*l_opt, n)) throw InvalidResidueClass("l must satisfy l != 0 (mod n)");
    if (k_opt && !valid_class(*l_opt - *k_opt, n))
      throw InvalidResidueClass("l must satisfy l != k (mod n)");
  }
  const Rational X = rpow(x, un);
  if (X == 1) throw InvalidArgument("sample x must not be a root of unity");
  const Rational g = X / (1 - X);
  const Rational g2 = X / ((1 - X) * (1 - X));
  const Rational g3 = X * (1 + X) / ((1 - X) * (1 - X) * (1 - X));
  const Averager av(n, x);
  auto C = [&](const Rational& c) { return CyclotomicNumber(un, c); };
  auto check = [&](int which, const CyclotomicNumber& lhs, const CyclotomicNumber& rhs,
                   std::string tag) -> std::optional<CongruenceReport> {
    const CyclotomicNumber d = lhs - rhs;
    if (d.is_zero()) return std::nullopt;
    return mismatch("summations", d,
                    "formula " + std::to_string(which) + " at x=" + to_string(x) + tag);
  };

  if (auto r = check(1, av.average([&](long j) { return av.t(j); }), C(g), "")) return *r;
  if (auto r = check(2, av.average([&](long j) { auto t = av.t(j); return t * t; }),
                     C(n * g2 - g), ""))
    return *r;
  if (auto r = check(4, av.average([&](long j) { auto t = av.t(j); return t * t * t; }),
                     C(frac(n * n, 2) * g3 - frac(3 * n, 2) * g2 + g), ""))
    return *r;

  std::vector<long> ks;
  if (k_opt) ks.push_back(*k_opt);
  else
    for (long k = 1; k < n; ++k) ks.push_back(k);
  for (long k : ks) {
    const std::string tk = " k=" + std::to_string(k);
    if (auto r = check(3, av.average([&](long j) { return av.t(j) * av.t(j + k); }), C(-g), tk))
      return *r;
    const CyclotomicNumber zk = CyclotomicNumber::zeta_power(un, k);
    const CyclotomicNumber wk = zk * (C(1) - zk).inverse();
    if (auto r = check(6,
                       av.average([&](long j) { auto t = av.t(j); return t * t * av.t(j + k); }),
                       wk * Rational(n * g2) + C(g), tk))
      return *r;
    std::vector<long> ls;
    if (l_opt) ls.push_back(*l_opt);
    else
      for (long l = 1; l < n; ++l)
        if (valid_class(l - k, n)) ls.push_back(l);
    for (long l : ls) {
      if (!valid_class(l - k, n)) throw InvalidResidueClass("l must satisfy l != k (mod n)");
      if (auto r = check(5,
                         av.average([&](long j) { return av.t(j) * av.t(j + k) * av.t(j + l); }),
                         C(g), tk + " l=" + std::to_string(l)))
        return *r;
    }
  }
  return pass("summations");
}

std::vector<CyclotomicNumber> weights(long n) {
  // w(r) = zeta^r / (1 - zeta^r) for r = 1..n-1; w(0) unused.
  const auto un = static_cast<unsigned long>(n);
  std::vector<CyclotomicNumber> w(static_cast<std::size_t>(n), CyclotomicNumber(un));
  for (long r = 1; r < n; ++r) {
    const CyclotomicNumber z = CyclotomicNumber::zeta_power(un, r);
    w[static_cast<std::size_t>(r)] = z * (CyclotomicNumber(un, 1) - z).inverse();
  }
  return w;
}

long mod(long v, long n) { return ((v % n) + n) % n; }

}  // namespace

ExceptionalSums exceptional_sums_reference(long a, long n) {
  const auto un = static_cast<unsigned long>(n);
  const auto w = weights(n);
  const long top = a * n - 1;
  ExceptionalSums s{CyclotomicNumber(un), CyclotomicNumber(un)};
  for (long l1 = 1; l1 <= top; ++l1)
    for (long l2 = 1; l2 <= top; ++l2) {
      if (mod(l1 - l2, n) != 0)
        s.pair += w[static_cast<std::size_t>(mod(l2 - l1, n))] * Rational(l1 * l1 * l2);
      for (long l3 = 1; l3 <= top; ++l3)
        if (mod(l1 - l2, n) == 0 && mod(l1 - l3, n) != 0)
          s.triple += w[static_cast<std::size_t>(mod(l3 - l1, n))] * Rational(l1 * l2 * l3);
    }
  return s;
}

ExceptionalSums exceptional_sums(long a, long n) {
  const auto un = static_cast<unsigned long>(n);
  const long top = a * n - 1;
  const auto nn = static_cast<std::size_t>(n);
  // Per-l1 integer buckets indexed by the residue of the zeta exponent;
  // summed afterwards in l1 order so the result does not depend on threads.
  std::vector<std::vector<Integer>> tri(static_cast<std::size_t>(top + 1),
                                        std::vector<Integer>(nn));
  std::vector<std::vector<Integer>> par = tri;
#pragma omp parallel for schedule(dynamic)
  for (long l1 = 1; l1 <= top; ++l1) {
    auto& bt = tri[static_cast<std::size_t>(l1)];
    auto& bp = par[static_cast<std::size_t>(l1)];
    for (long l2 = 1; l2 <= top; ++l2) {
      if (mod(l1 - l2, n) != 0) {
        bp[static_cast<std::size_t>(mod(l2 - l1, n))] += Integer(l1) * l1 * l2;
        continue;
      }
      for (long l3 = 1; l3 <= top; ++l3)
        if (mod(l1 - l3, n) != 0)
          bt[static_cast<std::size_t>(mod(l3 - l1, n))] += Integer(l1) * l2 * l3;
    }
  }
  std::vector<Integer> bt(nn), bp(nn);
  for (long l1 = 1; l1 <= top; ++l1)
    for (std::size_t r = 0; r < nn; ++r) {
      bt[r] += tri[static_cast<std::size_t>(l1)][r];
      bp[r] += par[static_cast<std::size_t>(l1)][r];
    }
  const auto w = weights(n);
  ExceptionalSums s{CyclotomicNumber(un), CyclotomicNumber(un)};
  for (std::size_t r = 1; r < nn; ++r) {
    s.triple += w[r] * Rational(bt[r]);
    s.pair += w[r] * Rational(bp[r]);
  }
  return s;
}

ExceptionalSums exceptional_closed_forms(long a, long n) {
  const auto un = static_cast<unsigned long>(n);
  const CyclotomicNumber twoS = s_at_zeta(un) * Rational(2);
  const Integer A(a), N(n), an(a * n);
  const Rational t_rest = frac(A * A * A * N * (N - 1) *
                            (3 * an * (an - 1) * (an - 2) + N * N * (an - 2 * A - 1) - 2),
                        48);
  const Rational p_rest = frac(A * A * N * (N - 1) * (an * (an - 1) * (2 * an - 3) - an * N - 1), 24);
  ExceptionalSums s{twoS * Rational(-A * A * A) - CyclotomicNumber(un, t_rest),
                    twoS * Rational(-A * A) - CyclotomicNumber(un, p_rest)};
  return s;
}

CongruenceReport verify_proof_identities(ProofIdentity kind, const ProofIdentityParams& p) {
  if (p.n < 1) throw InvalidArgument("proof identities: need n >= 1");
  if (kind != ProofIdentity::Summations && p.a < 1)
    throw InvalidArgument("proof identities: need a >= 1");
  CongruenceReport report;
  {
    ReportTimer timer(report);
    switch (kind) {
      case ProofIdentity::RootFilter:
        report = pass("root_filter");
        for (const Rational& q : p.q_samples) {
          if (q == 1 || q == -1 || q == 0)
            throw InvalidArgument("q sample must not be 0 or a root of unity");
          report = root_filter(p.a, p.n, q);
          if (!report.holds) break;
        }
        report.set("a", p.a).set("n", p.n).set("k", 0);
        break;
      case ProofIdentity::Summations:
        report = pass("summations");
        for (const Rational& x : p.x_samples) {
          report = summations(p.n, x, p.k, p.l);
          if (!report.holds) break;
        }
        report.set("n", p.n).set("k", p.k.value_or(0));
        if (p.l) report.set("l", *p.l);
        break;
      case ProofIdentity::Exceptional: {
        const ExceptionalSums brute = exceptional_sums(p.a, p.n);
        const ExceptionalSums closed = exceptional_closed_forms(p.a, p.n);
        report = pass("exceptional");
        if (!(brute.triple == closed.triple))
          report = mismatch("exceptional", brute.triple - closed.triple,
                            "triple sum: brute force " + to_string(brute.triple) +
                                ", closed form " + to_string(closed.triple));
        else if (!(brute.pair == closed.pair))
          report = mismatch("exceptional", brute.pair - closed.pair,
                            "pair sum: brute force " + to_string(brute.pair) +
                                ", closed form " + to_string(closed.pair));
        report.set("a", p.a).set("n", p.n).set("k", 0);
        break;
      }
      case ProofIdentity::CongAsymp: {
        if (p.b < 0 || p.b > p.a) throw InvalidArgument("cong_asymp: need 0 <= b <= a");
        const EpsSeries s = lemma1_series(p.a, p.b, p.n, 2);
        const auto un = static_cast<unsigned long>(p.n);
        report = compare_series("cong_asymp", s, {CyclotomicNumber(un), CyclotomicNumber(un)});
        report.set("a", p.a).set("b", p.b).set("n", p.n).set("k", 2);
        break;
      }
    }
  }
  return report;
}

}  // namespace qcong

#include "qcong/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qcong/error.hpp"

namespace qcong {

namespace {

struct CycloCache {
  std::mutex mu;
  std::map<unsigned long, std::unique_ptr<const Poly>> table;
};

CycloCache& cache() {
  static CycloCache c;
  return c;
}

// q^n - 1 divided by Phi_d for every proper divisor d.
Poly compute_cyclotomic(unsigned long n) {
  Poly p = Poly::monomial(1, n) - Poly::constant(1);
  for (unsigned long d : divisors(n))
    if (d != n) p = exact_div(p, cyclotomic(d));
  return p;
}

void require_coprime(const Poly& den, const CycloModulus& m, const char* which) {
  if (den.is_constant()) return;
  const Poly g = gcd(m.phi(), divrem(den, m.phi()).rem);
  if (!g.is_constant())
    throw DenominatorNotCoprime(std::string("denominator of ") + which +
                                " shares a factor with Phi_" + std::to_string(m.n()));
}

}  // namespace

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const Poly& cyclotomic(unsigned long n) {
  if (n == 0) throw InvalidArgument("cyclotomic: n must be >= 1");
  CycloCache& c = cache();
  {
    std::lock_guard lock(c.mu);
    auto it = c.table.find(n);
    if (it != c.table.end()) return *it->second;
  }
  // Computed outside the lock (the recursion re-enters); first insert wins.
  auto fresh = std::make_unique<const Poly>(compute_cyclotomic(n));
  std::lock_guard lock(c.mu);
  auto [it, inserted] = c.table.try_emplace(n, std::move(fresh));
  return *it->second;
}

CycloModulus::CycloModulus(unsigned long n, unsigned long k)
    : n_(n), k_(k), phi_(&cyclotomic(n)) {
  if (k == 0) throw InvalidArgument("CycloModulus: k must be >= 1");
  phi_pow_ = pow(*phi_, k);
}

Poly reduce_mod(const Poly& p, const CycloModulus& m) {
  return divrem(p, m.phi_pow()).rem;
}

CongruenceReport congruent(const RationalFunction& a, const RationalFunction& b,
                           const CycloModulus& m) {
  CongruenceReport report;
  ReportTimer timer(report);
  report.family = "congruent";
  report.set("n", static_cast<std::int64_t>(m.n()));
  report.set("k", static_cast<std::int64_t>(m.k()));
  require_coprime(a.den(), m, "A");
  require_coprime(b.den(), m, "B");
  const RationalFunction diff = a - b;
  report.remainder = reduce_mod(diff.num(), m);
  report.finalize();
  return report;
}

}  // namespace qcong

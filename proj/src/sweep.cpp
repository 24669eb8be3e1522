#include "qcong/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "qcong/error.hpp"
#include "qcong/factratio.hpp"
#include "qcong/numeric.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/qcong.hpp"
#include "qcong/rootexpand.hpp"

namespace qcong {

const std::vector<FamilyInfo>& family_catalogue() {
  static const std::vector<FamilyInfo> catalogue = {
      {"qlucas", FamilyKind::AB, "[an,bn] == binom(a,b) mod Phi_n", {}, 2},
      {"straub2", FamilyKind::AB, "[an,bn] vs [a,b]_{q^{n^2}} mod Phi_n^3", {}, 2},
      {"monomial3", FamilyKind::AB, "two-monomial congruence mod Phi_n^2", {}, 2},
      {"andrews4", FamilyKind::AB, "[an,bn] vs weighted [a,b]_{q^n} mod Phi_n^2", {}, 2},
      {"pan5", FamilyKind::AB, "[an,bn] vs weighted [a,b]_{q^n} mod Phi_n^3", {}, 2},
      {"theorem1", FamilyKind::AB, "base q^{n^2} with harmonic correction mod Phi_n^4", {}, 2},
      {"theorem2", FamilyKind::AB, "base q^n with harmonic correction mod Phi_n^4", {}, 2},
      {"harmonic", FamilyKind::NK, "H_{n-1} expansion mod Phi_n^k, k = 2, 3", {2, 3}, 2},
      {"classical", FamilyKind::Prime, "binom(ap,bp) - binom(a,b) mod p^k, k = 3, 4", {3, 4}, 5},
      {"lemma1", FamilyKind::AB, "expansion at zeta(1 - eps), base q^n", {}, 1},
      {"lemma3", FamilyKind::AB, "expansion at zeta(1 - eps), base q^{n^2}", {}, 1},
      {"lemma2", FamilyKind::N, "H_{n-1} at zeta(1 - eps) and the eps inversion", {}, 2},
      {"qbinthm", FamilyKind::N, "q-binomial theorem for (x; q)_n", {}, 1},
      {"cong-asymp", FamilyKind::AB, "monomial-weighted difference is O(eps^2)", {}, 1},
      {"root-filter", FamilyKind::AN, "root-of-unity filter of (x; q)_{an}", {}, 1},
      {"summations", FamilyKind::N, "six averaging formulae over x -> zeta^j x", {}, 2},
      {"exceptional", FamilyKind::AN, "exceptional triple and pair sums", {}, 2},
      {"theorem3", FamilyKind::Spec, "factorial ratios mod Phi_n^3", {}, 2},
      {"classical-ratio", FamilyKind::SpecPrime, "D_p(1) == D_1(1) mod p^3", {}, 5},
      {"theorem3-phi4", FamilyKind::Spec, "candidate factorial-ratio analogues mod Phi_n^4 (exploratory)",
       {}, 2, true},
  };
  return catalogue;
}

const FamilyInfo* find_family(std::string_view id) {
  for (const auto& f : family_catalogue())
    if (f.id == id) return &f;
  return nullptr;
}

namespace {

CongruenceReport dispatch(const CaseSpec& c, const FamilyInfo& f) {
  const std::string& id = f.id;
  if (id == "qlucas") return check_q_lucas(c.a, c.b, c.n);
  if (id == "straub2") return verify_known_congruence(KnownCongruence::Straub2, c.a, c.b, c.n);
  if (id == "monomial3")
    return verify_known_congruence(KnownCongruence::Monomial3, c.a, c.b, c.n);
  if (id == "andrews4") return verify_known_congruence(KnownCongruence::Andrews4, c.a, c.b, c.n);
  if (id == "pan5") return verify_known_congruence(KnownCongruence::Pan5, c.a, c.b, c.n);
  if (id == "theorem1") return verify_theorem1(c.a, c.b, c.n);
  if (id == "theorem2") return verify_theorem2(c.a, c.b, c.n);
  if (id == "harmonic") return verify_harmonic_congruence(c.n, static_cast<int>(c.k.value_or(3)));
  if (id == "classical")
    return verify_classical_integer(c.a, c.b, c.n, static_cast<int>(c.k.value_or(3)));
  if (id == "lemma1") return verify_lemma1(c.a, c.b, c.n);
  if (id == "lemma3") return verify_lemma3(c.a, c.b, c.n);
  if (id == "lemma2") return verify_lemma2_eq3(c.n);
  if (id == "qbinthm") {
    if (c.n < 0) throw InvalidArgument("qbinthm: need n >= 0");
    return check_q_binomial_theorem(static_cast<unsigned long>(c.n));
  }
  ProofIdentityParams p;
  p.a = c.a;
  p.b = c.b;
  p.n = c.n;
  if (id == "cong-asymp") return verify_proof_identities(ProofIdentity::CongAsymp, p);
  if (id == "root-filter") return verify_proof_identities(ProofIdentity::RootFilter, p);
  if (id == "exceptional") return verify_proof_identities(ProofIdentity::Exceptional, p);
  if (id == "summations") {
    p.k = c.k;
    return verify_proof_identities(ProofIdentity::Summations, p);
  }
  if (id == "theorem3" || id == "theorem3-phi4") {
    Theorem3Variant v;
    if (c.variant.empty() || c.variant == "straub_g") v = Theorem3Variant::StraubG;
    else if (c.variant == "pan_g") v = Theorem3Variant::PanG;
    else throw InvalidArgument("unknown " + id + " variant '" + c.variant + "'");
    const auto spec = FactorialRatioSpec::parse(c.spec);
    return id == "theorem3" ? verify_theorem3(spec, c.n, v) : explore_theorem3_phi4(spec, c.n, v);
  }
  if (id == "classical-ratio") return verify_classical_ratio(FactorialRatioSpec::parse(c.spec), c.n);
  throw InvalidArgument("unknown family '" + id + "'");
}

bool is_ab(FamilyKind k) { return k == FamilyKind::AB || k == FamilyKind::Prime; }

}  // namespace

CongruenceReport run_case(const CaseSpec& c) {
  const FamilyInfo* f = find_family(c.family);
  if (!f) throw InvalidArgument("unknown family '" + c.family + "'");
  CongruenceReport r;
  try {
    r = dispatch(c, *f);
  } catch (const Error& e) {
    r = CongruenceReport{};
    r.error = e.what();
    if (f->kind == FamilyKind::AB || f->kind == FamilyKind::AN || f->kind == FamilyKind::Prime)
      r.set("a", c.a);
    if (is_ab(f->kind)) r.set("b", c.b);
    r.set("n", c.n);
    if (c.k) r.set("k", *c.k);
    r.spec = c.spec;
    r.finalize();
  }
  r.family = c.family;
  return r;
}

std::vector<CaseSpec> enumerate_cases(const SweepConfig& cfg) {
  if (cfg.a_max < 2) throw InvalidArgument("sweep: a_max must be >= 2");
  if (cfg.n_max < 2) throw InvalidArgument("sweep: n_max must be >= 2");
  std::vector<std::string> families = cfg.families;
  if (families.size() == 1 && families[0] == "all") {
    families.clear();
    for (const auto& f : family_catalogue())
      if (!f.exploratory) families.push_back(f.id);
  }
  std::vector<FactorialRatioSpec> specs;
  for (const auto& s : cfg.specs) specs.push_back(FactorialRatioSpec::parse(s));

  std::vector<CaseSpec> cases;
  for (const auto& id : families) {
    const FamilyInfo* f = find_family(id);
    if (!f) throw InvalidArgument("unknown family '" + id + "'");
    const bool spec_family = f->kind == FamilyKind::Spec || f->kind == FamilyKind::SpecPrime;
    if (spec_family && specs.empty() && !(cfg.families.size() == 1 && cfg.families[0] == "all"))
      throw InvalidArgument("family '" + id + "' needs at least one --spec");
    for (long n = f->n_min; n <= cfg.n_max; ++n) {
      const bool prime_family = f->kind == FamilyKind::Prime || f->kind == FamilyKind::SpecPrime;
      if (prime_family && !is_prime(static_cast<unsigned long>(n))) continue;
      switch (f->kind) {
        case FamilyKind::AB:
        case FamilyKind::Prime:
          for (long a = 1; a <= cfg.a_max; ++a)
            for (long b = 1; b <= a; ++b) {
              if (f->kind == FamilyKind::AB) {
                cases.push_back({id, a, b, n, std::nullopt, "", ""});
                continue;
              }
              for (long k : f->levels) cases.push_back({id, a, b, n, k, "", ""});
            }
          break;
        case FamilyKind::AN:
          for (long a = 1; a <= cfg.a_max; ++a) cases.push_back({id, a, 0, n, std::nullopt, "", ""});
          break;
        case FamilyKind::N:
          cases.push_back({id, 0, 0, n, std::nullopt, "", ""});
          break;
        case FamilyKind::NK:
          for (long k : f->levels) cases.push_back({id, 0, 0, n, k, "", ""});
          break;
        case FamilyKind::Spec:
          for (const auto& s : specs)
            for (const char* v : {"straub_g", "pan_g"})
              cases.push_back({id, 0, 0, n, std::nullopt, to_string(s), v});
          break;
        case FamilyKind::SpecPrime:
          for (const auto& s : specs)
            if (s.landau_integral()) cases.push_back({id, 0, 0, n, std::nullopt, to_string(s), ""});
          break;
      }
    }
  }
  return cases;
}

std::vector<CongruenceReport> run_cases(const std::vector<CaseSpec>& cases, int jobs) {
  std::vector<CongruenceReport> out(cases.size());
  const auto count = static_cast<long>(cases.size());
  const int threads = std::max(1, jobs);
  // Unknown families were rejected by enumerate_cases; anything else that
  // escapes a worker is rethrown after the loop.
  std::exception_ptr failure;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_case(cases[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(qcong_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

nlohmann::ordered_json remainder_terms(const Poly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p.coeff(i);
    if (c != 0) terms.push_back({i, to_string(c)});
  }
  return terms;
}

nlohmann::ordered_json to_json(const CaseSpec& c, const CongruenceReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["family"] = c.family;
  if (!c.variant.empty()) j["variant"] = c.variant;
  if (!r.spec.empty()) j["spec"] = r.spec;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["holds"] = r.holds;
  if (!r.remainder.is_zero()) j["remainder_terms"] = remainder_terms(r.remainder);
  if (!r.error.empty()) j["error"] = r.error;
  if (timings)
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

nlohmann::ordered_json to_json(const std::vector<CaseSpec>& cases,
                               const std::vector<CongruenceReport>& reports, bool timings) {
  nlohmann::ordered_json doc;
  doc["version"] = kReportVersion;
  doc["cases"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cases.size(); ++i)
    doc["cases"].push_back(to_json(cases[i], reports[i], timings));
  return doc;
}

std::string to_csv(const std::vector<CaseSpec>& cases,
                   const std::vector<CongruenceReport>& reports, bool timings) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  };
  auto param = [](const CongruenceReport& r, const char* name) {
    const auto v = r.param(name);
    return v ? std::to_string(*v) : std::string();
  };
  std::ostringstream os;
  os << "family,variant,spec,a,b,n,k,holds,remainder,error";
  if (timings) os << ",elapsed_ms";
  os << '\n';
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& r = reports[i];
    os << quote(cases[i].family) << ',' << quote(cases[i].variant) << ',' << quote(r.spec) << ','
       << param(r, "a") << ',' << param(r, "b") << ',' << param(r, "n") << ','
       << param(r, "k") << ',' << (r.holds ? "true" : "false") << ','
       << quote(r.remainder.is_zero() ? std::string() : to_string(r.remainder)) << ','
       << quote(r.error);
    if (timings) os << ',' << std::chrono::duration<double, std::milli>(r.elapsed).count();
    os << '\n';
  }
  return os.str();
}

}  // namespace qcong

#include "qcong/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qcong/cyclo.hpp"
#include "qcong/error.hpp"
#include "qcong/factratio.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/rootexpand.hpp"
#include "qcong/sweep.hpp"

namespace qcong {

namespace {

int default_jobs() {
  if (const char* env = std::getenv("QCONG_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 1;
}

void print_report(std::ostream& out, const CaseSpec& c, const CongruenceReport& r) {
  out << c.family;
  if (!c.variant.empty()) out << " (" << c.variant << ")";
  if (!r.spec.empty()) out << " spec " << r.spec;
  for (const auto& [name, value] : r.params) out << ' ' << name << '=' << value;
  out << ": ";
  if (!r.error.empty()) {
    out << "error: " << r.error << '\n';
    return;
  }
  out << (r.holds ? "holds" : "FAILS") << '\n';
  if (!r.remainder.is_zero()) out << "  remainder: " << to_string(r.remainder) << '\n';
  if (!r.detail.empty()) out << "  " << r.detail << '\n';
}

struct VerifyArgs {
  std::string family;
  long a = 0, b = 0, n = 0;
  std::optional<long> k;
  std::string spec;
  std::string variant;
  bool json = false;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  if (!find_family(v.family)) {
    err << "unknown family '" << v.family << "'\n";
    return 2;
  }
  const CaseSpec c{v.family, v.a, v.b, v.n, v.k, v.spec, v.variant};
  const CongruenceReport r = run_case(c);
  if (v.json)
    out << to_json(c, r, v.timings).dump(2) << '\n';
  else
    print_report(out, c, r);
  if (!r.error.empty()) return 2;
  return r.holds ? 0 : 1;
}

struct SweepArgs {
  std::string families;
  long a_max = 6;
  long n_max = 10;
  std::vector<std::string> specs;
  int jobs = 1;
  std::string out_path;
  std::string format = "json";
  bool timings = false;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int cmd_sweep(const SweepArgs& s, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.families = split_commas(s.families);
  cfg.a_max = s.a_max;
  cfg.n_max = s.n_max;
  cfg.specs = s.specs;
  cfg.jobs = s.jobs;
  std::vector<CaseSpec> cases;
  try {
    cases = enumerate_cases(cfg);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  std::ofstream file;
  if (!s.out_path.empty()) {
    file.open(s.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write '" << s.out_path << "'\n";
      return 2;
    }
  }
  const auto reports = run_cases(cases, cfg.jobs);
  std::ostream& sink = s.out_path.empty() ? out : file;
  if (s.format == "csv")
    sink << to_csv(cases, reports, s.timings);
  else
    sink << to_json(cases, reports, s.timings).dump(2) << '\n';
  sink.flush();
  if (!sink) {
    err << "failed writing report\n";
    return 2;
  }
  std::size_t failed = 0, errors = 0;
  for (const auto& r : reports) {
    if (!r.error.empty()) ++errors;
    else if (!r.holds) ++failed;
  }
  if (!s.out_path.empty())
    out << cases.size() << " cases, " << failed << " failing, " << errors << " errors\n";
  return (failed == 0 && errors == 0) ? 0 : 1;
}

int cmd_expand(long a, long b, long n, unsigned order, std::ostream& out) {
  if (n < 1 || a < 0 || b < 0 || b > a || order < 1)
    throw InvalidArgument("expand: need n >= 1, 0 <= b <= a, order >= 1");
  const auto un = static_cast<unsigned long>(n);
  const EpsSeries s = lemma1_series(a, b, n, order);
  const auto predicted = lemma1_prediction(a, b, n);
  const LemmaConstants lc = lemma_constants(a, b, n);
  out << "a=" << a << " b=" << b << " n=" << n << " at q = z(1 - eps), z^" << n << " = 1\n";
  for (unsigned i = 0; i < s.order(); ++i) {
    out << "eps^" << i << ": " << to_string(s[i]);
    if (i < predicted.size()) out << "    predicted: " << to_string(predicted[i]);
    out << '\n';
  }
  out << "rho0 = " << to_string(lc.rho0) << ", rho1 = " << to_string(lc.rho1)
      << ", S(z) = " << to_string(s_at_zeta(un)) << '\n';
  return 0;
}

std::string describe(const FactorialRatioSpec& spec) {
  const SpecValidation v = validate_spec(spec);
  std::string s = v.balanced ? "balanced" : "NOT balanced";
  if (v.integral) return s + ", integral";
  s += ", NOT integral";
  if (v.witness) s += " (witness x=" + to_string(*v.witness) + ")";
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of q-binomial congruences modulo powers of cyclotomic polynomials",
               "qcong"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kReportVersion));

  VerifyArgs va;
  long va_k = 0;
  auto* verify = app.add_subcommand("verify", "Run one verifier");
  verify->add_option("--family", va.family, "Family id (see 'info families')")->required();
  verify->add_option("--a", va.a, "a");
  verify->add_option("--b", va.b, "b");
  verify->add_option("--n", va.n, "n (the prime p for classical families)");
  auto* k_opt = verify->add_option("--k", va_k, "Level or residue class");
  verify->add_option("--spec", va.spec, "Factorial-ratio spec 'a1,a2/b1,b2'");
  verify->add_option("--variant", va.variant, "straub_g or pan_g")
      ->check(CLI::IsMember({"straub_g", "pan_g"}));
  verify->add_flag("--json", va.json, "Print the report as JSON");
  verify->add_flag("--timings", va.timings, "Include elapsed time");

  SweepArgs sa;
  sa.jobs = default_jobs();
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--families", sa.families, "Comma-separated ids or 'all'")->required();
  sweep->add_option("--a-max", sa.a_max, "Largest a");
  sweep->add_option("--n-max", sa.n_max, "Largest n");
  sweep->add_option("--spec", sa.specs, "Factorial-ratio spec (repeatable)");
  sweep->add_option("--jobs", sa.jobs, "Worker threads (default $QCONG_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sa.out_path, "Output file (default stdout)");
  sweep->add_option("--format", sa.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_flag("--timings", sa.timings, "Include elapsed times");

  long ea = 0, eb = 0, en = 0;
  unsigned eorder = 4;
  auto* expand = app.add_subcommand("expand", "Expansion at q = zeta(1 - eps)");
  expand->add_option("--a", ea, "a")->required();
  expand->add_option("--b", eb, "b")->required();
  expand->add_option("--n", en, "n")->required();
  expand->add_option("--order", eorder, "Number of coefficients");

  auto* info = app.add_subcommand("info", "Print exact objects");
  info->require_subcommand(1);
  unsigned long cn = 0;
  auto* cyclo = info->add_subcommand("cyclo", "Print Phi_n");
  cyclo->add_option("--n", cn, "n")->required()->check(CLI::PositiveNumber);
  long qa = 0, qb = 0;
  auto* qbin = info->add_subcommand("qbin", "Print the Gaussian binomial [a, b]");
  qbin->add_option("--a", qa, "a")->required();
  qbin->add_option("--b", qb, "b")->required();
  std::string check;
  auto* spec = info->add_subcommand("spec", "Validate a factorial-ratio spec");
  spec->add_option("--check", check, "Spec 'a1,a2/b1,b2'")->required();
  auto* families = info->add_subcommand("families", "List verifier families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (k_opt->count() > 0) va.k = va_k;
      return cmd_verify(va, out, err);
    }
    if (sweep->parsed()) return cmd_sweep(sa, out, err);
    if (expand->parsed()) return cmd_expand(ea, eb, en, eorder, out);
    if (cyclo->parsed()) {
      out << to_string(cyclotomic(cn)) << '\n';
      return 0;
    }
    if (qbin->parsed()) {
      if (qa < 0 || qb < 0 || qb > qa) throw InvalidArgument("qbin: need 0 <= b <= a");
      out << to_string(q_binomial(qa, qb)) << '\n';
      return 0;
    }
    if (spec->parsed()) {
      out << describe(FactorialRatioSpec::parse(check)) << '\n';
      return 0;
    }
    if (families->parsed()) {
      for (const auto& f : family_catalogue()) out << f.id << "  " << f.summary << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qcong

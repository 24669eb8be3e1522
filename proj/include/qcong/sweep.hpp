#pragma once

// Family catalogue, case enumeration and the deterministic parallel runner
// shared by the command line front end.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qcong/report.hpp"

namespace qcong {

/// Which parameters a family consumes.
enum class FamilyKind {
  AB,         // a, b, n
  AN,         // a, n
  N,          // n only
  NK,         // n and a level k
  Prime,      // a, b, prime p (in n), level k
  Spec,       // factorial-ratio spec, n, variant
  SpecPrime,  // factorial-ratio spec, prime p (in n)
};

struct FamilyInfo {
  std::string id;
  FamilyKind kind;
  std::string summary;
  /// Levels swept for NK / Prime families.
  std::vector<long> levels;
  /// Smallest n a sweep starts from.
  long n_min = 2;
  /// Reports outcomes of unproven candidates; skipped by "all".
  bool exploratory = false;
};

const std::vector<FamilyInfo>& family_catalogue();
/// nullptr when unknown.
const FamilyInfo* find_family(std::string_view id);

struct CaseSpec {
  std::string family;
  long a = 0;
  long b = 0;
  long n = 0;
  std::optional<long> k;
  /// Factorial-ratio spec string for Spec families.
  std::string spec;
  /// "straub_g" or "pan_g" for theorem3.
  std::string variant;
};

/// Runs one case. Precondition violations (qcong::Error) land in
/// report.error; unknown families throw InvalidArgument.
CongruenceReport run_case(const CaseSpec& c);

struct SweepConfig {
  std::vector<std::string> families;
  long a_max = 6;
  long n_max = 10;
  std::vector<std::string> specs;
  int jobs = 1;
};

/// Throws InvalidArgument on a_max < 2, n_max < 2, unknown families, or
/// Spec families without specs. Order: family (as listed), n, a, b.
std::vector<CaseSpec> enumerate_cases(const SweepConfig& cfg);

/// Same order as the input whatever the job count.
std::vector<CongruenceReport> run_cases(const std::vector<CaseSpec>& cases, int jobs);

/// Descending [exponent, "p/q"] pairs of the nonzero coefficients.
nlohmann::ordered_json remainder_terms(const Poly& p);
nlohmann::ordered_json to_json(const CaseSpec& c, const CongruenceReport& r, bool timings);
nlohmann::ordered_json to_json(const std::vector<CaseSpec>& cases,
                               const std::vector<CongruenceReport>& reports, bool timings);
std::string to_csv(const std::vector<CaseSpec>& cases,
                   const std::vector<CongruenceReport>& reports, bool timings);

inline constexpr std::string_view kReportVersion = "1";

}  // namespace qcong

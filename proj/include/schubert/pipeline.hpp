#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schubert/charclass.hpp"
#include "schubert/chow.hpp"
#include "schubert/rational.hpp"

// Replay of the classification of rank-two Fano bundles on G(1,4): candidate
// Chern data (e,a,b) are scanned, filtered by numerical necessary conditions,
// and the survivors are settled by rules whose cohomological content comes
// from cited vanishing and classification theorems.
namespace schubert::pipeline {

/// E restricted to a line is O(p) + O(q), p <= q.
struct SplittingType {
  int p = 0;
  int q = 0;

  std::string to_string() const;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

/// Splitting types allowed on a line by ampleness of -K on P(E) over G(1,n):
/// p + q = e, p <= q, 2p + (n+1-e) > 0. Ordered by p ascending.
std::vector<SplittingType> fano_splitting_types(int e, int n);

/// Normalized pairs (p+q in {0,-1}) with O(p)+O(q) Fano on G(1,n), i.e.
/// |p-q| < n+1. Ordered by p+q descending, then p descending.
std::vector<SplittingType> split_fano_bundles(int n);

/// A theorem input whose cohomological content is trusted, not recomputed.
struct CitedRule {
  std::string name;
  std::string statement;
};

namespace rules {
extern const CitedRule kPositivity;
extern const CitedRule kSchurPositivity;
extern const CitedRule kSchwarzenberger;
extern const CitedRule kGriffithsVanishing;
extern const CitedRule kLePotier;
extern const CitedRule kSectionSplitting;
extern const CitedRule kSectionBound;
extern const CitedRule kUniformSplitting;
extern const CitedRule kRestrictionDetermined;
}  // namespace rules

inline constexpr const char* kCitedNotVerified = "cited, not verified";

struct Witness {
  std::string name;
  Rational value;
};

struct Verdict {
  std::string rule;
  bool passed = false;
  std::vector<Witness> witnesses;
  std::string citation;
  std::string note;
};

/// e in {0,-1}; m = (5-e)/2 is the twist making E(m) ample.
struct FilterContext {
  int e = 0;
  Rational m;
  int n = 4;

  /// Throws std::invalid_argument unless e is 0 or -1.
  static FilterContext for_e(int e);
};

/// Strict positivity of c2(E(m)) on P^3 and P^2: a + me + m^2 > 0, b + me + m^2 > 0.
Verdict positivity_filter(const FilterContext& ctx, int a, int b);

/// a <= 6 and b <= 12 - a (e = 0) or b <= 13 - a (e = -1). Witnesses are the
/// ring pairings of s_3(E(m)) with Omega(0,4) and Omega(1,3).
Verdict schur_filter(const FilterContext& ctx, int a, int b);

/// chi(E(k)) integral for every integer k. Witnesses chi(E(k)), k = 0..6.
Verdict schwarzenberger_filter(const FilterContext& ctx, int a, int b);

/// For e = -1: fails iff chi(E(5)) < 0, since Griffiths vanishing makes
/// chi(E(5)) = h^0(E(5)). Vacuous for e = 0.
Verdict griffiths_filter(const FilterContext& ctx, int a, int b);

enum class Status { surviving, eliminated, classified };
std::string to_string(Status s);

struct CandidateRecord {
  RankTwoData data;  // normalized
  std::vector<Verdict> verdicts;
  Status status = Status::surviving;
  std::string eliminated_by;  // rule name when eliminated
  std::string description;    // when classified

  bool passed(const std::string& rule) const;
};

/// Twist to e in {0,-1}. Returns the normalized data and the twist applied.
std::pair<RankTwoData, int> normalize(const RankTwoData& d);

/// Runs the four filters in order, stopping at the first failure.
/// Non-normalized input is twisted to normalized form first.
CandidateRecord evaluate_candidate(const RankTwoData& d);

struct ScanRange {
  int lo = -6;
  int hi = 20;
};

enum class Execution { sequential, parallel };

/// Every (e,a,b) with e in {0,-1}, (a,b) in the scan square, evaluated and
/// returned in canonical order: e = 0 before e = -1, then a, then b ascending.
std::vector<CandidateRecord> enumerate_candidates(Execution exec = Execution::sequential,
                                                  ScanRange range = {});

/// Records that passed the integrality filter (reached the Griffiths rule).
std::vector<CandidateRecord> step1_table(const std::vector<CandidateRecord>& records);
std::vector<CandidateRecord> step1_survivors(const std::vector<CandidateRecord>& records);

/// True when every point just outside the scan square fails positivity or the
/// Schur bounds, and no Step 1 survivor lies on the square's boundary.
bool scan_is_exhaustive(const std::vector<CandidateRecord>& records, ScanRange range = {});

struct SectionConstraints {
  int va = 0;
  int vb = 0;
  bool split_iff_both_zero = false;
};

/// a + j(e+j), b + j(e+j) for a section of E(j); both zero iff E = O(-j) + O(e+j).
SectionConstraints section_constraints(int e, int a, int b, int j);

/// (p,q) iff a == b and x^2 - e x + a has integer roots p <= q.
std::optional<SplittingType> split_detect(int e, int a, int b);

/// (c1, c2) of E restricted to a P^3 of class Omega(0,4), i.e. (e, a).
/// Also recomputes both by intersecting in G(1,4) and throws
/// std::logic_error on disagreement.
std::pair<int, int> restriction_to_p3(int e, int a);

/// Thrown when a computed witness disagrees with the built-in expected tables.
class ReplayMismatch : public std::runtime_error {
 public:
  ReplayMismatch(std::string step, const std::string& detail)
      : std::runtime_error(step + ": " + detail), step_(std::move(step)) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

struct PreflightCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<PreflightCheck> run_preflight();

struct Step2Result {
  RankTwoData data;
  SectionConstraints constraints;
  Rational chi_twist_minus2;
  std::optional<SplittingType> split;
  std::vector<std::string> citations;
};

struct Step3Row {
  RankTwoData data;
  Rational chi_p3_minus1;
  Status outcome = Status::surviving;
  std::string rule;
  std::string detail;
  std::optional<SplittingType> split;
};

struct Step4Row {
  RankTwoData data;
  Rational chi_p3;
  SplittingType uniform_type;
  std::optional<SplittingType> split;
  std::string description;
};

struct FinalEntry {
  RankTwoData data;
  std::optional<SplittingType> split;
  std::string description;
};

/// e = -1 candidates where the stated bound b <= 13 - a and strict positivity
/// of the Omega(1,3) pairing disagree.
struct SchurDiscrepancy {
  RankTwoData data;
  Rational pairing;
  bool survived_step1 = false;
};

struct ClassificationReport {
  std::vector<PreflightCheck> preflight;
  std::vector<CandidateRecord> step1_table;  // ten rows, Griffiths verdict included
  bool scan_exhaustive = false;
  std::vector<SchurDiscrepancy> schur_discrepancies;
  Step2Result step2;
  std::vector<Step3Row> step3_table;
  std::vector<Step4Row> step4_results;
  std::vector<FinalEntry> final_list;
  std::vector<CitedRule> cited_rules;
};

namespace expected {
/// Survivors of the integrality filter, before the Griffiths rule.
std::vector<RankTwoData> step1_table();
/// The candidate removed by the Griffiths rule and its chi(E(5)).
RankTwoData griffiths_eliminated();
Rational griffiths_witness();
/// chi(E|P3(-1)) for the a != 0 cases.
std::vector<std::pair<RankTwoData, Rational>> step3_table();
/// chi(E|P3) for the a = 0 cases, keyed by e.
std::vector<std::pair<int, Rational>> step4_chi();
RankTwoData non_split();
}  // namespace expected

/// Compares Step 1 output against the expected table; returns a description
/// of the first mismatch, if any.
std::optional<std::string> check_step1(const std::vector<CandidateRecord>& records);

/// Full replay. Throws ReplayMismatch naming the first step whose witnesses
/// disagree with the expected tables.
ClassificationReport replay_proof(Execution exec = Execution::sequential);

}  // namespace schubert::pipeline

#include "schubert/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "schubert/hrr.hpp"

namespace schubert::pipeline {

namespace {

const RingPtr& g14() {
  static const RingPtr ring = GrassmannRing::make(1, 4);
  return ring;
}

std::string rat(const Rational& q) { return schubert::to_string(q); }

int schur_b_bound(int e, int a) { return (e == 0 ? 12 : 13) - a; }

std::string split_name(const SplittingType& s) {
  auto line = [](int d) { return d == 0 ? std::string("O") : "O(" + std::to_string(d) + ")"; };
  if (s.p == s.q) return line(s.p) + "^2";
  return line(s.p) + " + " + line(s.q);
}

}  // namespace

std::string SplittingType::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<SplittingType> fano_splitting_types(int e, int n) {
  std::vector<SplittingType> out;
  // p <= q = e - p forces 2p <= e; the Fano inequality bounds p from below.
  for (int p = -(n + 1 - e) / 2 - 1; 2 * p <= e; ++p)
    if (2 * p + (n + 1 - e) > 0) out.push_back({p, e - p});
  return out;
}

std::vector<SplittingType> split_fano_bundles(int n) {
  std::vector<SplittingType> out;
  for (int e : {0, -1})
    for (int p = e == 0 ? 0 : -1; std::abs(e - 2 * p) < n + 1; --p) out.push_back({p, e - p});
  return out;
}

namespace rules {
const CitedRule kPositivity{
    "positivity",
    "E(m) is ample, so its restrictions to a P^3 of class Omega(0,4) and to a P^2 of class "
    "Omega(1,2) have positive Chern classes (Bloch-Gieseker)"};
const CitedRule kSchurPositivity{
    "schur",
    "Schur polynomials of the ample Q-bundle E(m) are positive on effective cycles; s_3 is "
    "paired with Omega(0,4) and Omega(1,3)"};
const CitedRule kSchwarzenberger{
    "schwarzenberger",
    "chi(E(k)) computed by Hirzebruch-Riemann-Roch must be an integer for every k"};
const CitedRule kGriffithsVanishing{
    "griffiths",
    "Griffiths vanishing: H^i(G(1,4), E(5)) = 0 for i > 0, hence chi(E(5)) = h^0(E(5)) >= 0"};
const CitedRule kLePotier{
    "le-potier",
    "Le Potier vanishing: h^0(E(j)) >= chi(E(j)) for j >= -2, and on a P^3 of class Omega(0,4) "
    "for j >= -1"};
const CitedRule kSectionSplitting{
    "section-splitting",
    "A nonzero section of E(-2) (or of E|P3(-2) on a general P^3) forces uniform splitting "
    "type (-2,2), hence E = O(-2) + O(2)"};
const CitedRule kSectionBound{
    "section-bound",
    "If h^0(E|P3(-1)) != 0 and h^0(E|P3(-2)) = 0 on the general P^3, then a >= e-1, with "
    "equality iff E = O(1) + O(e-1)"};
const CitedRule kUniformSplitting{
    "uniform-classification",
    "Uniform rank-two bundles on G(1,4) of type (0,0) or (0,-1) are O^2, O + O(-1) or the "
    "rank-two universal bundle"};
const CitedRule kRestrictionDetermined{
    "restriction-determined",
    "If E|P3 = O(k) + O(r) then k + r = e and kr = a; splitting on every P^3 makes E uniform"};
}  // namespace rules

FilterContext FilterContext::for_e(int e) {
  if (e != 0 && e != -1)
    throw std::invalid_argument("filter context needs normalized e in {0,-1}, got " +
                                std::to_string(e));
  return {e, ratio(5 - e, 2), 4};
}

Verdict positivity_filter(const FilterContext& ctx, int a, int b) {
  const Rational shift = ctx.m * ctx.e + ctx.m * ctx.m;
  const Rational on_p3 = a + shift;
  const Rational on_p2 = b + shift;
  Verdict v{rules::kPositivity.name, on_p3 > 0 && on_p2 > 0,
            {{"c2(E(m)).P3", on_p3}, {"c2(E(m)).P2", on_p2}},
            rules::kPositivity.statement, ""};
  return v;
}

Verdict schur_filter(const FilterContext& ctx, int a, int b) {
  const RingPtr& g = g14();
  const ChowClass s3 = schur_s3(twist(rank_two_chern(g, {ctx.e, a, b}), ctx.m));
  const Rational on_p3 = integrate(s3 * omega_class(g, 0, 4));
  const Rational on_13 = integrate(s3 * omega_class(g, 1, 3));
  Verdict v{rules::kSchurPositivity.name, a <= 6 && b <= schur_b_bound(ctx.e, a),
            {{"s3(E(m)).Omega(0,4)", on_p3}, {"s3(E(m)).Omega(1,3)", on_13}},
            rules::kSchurPositivity.statement, ""};
  const bool strict = on_p3 > 0 && on_13 > 0;
  if (strict != v.passed)
    v.note = std::string("stated bound ") + (v.passed ? "passes" : "fails") +
             " but strict pairing positivity " + (strict ? "holds" : "fails");
  return v;
}

Verdict schwarzenberger_filter(const FilterContext& ctx, int a, int b) {
  const RingPtr& g = g14();
  const ChernVector v = rank_two_chern(g, {ctx.e, a, b});
  const EulerPolynomial poly = euler_polynomial(g, v);
  Verdict out{rules::kSchwarzenberger.name, is_integer_valued(poly), {},
              rules::kSchwarzenberger.statement, ""};
  for (int k = 0; k <= g->dimension(); ++k)
    out.witnesses.push_back({"chi(E(" + std::to_string(k) + "))", poly(k)});
  return out;
}

Verdict griffiths_filter(const FilterContext& ctx, int a, int b) {
  if (ctx.e != -1)
    return {rules::kGriffithsVanishing.name, true, {}, rules::kGriffithsVanishing.statement,
            "applies to e = -1 only"};
  const RingPtr& g = g14();
  const Rational chi5 = euler_characteristic(g, twist(rank_two_chern(g, {ctx.e, a, b}), 5));
  return {rules::kGriffithsVanishing.name, chi5 >= 0, {{"chi(E(5))", chi5}},
          rules::kGriffithsVanishing.statement, kCitedNotVerified};
}

std::string to_string(Status s) {
  switch (s) {
    case Status::surviving: return "surviving";
    case Status::eliminated: return "eliminated";
    case Status::classified: return "classified";
  }
  return "?";
}

bool CandidateRecord::passed(const std::string& rule) const {
  for (const auto& v : verdicts)
    if (v.rule == rule) return v.passed;
  return false;
}

std::pair<RankTwoData, int> normalize(const RankTwoData& d) {
  // e + 2t in {0,-1}.
  const int t = static_cast<int>(std::floor(-d.e / 2.0));
  return {twist_data(d, t), t};
}

CandidateRecord evaluate_candidate(const RankTwoData& input) {
  const RankTwoData d = normalize(input).first;
  const FilterContext ctx = FilterContext::for_e(d.e);
  CandidateRecord rec{d, {}, Status::surviving, "", ""};
  using Filter = Verdict (*)(const FilterContext&, int, int);
  for (Filter f : {&positivity_filter, &schur_filter, &schwarzenberger_filter, &griffiths_filter}) {
    rec.verdicts.push_back(f(ctx, d.a, d.b));
    if (!rec.verdicts.back().passed) {
      rec.status = Status::eliminated;
      rec.eliminated_by = rec.verdicts.back().rule;
      break;
    }
  }
  return rec;
}

std::vector<CandidateRecord> enumerate_candidates(Execution exec, ScanRange range) {
  std::vector<RankTwoData> grid;
  for (int e : {0, -1})
    for (int a = range.lo; a <= range.hi; ++a)
      for (int b = range.lo; b <= range.hi; ++b) grid.push_back({e, a, b});

  std::vector<CandidateRecord> out(grid.size());
  if (exec == Execution::sequential) {
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = evaluate_candidate(grid[i]);
    return out;
  }
  // Strided partition of the grid; each slot is written by exactly one task.
  const std::size_t workers = std::max(2u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) out[i] = evaluate_candidate(grid[i]);
    }));
  for (auto& t : tasks) t.get();
  return out;
}

std::vector<CandidateRecord> step1_table(const std::vector<CandidateRecord>& records) {
  std::vector<CandidateRecord> out;
  for (const auto& r : records)
    if (r.passed(rules::kSchwarzenberger.name)) out.push_back(r);
  return out;
}

std::vector<CandidateRecord> step1_survivors(const std::vector<CandidateRecord>& records) {
  std::vector<CandidateRecord> out;
  for (const auto& r : records)
    if (r.status == Status::surviving) out.push_back(r);
  return out;
}

bool scan_is_exhaustive(const std::vector<CandidateRecord>& records, ScanRange range) {
  // Positivity gives lower bounds and the Schur bounds upper bounds, both
  // monotone in a and b, so failing on the ring just outside the square
  // rules out everything beyond it.
  for (int e : {0, -1}) {
    const FilterContext ctx = FilterContext::for_e(e);
    auto outside_fails = [&](int a, int b) {
      return !positivity_filter(ctx, a, b).passed || !(a <= 6 && b <= schur_b_bound(e, a));
    };
    for (int x = range.lo - 1; x <= range.hi + 1; ++x) {
      if (!outside_fails(range.lo - 1, x) || !outside_fails(range.hi + 1, x)) return false;
      if (!outside_fails(x, range.lo - 1) || !outside_fails(x, range.hi + 1)) return false;
    }
  }
  for (const auto& r : step1_table(records)) {
    if (r.data.a == range.lo || r.data.a == range.hi || r.data.b == range.lo ||
        r.data.b == range.hi)
      return false;
  }
  return true;
}

SectionConstraints section_constraints(int e, int a, int b, int j) {
  const int shift = j * (e + j);
  return {a + shift, b + shift, a + shift == 0 && b + shift == 0};
}

std::optional<SplittingType> split_detect(int e, int a, int b) {
  if (a != b) return std::nullopt;
  const long disc = static_cast<long>(e) * e - 4L * a;
  if (disc < 0) return std::nullopt;
  const long s = std::lround(std::sqrt(static_cast<double>(disc)));
  for (long r = std::max(0L, s - 1); r <= s + 1; ++r) {
    if (r * r != disc || (e + r) % 2 != 0) continue;
    const int p = static_cast<int>((e - r) / 2);
    const int q = static_cast<int>((e + r) / 2);
    return SplittingType{p, q};
  }
  return std::nullopt;
}

std::pair<int, int> restriction_to_p3(int e, int a) {
  const RingPtr& g = g14();
  // b is invisible on P^3 because Omega(2,3).Omega(0,4) = 0; use b = 0.
  const ChernVector v = rank_two_chern(g, {e, a, 0});
  const ChowClass p3 = omega_class(g, 0, 4);
  const ChowClass h = sigma(g, Partition{1});
  const Rational c1 = integrate(v.c(1) * p3 * h * h);
  const Rational c2 = integrate(v.c(2) * p3 * h);
  if (c1 != e || c2 != a)
    throw std::logic_error("restriction to P^3 gives (" + rat(c1) + "," + rat(c2) +
                           "), expected (" + std::to_string(e) + "," + std::to_string(a) + ")");
  return {e, a};
}

namespace expected {
// Survivors of the positivity, Schur and integrality filters.
std::vector<RankTwoData> step1_table() {
  return {{0, -4, -4}, {0, -4, 12}, {0, -1, -1}, {0, -1, 3},  {0, 0, 0},
          {-1, 6, 6},  {-1, -2, -2}, {-1, -2, 7}, {-1, 0, 1}, {-1, 0, 0}};
}
RankTwoData griffiths_eliminated() { return {-1, 6, 6}; }
Rational griffiths_witness() { return -935; }
std::vector<std::pair<RankTwoData, Rational>> step3_table() {
  return {{{0, -4, 12}, 4}, {{0, -1, -1}, 1}, {{0, -1, 3}, 1}, {{-1, -2, -2}, 1}, {{-1, -2, 7}, 1}};
}
std::vector<std::pair<int, Rational>> step4_chi() { return {{0, 2}, {-1, 1}}; }
RankTwoData non_split() { return {-1, 0, 1}; }
}  // namespace expected

std::optional<std::string> check_step1(const std::vector<CandidateRecord>& records) {
  std::vector<RankTwoData> got;
  for (const auto& r : step1_table(records)) got.push_back(r.data);
  std::vector<RankTwoData> want = expected::step1_table();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    std::string s = "integrality survivors {";
    for (const auto& d : got) s += d.to_string() + " ";
    return s + "} differ from the expected ten candidates";
  }
  std::vector<RankTwoData> removed;
  Rational witness;
  for (const auto& r : step1_table(records)) {
    if (r.status == Status::eliminated) {
      removed.push_back(r.data);
      witness = r.verdicts.back().witnesses.at(0).value;
    }
  }
  if (removed.size() != 1 || removed.front() != expected::griffiths_eliminated())
    return std::string("Griffiths rule must eliminate exactly ") +
           expected::griffiths_eliminated().to_string();
  if (witness != expected::griffiths_witness())
    return "chi(E(5)) = " + rat(witness) + ", expected " + rat(expected::griffiths_witness());
  return std::nullopt;
}

std::vector<PreflightCheck> run_preflight() {
  std::vector<PreflightCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  {
    bool ok = true;
    std::string detail;
    Integer catalan = 1;  // C(n-1) for G(1,n)
    for (int n = 2; n <= 6; ++n) {
      // C(m) = C(m-1) * 2(2m-1)/(m+1), m = n-1.
      const int m = n - 1;
      catalan = catalan * 2 * (2 * m - 1) / (m + 1);
      const Integer deg = degree_of_grassmannian(GrassmannRing::make(1, n));
      detail += "deg G(1," + std::to_string(n) + ")=" + deg.get_str() + " ";
      ok = ok && deg == catalan;
    }
    add("catalan-degree", ok, detail);
  }
  {
    const RingPtr& g = g14();
    bool ok = true;
    for (int d = 0; d <= g->dimension(); ++d)
      for (const auto& lam : g->basis(d))
        for (int d2 = 0; d2 <= g->dimension(); ++d2)
          for (const auto& mu : g->basis(d2)) {
            const Rational want = mu == complement(lam, g->box()) ? 1 : 0;
            ok = ok && integrate(sigma(g, lam) * sigma(g, mu)) == want;
          }
    add("poincare-duality", ok, "all basis pairs of G(1,4)");
  }
  {
    const RingPtr& g = g14();
    bool ok = true;
    for (const RankTwoData& d : std::vector<RankTwoData>{{0, -4, 12}, {-1, 6, 6}, {-1, 0, 1}}) {
      const ChernVector v = rank_two_chern(g, d);
      ok = ok && power_sums_to_chern(chern_to_power_sums(v)) == v;
    }
    add("newton-round-trip", ok, "rank-two data on G(1,4)");
  }
  {
    bool ok = true;
    for (auto [k, n] : {std::pair{0, 3}, std::pair{1, 3}, std::pair{1, 4}}) {
      const RingPtr g = GrassmannRing::make(k, n);
      ok = ok && tautological_bundle(g).total() * quotient_bundle(g).total() == unit(g);
    }
    add("whitney-tautological", ok, "c(S)c(Q) = 1 on G(0,3), G(1,3), G(1,4)");
  }
  {
    const RingPtr& g = g14();
    bool ok = true;
    for (int p = -2; p <= 2; ++p)
      for (int q = p; q <= 2; ++q) {
        const Rational lhs = euler_characteristic(g, direct_sum(line_bundle(g, p), line_bundle(g, q)));
        ok = ok && lhs == euler_characteristic(g, line_bundle(g, p)) +
                              euler_characteristic(g, line_bundle(g, q));
      }
    add("chi-additivity", ok, "O(p) + O(q), -2 <= p <= q <= 2");
  }
  {
    const ChernVector t = tangent_bundle(g14());
    add("anticanonical-index", t.c(1) == Rational(5) * sigma(g14(), Partition{1}),
        "c1(T G(1,4)) = " + t.c(1).to_string());
  }
  return out;
}

ClassificationReport replay_proof(Execution exec) {
  ClassificationReport rep;
  const RingPtr& g = g14();

  rep.preflight = run_preflight();
  for (const auto& c : rep.preflight)
    if (!c.passed) throw ReplayMismatch("preflight", c.name + " failed: " + c.detail);

  // Step 1: numerical filters.
  const std::vector<CandidateRecord> records = enumerate_candidates(exec);
  if (auto err = check_step1(records)) throw ReplayMismatch("step 1", *err);
  rep.step1_table = step1_table(records);
  rep.scan_exhaustive = scan_is_exhaustive(records);
  if (!rep.scan_exhaustive) throw ReplayMismatch("step 1", "scan square clips a candidate");
  for (const auto& r : records) {
    if (r.data.e != -1 || r.verdicts.size() < 2 || r.verdicts[1].note.empty()) continue;
    rep.schur_discrepancies.push_back(
        {r.data, r.verdicts[1].witnesses[1].value, r.passed(rules::kSchwarzenberger.name)});
  }

  std::vector<RankTwoData> open;
  for (const auto& r : step1_survivors(records)) open.push_back(r.data);

  // Step 2: h^0(E(-2)) >= chi(E(-2)) > 0 forces O(-2) + O(2).
  {
    const RankTwoData d{0, -4, -4};
    Step2Result& s2 = rep.step2;
    s2.data = d;
    s2.constraints = section_constraints(d.e, d.a, d.b, 2);
    s2.chi_twist_minus2 = euler_characteristic(g, twist(rank_two_chern(g, d), -2));
    s2.split = split_detect(d.e, d.a, d.b);
    s2.citations = {rules::kLePotier.name, rules::kSectionSplitting.name};
    const SplittingType want{-2, 2};
    if (!s2.constraints.split_iff_both_zero || !s2.split || *s2.split != want || s2.chi_twist_minus2 <= 0)
      throw ReplayMismatch("step 2", "(0,-4,-4) does not close as O(-2) + O(2): chi(E(-2)) = " +
                                         rat(s2.chi_twist_minus2));
    std::erase(open, d);
    rep.final_list.push_back({d, s2.split, split_name(*s2.split)});
  }

  // Step 3: a != 0. chi(E|P3(-1)) > 0 gives a section of E|P3(-1); combined
  // with h^0(E|P3(-2)) = 0 from step 2 the section bound applies.
  {
    const auto want = expected::step3_table();
    std::vector<RankTwoData> rows;
    for (const auto& d : open)
      if (d.a != 0) rows.push_back(d);
    std::vector<RankTwoData> want_rows;
    for (const auto& [d, chi] : want) want_rows.push_back(d);
    if (rows != want_rows) throw ReplayMismatch("step 3", "unexpected set of a != 0 candidates");

    for (std::size_t i = 0; i < rows.size(); ++i) {
      const RankTwoData d = rows[i];
      const auto [c1, c2] = restriction_to_p3(d.e, d.a);
      Step3Row row{d, chi_p3(c1, c2, -1), Status::surviving, rules::kSectionBound.name, "", {}};
      if (row.chi_p3_minus1 != want[i].second)
        throw ReplayMismatch("step 3", "chi(E|P3(-1)) for " + d.to_string() + " is " +
                                           rat(row.chi_p3_minus1) + ", expected " + rat(want[i].second));
      if (row.chi_p3_minus1 <= 0)
        throw ReplayMismatch("step 3", "no section of E|P3(-1) for " + d.to_string());
      const int bound = d.e - 1;
      if (d.a < bound) {
        row.outcome = Status::eliminated;
        row.detail = "a = " + std::to_string(d.a) + " < e-1 = " + std::to_string(bound);
      } else if (d.a == bound) {
        const SplittingType forced{std::min(1, bound), std::max(1, bound)};
        const auto split = split_detect(d.e, d.a, d.b);
        if (split && *split == forced) {
          row.outcome = Status::classified;
          row.split = split;
          row.detail = "a = e-1 forces " + split_name(forced);
        } else {
          row.outcome = Status::eliminated;
          row.detail = "a = e-1 forces " + split_name(forced) + ", which has b = " +
                       std::to_string(forced.p * forced.q) + " != " + std::to_string(d.b);
        }
      } else {
        throw ReplayMismatch("step 3", d.to_string() + " is not settled by the section bound");
      }
      if (row.outcome == Status::classified)
        rep.final_list.push_back({d, row.split, split_name(*row.split)});
      rep.step3_table.push_back(std::move(row));
    }
  }

  // Step 4: a = 0. E|P3 has sections but none after twisting by -1, so it
  // splits on every P^3 and E is uniform.
  {
    const auto want = expected::step4_chi();
    for (const auto& d : open) {
      if (d.a != 0) continue;
      const auto [c1, c2] = restriction_to_p3(d.e, d.a);
      Step4Row row{d, chi_p3(c1, c2, 0), {}, split_detect(d.e, d.a, d.b), ""};
      const auto it = std::find_if(want.begin(), want.end(), [&](auto& w) { return w.first == d.e; });
      if (it == want.end() || row.chi_p3 != it->second || row.chi_p3 <= 0)
        throw ReplayMismatch("step 4", "chi(E|P3) for " + d.to_string() + " is " + rat(row.chi_p3));
      const auto type = split_detect(c1, c2, c2);
      if (!type) throw ReplayMismatch("step 4", "restriction of " + d.to_string() + " cannot split");
      row.uniform_type = *type;
      if (row.split) {
        row.description = split_name(*row.split);
      } else if (d == expected::non_split()) {
        row.description =
            "tautological rank-two subbundle S = S^dual(-1) (the universal bundle Q of "
            "G(1,4) in the dual convention)";
      } else {
        throw ReplayMismatch("step 4", d.to_string() + " matches no uniform bundle");
      }
      rep.final_list.push_back({d, row.split, row.description});
      rep.step4_results.push_back(std::move(row));
    }
  }

  // Final list: the five split Fano bundles plus one non-split bundle.
  {
    std::set<SplittingType> got, want;
    int non_split = 0;
    for (const auto& f : rep.final_list) {
      if (f.split) got.insert(*f.split);
      else ++non_split;
    }
    for (const auto& s : split_fano_bundles(4)) want.insert(s);
    if (got != want || non_split != 1 || rep.final_list.size() != 6)
      throw ReplayMismatch("final", "classification does not match the five split types plus one");
  }

  rep.cited_rules = {rules::kPositivity,       rules::kSchurPositivity,   rules::kSchwarzenberger,
                     rules::kGriffithsVanishing, rules::kLePotier,          rules::kSectionSplitting,
                     rules::kSectionBound,     rules::kRestrictionDetermined, rules::kUniformSplitting};
  return rep;
}

}  // namespace schubert::pipeline

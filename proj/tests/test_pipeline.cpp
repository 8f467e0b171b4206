#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "schubert/hrr.hpp"
#include "schubert/pipeline.hpp"

using namespace schubert;
using namespace schubert::pipeline;

namespace {

using Types = std::vector<SplittingType>;

Types brute_splitting(int e, int n) {
  Types out;
  for (int p = -20; p <= 20; ++p) {
    const int q = e - p;
    if (p <= q && 2 * p + (n + 1 - e) > 0) out.push_back({p, q});
  }
  return out;
}

std::set<SplittingType> brute_split_fano(int n) {
  std::set<SplittingType> out;
  for (int p = -20; p <= 20; ++p)
    for (int q = p; q <= 20; ++q)
      if ((p + q == 0 || p + q == -1) && std::abs(p - q) < n + 1) out.insert({p, q});
  return out;
}

const std::vector<CandidateRecord>& records() {
  static const auto r = enumerate_candidates();
  return r;
}

std::vector<RankTwoData> datas(const std::vector<CandidateRecord>& rs) {
  std::vector<RankTwoData> out;
  for (const auto& r : rs) out.push_back(r.data);
  return out;
}

}  // namespace

TEST_CASE("splitting types on a line") {
  CHECK(fano_splitting_types(0, 4) == Types{{-2, 2}, {-1, 1}, {0, 0}});
  CHECK(fano_splitting_types(-1, 4) == Types{{-2, 1}, {-1, 0}});
  CHECK(fano_splitting_types(0, 2) == Types{{-1, 1}, {0, 0}});
  CHECK(fano_splitting_types(0, 5) == Types{{-2, 2}, {-1, 1}, {0, 0}});
  for (int n = 2; n <= 7; ++n)
    for (int e = -3; e <= 3; ++e) CHECK(fano_splitting_types(e, n) == brute_splitting(e, n));
}

TEST_CASE("split Fano bundles") {
  CHECK(split_fano_bundles(4) == Types{{0, 0}, {-1, 1}, {-2, 2}, {-1, 0}, {-2, 1}});
  CHECK(split_fano_bundles(2) == Types{{0, 0}, {-1, 1}, {-1, 0}});
  CHECK(split_fano_bundles(3) == Types{{0, 0}, {-1, 1}, {-1, 0}, {-2, 1}});
  for (int n = 2; n <= 8; ++n) {
    const auto got = split_fano_bundles(n);
    CHECK(std::set<SplittingType>(got.begin(), got.end()) == brute_split_fano(n));
  }
}

TEST_CASE("filter context") {
  CHECK(FilterContext::for_e(0).m == ratio(5, 2));
  CHECK(FilterContext::for_e(-1).m == 3);
  CHECK_THROWS_AS(FilterContext::for_e(1), std::invalid_argument);
}

TEST_CASE("positivity filter") {
  const auto e0 = FilterContext::for_e(0);
  const auto e1 = FilterContext::for_e(-1);
  const auto v = positivity_filter(e0, -6, -6);
  CHECK(v.passed);
  CHECK(v.witnesses[0].value == ratio(1, 4));
  CHECK_FALSE(positivity_filter(e0, -7, 0).passed);
  const auto w = positivity_filter(e1, -6, 0);
  CHECK_FALSE(w.passed);
  CHECK(w.witnesses[0].value == 0);
  CHECK(positivity_filter(e1, -5, -5).passed);

  // The witnesses are the degrees of c2(E(m)) on a P^3 and a P^2.
  const auto g = GrassmannRing::make(1, 4);
  for (const auto& ctx : {e0, e1})
    for (int a = -8; a <= 4; a += 3)
      for (int b = -8; b <= 4; b += 4) {
        const auto c2 = twist(rank_two_chern(g, {ctx.e, a, b}), ctx.m).c(2);
        const auto pv = positivity_filter(ctx, a, b);
        CHECK(pv.witnesses[0].value == integrate(c2 * omega_class(g, 0, 4) * sigma(g, Partition{1})));
        CHECK(pv.witnesses[1].value == integrate(c2 * omega_class(g, 1, 2)));
      }
}

TEST_CASE("Schur filter") {
  const auto e0 = FilterContext::for_e(0);
  const auto e1 = FilterContext::for_e(-1);
  for (int a = -6; a <= 8; ++a) {
    const auto v = schur_filter(e0, a, 0);
    CHECK(v.witnesses[0].value == ratio(125, 2) - 10 * a);
    CHECK(v.passed == (a <= 6));
  }
  CHECK(schur_filter(e0, 6, 6).passed);
  CHECK_FALSE(schur_filter(e0, 6, 7).passed);
  CHECK(schur_filter(e0, 6, 6).note.empty());

  const auto v = schur_filter(e1, 6, 7);
  CHECK(v.passed);
  CHECK(v.witnesses[1].value == 130 - 60 - 70);
  CHECK_FALSE(v.note.empty());
  CHECK_FALSE(schur_filter(e1, 6, 8).passed);
  CHECK_FALSE(schur_filter(e1, 7, 0).passed);
}

TEST_CASE("Schwarzenberger and Griffiths filters") {
  const auto e0 = FilterContext::for_e(0);
  const auto e1 = FilterContext::for_e(-1);
  CHECK(schwarzenberger_filter(e0, -4, -4).passed);
  CHECK(schwarzenberger_filter(e0, 0, 0).passed);
  const auto s = schwarzenberger_filter(e1, 6, 6);
  CHECK(s.passed);
  CHECK(s.witnesses.size() == 7);
  CHECK(s.witnesses[5].value == -935);
  CHECK_FALSE(schwarzenberger_filter(e0, 1, 0).passed);

  const auto gr = griffiths_filter(e1, 6, 6);
  CHECK_FALSE(gr.passed);
  CHECK(gr.witnesses.at(0).value == -935);
  CHECK(griffiths_filter(e1, 0, 1).passed);
  CHECK(griffiths_filter(e1, 0, 1).witnesses.at(0).value >= 0);
  CHECK(griffiths_filter(e0, 6, 6).passed);
  CHECK(griffiths_filter(e0, 6, 6).witnesses.empty());
}

TEST_CASE("Step 1 enumeration") {
  const auto& rs = records();
  CHECK(rs.size() == 2 * 27 * 27);
  const auto table = step1_table(rs);
  const auto survivors = step1_survivors(rs);
  CHECK(table.size() == 10);
  CHECK(survivors.size() == 9);
  CHECK_FALSE(check_step1(rs).has_value());

  const std::vector<RankTwoData> want{{0, -4, -4}, {0, -4, 12}, {0, -1, -1}, {0, -1, 3},  {0, 0, 0},
                                      {-1, -2, -2}, {-1, -2, 7}, {-1, 0, 0},  {-1, 0, 1}, {-1, 6, 6}};
  CHECK(datas(table) == want);
  const auto& last = table.back();
  CHECK(last.status == Status::eliminated);
  CHECK(last.eliminated_by == rules::kGriffithsVanishing.name);

  for (const auto& r : rs) {
    if (r.status != Status::eliminated) continue;
    // exactly one failing verdict, the last one, carrying its witnesses
    CHECK(std::count_if(r.verdicts.begin(), r.verdicts.end(), [](auto& v) { return !v.passed; }) == 1);
    CHECK_FALSE(r.verdicts.back().passed);
    CHECK(r.verdicts.back().rule == r.eliminated_by);
    CHECK_FALSE(r.verdicts.back().witnesses.empty());
    // positivity eliminations lie outside a,b >= -6 (e=0) or a,b > -6 (e=-1)
    if (r.eliminated_by == rules::kPositivity.name) {
      const int floor = r.data.e == 0 ? -6 : -5;
      CHECK((r.data.a < floor || r.data.b < floor));
    }
  }
}

TEST_CASE("the stated e=-1 Schur bound and the strict pairing agree after integrality") {
  for (const auto& r : records()) {
    if (r.data.e != -1 || r.verdicts.size() < 2) continue;
    const bool strict = r.data.a <= 6 && r.data.a + r.data.b <= 12;
    if (r.passed(rules::kSchwarzenberger.name)) CHECK(strict);
  }
}

TEST_CASE("evaluation order does not matter") {
  const auto par = enumerate_candidates(Execution::parallel);
  REQUIRE(par.size() == records().size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].data == records()[i].data);
    CHECK(par[i].status == records()[i].status);
    CHECK(par[i].verdicts.size() == records()[i].verdicts.size());
  }
  std::vector<RankTwoData> grid = datas(records());
  std::mt19937 rng(99);
  std::shuffle(grid.begin(), grid.end(), rng);
  std::map<RankTwoData, Status> shuffled;
  for (const auto& d : grid) shuffled[d] = evaluate_candidate(d).status;
  for (const auto& r : records()) CHECK(shuffled.at(r.data) == r.status);
}

TEST_CASE("scan exhaustiveness") {
  CHECK(scan_is_exhaustive(records()));
  const ScanRange narrow{-6, 10};
  CHECK_FALSE(scan_is_exhaustive(enumerate_candidates(Execution::sequential, narrow), narrow));
}

TEST_CASE("normalization at the boundary") {
  CHECK(normalize({0, 1, 2}) == std::pair{RankTwoData{0, 1, 2}, 0});
  CHECK(normalize({2, -1, -1}).first == RankTwoData{0, -2, -2});
  CHECK(normalize({1, 0, 0}).second == -1);
  for (int e = -7; e <= 7; ++e) {
    const auto [d, t] = normalize({e, 3, 4});
    CHECK(d.normalized());
    CHECK(twist_data(d, -t) == RankTwoData{e, 3, 4});
  }
  // O(-1)+O(1) twisted by 3 is O(2)+O(4); it normalizes back and survives.
  const auto r = evaluate_candidate(twist_data({0, -1, -1}, 3));
  CHECK(r.data == RankTwoData{0, -1, -1});
  CHECK(r.status == Status::surviving);
}

TEST_CASE("section constraints and split detection") {
  const auto c = section_constraints(0, -4, -4, 2);
  CHECK(c.va == 0);
  CHECK(c.vb == 0);
  CHECK(c.split_iff_both_zero);
  CHECK(section_constraints(-1, -2, -2, 2).split_iff_both_zero);
  const auto t = section_constraints(-1, 0, 1, 1);
  CHECK(t.va == 0);
  CHECK(t.vb == 1);
  CHECK_FALSE(t.split_iff_both_zero);

  CHECK(split_detect(0, -1, -1) == SplittingType{-1, 1});
  CHECK(split_detect(-1, 0, 0) == SplittingType{-1, 0});
  CHECK(split_detect(0, -4, -4) == SplittingType{-2, 2});
  CHECK_FALSE(split_detect(-1, 0, 1).has_value());
  CHECK_FALSE(split_detect(0, 1, 1).has_value());
  CHECK_FALSE(split_detect(1, -1, -1).has_value());

  // agrees with Whitney data of every O(p)+O(q)
  for (int p = -9; p <= 9; ++p)
    for (int q = p; q <= 9; ++q) CHECK(split_detect(p + q, p * q, p * q) == SplittingType{p, q});
}

TEST_CASE("restriction to P^3") {
  CHECK(restriction_to_p3(0, -4) == std::pair{0, -4});
  for (int e = -3; e <= 3; ++e)
    for (int a = -5; a <= 5; ++a) CHECK(restriction_to_p3(e, a) == std::pair{e, a});
}

TEST_CASE("preflight") {
  for (const auto& c : run_preflight()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("replay") {
  const auto rep = replay_proof();
  CHECK(rep.step1_table.size() == 10);
  CHECK(rep.scan_exhaustive);
  CHECK(rep.step2.data == RankTwoData{0, -4, -4});
  CHECK(rep.step2.split == SplittingType{-2, 2});
  CHECK(rep.step2.chi_twist_minus2 == 1);

  REQUIRE(rep.step3_table.size() == 5);
  const std::vector<Rational> chis{4, 1, 1, 1, 1};
  const std::vector<Status> outcomes{Status::eliminated, Status::classified, Status::eliminated,
                                     Status::classified, Status::eliminated};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rep.step3_table[i].chi_p3_minus1 == chis[i]);
    CHECK(rep.step3_table[i].outcome == outcomes[i]);
  }

  REQUIRE(rep.step4_results.size() == 3);
  CHECK(rep.step4_results[0].chi_p3 == 2);
  CHECK(rep.step4_results[1].chi_p3 == 1);
  CHECK(rep.step4_results[2].chi_p3 == 1);

  REQUIRE(rep.final_list.size() == 6);
  std::set<SplittingType> split;
  std::vector<RankTwoData> non_split;
  for (const auto& f : rep.final_list) {
    if (f.split) split.insert(*f.split);
    else non_split.push_back(f.data);
  }
  const auto want = split_fano_bundles(4);
  CHECK(split == std::set<SplittingType>(want.begin(), want.end()));
  CHECK(non_split == std::vector<RankTwoData>{{-1, 0, 1}});

  // The e=-1 candidates on the line a+b=13 all fail integrality.
  CHECK(rep.schur_discrepancies.size() == 12);
  for (const auto& d : rep.schur_discrepancies) {
    CHECK(d.data.a + d.data.b == 13);
    CHECK(d.pairing == 0);
    CHECK_FALSE(d.survived_step1);
  }

  const auto again = replay_proof(Execution::parallel);
  CHECK(datas(again.step1_table) == datas(rep.step1_table));
  CHECK(again.final_list.size() == rep.final_list.size());
}

TEST_CASE("Step 1 regression alarm") {
  auto tampered = records();
  for (auto& r : tampered)
    if (r.data == RankTwoData{0, -1, 3}) {
      r.verdicts.back().passed = false;
      r.verdicts.erase(r.verdicts.begin() + 2, r.verdicts.end());
      r.verdicts.push_back({rules::kSchwarzenberger.name, false, {}, "", ""});
      r.status = Status::eliminated;
    }
  const auto err = check_step1(tampered);
  REQUIRE(err.has_value());
  CHECK(err->find("integrality survivors") != std::string::npos);

  const ReplayMismatch m("step 3", "boom");
  CHECK(m.step() == "step 3");
  CHECK(std::string(m.what()) == "step 3: boom");
}

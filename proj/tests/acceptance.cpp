// Acceptance suite: one line per criterion, exit status 1 if any fails.
// All comparisons are exact (rational or integer arithmetic).

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "schubert/hrr.hpp"
#include "schubert/pipeline.hpp"

using namespace schubert;
using nlohmann::json;
namespace pl = schubert::pipeline;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

json run_json(std::vector<std::string> args, int& code) {
  args.push_back("--format");
  args.push_back("json");
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return json::parse(out.str());
}

std::string rational_text(const json& r) {
  const std::string n = r.at("num"), d = r.at("den");
  return d == "1" ? n : n + "/" + d;
}

Outcome step1_table() {
  Outcome o;
  int code = 0;
  const json doc = run_json({"filter"}, code);
  o.require(code == 0, "filter exit code " + std::to_string(code));
  std::set<std::tuple<int, int, int>> got;
  for (const auto& r : doc["rows"]) got.insert({r["e"].get<int>(), r["a"].get<int>(), r["b"].get<int>()});
  const std::set<std::tuple<int, int, int>> want{
      {0, -4, -4}, {0, -4, 12}, {0, -1, -1}, {0, -1, 3},  {0, 0, 0},
      {-1, 6, 6},  {-1, -2, -2}, {-1, -2, 7}, {-1, 0, 1}, {-1, 0, 0}};
  o.require(doc["rows"].size() == 10, "row count " + std::to_string(doc["rows"].size()));
  o.require(got == want, "candidate pairs differ from the expected ten");
  return o;
}

Outcome griffiths() {
  Outcome o;
  const auto g = GrassmannRing::make(1, 4);
  const Rational chi = euler_characteristic(g, twist(rank_two_chern(g, {-1, 6, 6}), 5));
  o.require(chi == -935, "chi(E(5)) = " + to_string(chi));
  const auto recs = pl::enumerate_candidates();
  std::vector<RankTwoData> removed;
  for (const auto& r : recs)
    if (r.eliminated_by == pl::rules::kGriffithsVanishing.name) removed.push_back(r.data);
  o.require(removed == std::vector<RankTwoData>{{-1, 6, 6}}, "Griffiths rule removed the wrong set");
  return o;
}

Outcome step3_table() {
  Outcome o;
  const std::vector<std::pair<int, int>> ea{{0, -4}, {0, -1}, {0, -1}, {-1, -2}, {-1, -2}};
  const std::vector<Rational> want{4, 1, 1, 1, 1};
  for (std::size_t i = 0; i < ea.size(); ++i) {
    const Rational v = chi_p3(ea[i].first, ea[i].second, -1);
    o.require(v == want[i], "chi_p3(" + std::to_string(ea[i].first) + "," + std::to_string(ea[i].second) +
                                ",-1) = " + to_string(v));
  }
  int code = 0;
  const json doc = run_json({"replay"}, code);
  std::vector<std::string> got;
  for (const auto& r : doc["step3"]) got.push_back(rational_text(r["chi_p3_minus1"]));
  o.require(got == std::vector<std::string>{"4", "1", "1", "1", "1"}, "replay step-3 table differs");
  return o;
}

Outcome final_classification() {
  Outcome o;
  int code = 0;
  const json doc = run_json({"replay"}, code);
  o.require(code == 0, "replay exit code " + std::to_string(code));
  const auto& fin = doc["final_list"];
  o.require(fin.size() == 6, "final list has " + std::to_string(fin.size()) + " entries");
  std::set<std::pair<int, int>> split;
  std::vector<std::tuple<int, int, int>> non_split;
  for (const auto& f : fin) {
    const auto& d = f["data"];
    if (f["split"].is_null()) non_split.emplace_back(d["e"].get<int>(), d["a"].get<int>(), d["b"].get<int>());
    else split.emplace(f["split"]["p"].get<int>(), f["split"]["q"].get<int>());
  }
  const std::set<std::pair<int, int>> want{{0, 0}, {-1, 1}, {-2, 2}, {-1, 0}, {-2, 1}};
  o.require(split == want, "split types differ from the five Fano split bundles");
  o.require(non_split == std::vector<std::tuple<int, int, int>>{{-1, 0, 1}}, "non-split entry is not (-1,0,1)");
  return o;
}

Outcome splitting_displays() {
  Outcome o;
  using T = std::vector<pl::SplittingType>;
  o.require(pl::fano_splitting_types(0, 4) == T{{-2, 2}, {-1, 1}, {0, 0}}, "e = 0 display");
  o.require(pl::fano_splitting_types(-1, 4) == T{{-2, 1}, {-1, 0}}, "e = -1 display");
  return o;
}

Outcome ring_engine() {
  Outcome o;
  const auto g14 = GrassmannRing::make(1, 4);
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : g14->basis(d))
      for (int e = 0; e <= 6; ++e)
        for (const auto& mu : g14->basis(e)) {
          const Rational want = mu == complement(lam, g14->box()) ? 1 : 0;
          o.require(integrate(sigma(g14, lam) * sigma(g14, mu)) == want,
                    "duality fails for " + lam.to_string() + "," + mu.to_string());
        }
  for (const auto& g : {g14, GrassmannRing::make(1, 3)})
    for (int d = 0; d <= g->dimension(); ++d)
      for (const auto& lam : g->basis(d))
        for (int e = 0; e <= g->dimension(); ++e)
          for (const auto& mu : g->basis(e)) {
            ChowClass want(g);
            for (const auto& [nu, c] : oracle::pieri_product(lam, mu, g->box())) want.add_term(nu, c);
            o.require(sigma(g, lam) * sigma(g, mu) == want,
                      "Pieri oracle disagrees on " + g->name() + " " + lam.to_string() + "*" + mu.to_string());
          }
  o.require(integrate(power(sigma(g14, Partition{1}), 6)) == 5, "deg G(1,4) != 5");
  for (int n = 2; n <= 6; ++n)
    o.require(degree_of_grassmannian(GrassmannRing::make(1, n)) == oracle::catalan(n - 1),
              "Catalan law fails at n = " + std::to_string(n));
  return o;
}

Outcome characteristic_classes() {
  Outcome o;
  const auto g = GrassmannRing::make(1, 4);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int t = 0; t < 100; ++t) {
    const int rank = 1 + t % 3;
    std::vector<ChowClass> c;
    for (int d = 1; d <= rank; ++d) {
      ChowClass x(g);
      for (const auto& p : g->basis(d)) x.add_term(p, ratio(coeff(rng), 1 + rng() % 3));
      c.push_back(x);
    }
    const ChernVector v(g, rank, c);
    o.require(power_sums_to_chern(chern_to_power_sums(v)) == v, "Newton round trip, trial " + std::to_string(t));
  }
  for (auto [k, n] : {std::pair{0, 3}, std::pair{1, 3}, std::pair{1, 4}}) {
    const auto r = GrassmannRing::make(k, n);
    o.require(tautological_bundle(r).total() * quotient_bundle(r).total() == unit(r),
              "c(S)c(Q) != 1 on " + r->name());
  }
  const auto p3 = GrassmannRing::make(0, 3);
  const auto h = [&](int i) { return sigma(p3, Partition(std::vector<int>{i})); };
  o.require(todd_class(tangent_bundle(p3)) == unit(p3) + Rational(2) * h(1) + ratio(11, 6) * h(2) + h(3),
            "td(P^3)");
  o.require(integrate(tangent_bundle(g).c(6)) == 10, "Euler number of G(1,4)");
  o.require(euler_characteristic(g, ChernVector(g, 1)) == 1, "chi(O)");
  o.require(euler_characteristic(g, line_bundle(g, 1)) == 10, "chi(O(1))");
  return o;
}

Outcome schwarzenberger_soundness() {
  Outcome o;
  const auto g = GrassmannRing::make(1, 4);
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> arg(-50, 50);
  std::vector<int> points;
  for (int i = 0; i < 20; ++i) points.push_back(arg(rng));
  auto check = [&](const RankTwoData& d) {
    const auto p = euler_polynomial(g, rank_two_chern(g, d));
    for (int k = 0; k <= 6; ++k) o.require(is_integer(p(k)), d.to_string() + " at k=" + std::to_string(k));
    for (int k : points) o.require(is_integer(p(k)), d.to_string() + " at k=" + std::to_string(k));
    o.require(is_integer_valued(p), d.to_string() + " flagged non-integral");
  };
  for (int p = -4; p <= 4; ++p)
    for (int q = -4; q <= 4; ++q) check({p + q, p * q, p * q});
  check({-1, 0, 1});
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1. Step 1 table reproduction (ten candidate pairs, exact)", step1_table},
      {"2. chi(E(5)) = -935 for (-1,6,6); Griffiths rule eliminates exactly it", griffiths},
      {"3. Step 3 table: chi(E|P3(-1)) = 4,1,1,1,1", step3_table},
      {"4. Final classification: five split types + non-split (-1,0,1)", final_classification},
      {"5. Splitting-type displays for e = 0 and e = -1", splitting_displays},
      {"6. Ring engine: duality, Pieri oracle, deg G(1,4) = 5, Catalan law", ring_engine},
      {"7. Characteristic classes: Newton, Whitney, td(P^3), Euler number, chi(O), chi(O(1))",
       characteristic_classes},
      {"8. Schwarzenberger soundness for split bundles and (-1,0,1)", schwarzenberger_soundness},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name;
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}

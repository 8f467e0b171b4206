#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "schubert/charclass.hpp"
#include "schubert/chow.hpp"
#include "schubert/hrr.hpp"
#include "schubert/pipeline.hpp"

namespace schubert::cli {

namespace {

using nlohmann::ordered_json;
namespace pl = schubert::pipeline;

ordered_json rational_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\n";
}

// Left-aligned columns, two spaces apart.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_scalar(std::ostream& out, Format fmt, ordered_json inputs, const Rational& value) {
  switch (fmt) {
    case Format::plain:
      out << to_string(value) << "\n";
      break;
    case Format::csv:
      out << "value\n" << to_string(value) << "\n";
      break;
    case Format::json:
      inputs["value"] = rational_json(value);
      out << inputs.dump(2) << "\n";
      break;
  }
}

ordered_json data_json(const RankTwoData& d) { return {{"e", d.e}, {"a", d.a}, {"b", d.b}}; }

ordered_json verdict_json(const pl::Verdict& v) {
  ordered_json w = ordered_json::array();
  for (const auto& x : v.witnesses) w.push_back({{"name", x.name}, {"value", rational_json(x.value)}});
  return {{"rule", v.rule}, {"passed", v.passed}, {"witnesses", w}, {"citation", v.citation},
          {"note", v.note}};
}

ordered_json record_json(const pl::CandidateRecord& r) {
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v));
  ordered_json j = data_json(r.data);
  j["status"] = pl::to_string(r.status);
  j["eliminated_by"] = r.eliminated_by;
  j["verdicts"] = verdicts;
  return j;
}

std::optional<ordered_json> split_json(const std::optional<pl::SplittingType>& s) {
  if (!s) return std::nullopt;
  return ordered_json{{"p", s->p}, {"q", s->q}};
}

const pl::Verdict* find_verdict(const pl::CandidateRecord& r, const std::string& rule) {
  for (const auto& v : r.verdicts)
    if (v.rule == rule) return &v;
  return nullptr;
}

std::string witness_or_blank(const pl::CandidateRecord& r, const std::string& rule, std::size_t i) {
  const pl::Verdict* v = find_verdict(r, rule);
  if (!v || i >= v->witnesses.size()) return "";
  return to_string(v->witnesses[i].value);
}

// ---- filter ---------------------------------------------------------------

int cmd_filter(Format fmt, std::ostream& out, std::ostream& err) {
  const auto records = pl::enumerate_candidates();
  const auto table = pl::step1_table(records);
  const auto survivors = pl::step1_survivors(records);
  const auto mismatch = pl::check_step1(records);

  std::vector<std::string> header{"e", "a", "b", "status", "eliminated_by",
                                  "schur_0_4", "schur_1_3"};
  for (int k = 0; k <= 6; ++k) header.push_back("chi_E" + std::to_string(k));
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table) {
    std::vector<std::string> row{std::to_string(r.data.e), std::to_string(r.data.a),
                                 std::to_string(r.data.b), pl::to_string(r.status), r.eliminated_by,
                                 witness_or_blank(r, pl::rules::kSchurPositivity.name, 0),
                                 witness_or_blank(r, pl::rules::kSchurPositivity.name, 1)};
    for (int k = 0; k <= 6; ++k)
      row.push_back(witness_or_blank(r, pl::rules::kSchwarzenberger.name, static_cast<std::size_t>(k)));
    rows.push_back(std::move(row));
  }

  switch (fmt) {
    case Format::plain:
      write_table(out, header, rows);
      out << "survivors after integrality filter: " << table.size() << "\n";
      out << "survivors after Griffiths rule: " << survivors.size() << "\n";
      break;
    case Format::csv:
      write_csv_row(out, header);
      for (const auto& r : rows) write_csv_row(out, r);
      break;
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : table) arr.push_back(record_json(r));
      ordered_json doc{{"rows", arr},
                       {"survivors_pre_griffiths", table.size()},
                       {"survivors_post_griffiths", survivors.size()},
                       {"scan_exhaustive", pl::scan_is_exhaustive(records)},
                       {"matches_expected", !mismatch.has_value()}};
      out << doc.dump(2) << "\n";
      break;
    }
  }
  if (mismatch) {
    err << "regression: " << *mismatch << "\n";
    return kMismatch;
  }
  return kOk;
}

// ---- replay ---------------------------------------------------------------

struct ReplayRow {
  std::string section;
  RankTwoData data;
  std::string value;
  std::string status;
  std::string detail;
};

std::vector<ReplayRow> replay_rows(const pl::ClassificationReport& rep) {
  std::vector<ReplayRow> rows;
  for (const auto& r : rep.step1_table)
    rows.push_back({"step1", r.data, witness_or_blank(r, pl::rules::kSchwarzenberger.name, 5),
                    pl::to_string(r.status), r.eliminated_by.empty() ? "" : "by " + r.eliminated_by});
  rows.push_back({"step2", rep.step2.data, to_string(rep.step2.chi_twist_minus2), "classified",
                  rep.step2.split ? "split " + rep.step2.split->to_string() : ""});
  for (const auto& r : rep.step3_table)
    rows.push_back({"step3", r.data, to_string(r.chi_p3_minus1), pl::to_string(r.outcome), r.detail});
  for (const auto& r : rep.step4_results)
    rows.push_back({"step4", r.data, to_string(r.chi_p3), "classified",
                    "uniform " + r.uniform_type.to_string() + "; " + r.description});
  for (const auto& f : rep.final_list)
    rows.push_back({"final", f.data, f.split ? f.split->to_string() : "non-split", "classified",
                    f.description});
  return rows;
}

void write_replay_plain(std::ostream& out, const pl::ClassificationReport& rep) {
  out << "Preflight checks\n";
  for (const auto& c : rep.preflight)
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";

  out << "\nStep 1: numerical filters (chi(E(5)) shown)\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : rep.step1_table)
    rows.push_back({std::to_string(r.data.e), std::to_string(r.data.a), std::to_string(r.data.b),
                    witness_or_blank(r, pl::rules::kSchwarzenberger.name, 5), pl::to_string(r.status),
                    r.eliminated_by});
  write_table(out, {"e", "a", "b", "chi_E5", "status", "eliminated_by"}, rows);
  out << "  scan exhaustive: " << (rep.scan_exhaustive ? "yes" : "no") << "\n";
  for (const auto& d : rep.schur_discrepancies)
    out << "  note: " << d.data.to_string() << " passes b <= 13-a but s3.Omega(1,3) = "
        << to_string(d.pairing) << (d.survived_step1 ? " (survives integrality)" : " (fails integrality)")
        << "\n";

  out << "\nStep 2: the case O(-2) + O(2)\n";
  out << "  " << rep.step2.data.to_string() << ": chi(E(-2)) = " << to_string(rep.step2.chi_twist_minus2)
      << ", section constraints (" << rep.step2.constraints.va << "," << rep.step2.constraints.vb
      << ") -> split " << (rep.step2.split ? rep.step2.split->to_string() : "?") << "\n";

  out << "\nStep 3: a != 0 (chi(E|P3(-1)))\n";
  rows.clear();
  for (const auto& r : rep.step3_table)
    rows.push_back({r.data.to_string(), to_string(r.chi_p3_minus1), pl::to_string(r.outcome), r.detail});
  write_table(out, {"(e,a,b)", "chi", "outcome", "reason"}, rows);

  out << "\nStep 4: a = 0 (chi(E|P3))\n";
  rows.clear();
  for (const auto& r : rep.step4_results)
    rows.push_back({r.data.to_string(), to_string(r.chi_p3), r.uniform_type.to_string(), r.description});
  write_table(out, {"(e,a,b)", "chi", "uniform", "bundle"}, rows);

  out << "\nClassification (" << rep.final_list.size() << " types)\n";
  rows.clear();
  for (const auto& f : rep.final_list)
    rows.push_back({f.data.to_string(), f.split ? "split" : "non-split", f.description});
  write_table(out, {"(e,a,b)", "kind", "bundle"}, rows);

  out << "\nCited rules (" << pl::kCitedNotVerified << ")\n";
  for (const auto& r : rep.cited_rules) out << "  " << r.name << ": " << r.statement << "\n";
}

ordered_json replay_json(const pl::ClassificationReport& rep) {
  ordered_json doc;
  ordered_json pre = ordered_json::array();
  for (const auto& c : rep.preflight)
    pre.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  doc["preflight"] = pre;

  ordered_json s1 = ordered_json::array();
  for (const auto& r : rep.step1_table) s1.push_back(record_json(r));
  ordered_json disc = ordered_json::array();
  for (const auto& d : rep.schur_discrepancies)
    disc.push_back({{"data", data_json(d.data)},
                    {"pairing_omega_1_3", rational_json(d.pairing)},
                    {"survived_step1", d.survived_step1}});
  doc["step1"] = {{"table", s1}, {"scan_exhaustive", rep.scan_exhaustive}, {"schur_discrepancies", disc}};

  doc["step2"] = {{"data", data_json(rep.step2.data)},
                  {"section_constraints",
                   {{"va", rep.step2.constraints.va},
                    {"vb", rep.step2.constraints.vb},
                    {"split_iff_both_zero", rep.step2.constraints.split_iff_both_zero}}},
                  {"chi_twist_minus2", rational_json(rep.step2.chi_twist_minus2)},
                  {"split", split_json(rep.step2.split).value_or(nullptr)},
                  {"citations", rep.step2.citations}};

  ordered_json s3 = ordered_json::array();
  for (const auto& r : rep.step3_table)
    s3.push_back({{"data", data_json(r.data)},
                  {"chi_p3_minus1", rational_json(r.chi_p3_minus1)},
                  {"outcome", pl::to_string(r.outcome)},
                  {"rule", r.rule},
                  {"detail", r.detail},
                  {"split", split_json(r.split).value_or(nullptr)}});
  doc["step3"] = s3;

  ordered_json s4 = ordered_json::array();
  for (const auto& r : rep.step4_results)
    s4.push_back({{"data", data_json(r.data)},
                  {"chi_p3", rational_json(r.chi_p3)},
                  {"uniform_type", {{"p", r.uniform_type.p}, {"q", r.uniform_type.q}}},
                  {"split", split_json(r.split).value_or(nullptr)},
                  {"description", r.description}});
  doc["step4"] = s4;

  ordered_json fin = ordered_json::array();
  for (const auto& f : rep.final_list)
    fin.push_back({{"data", data_json(f.data)},
                   {"split", split_json(f.split).value_or(nullptr)},
                   {"description", f.description}});
  doc["final_list"] = fin;

  ordered_json cited = ordered_json::array();
  for (const auto& r : rep.cited_rules)
    cited.push_back({{"name", r.name}, {"statement", r.statement}, {"status", pl::kCitedNotVerified}});
  doc["cited_rules"] = cited;
  return doc;
}

int cmd_replay(Format fmt, std::ostream& out, std::ostream& err) {
  pl::ClassificationReport rep;
  try {
    rep = pl::replay_proof();
  } catch (const pl::ReplayMismatch& e) {
    err << "regression in " << e.step() << ": " << e.what() << "\n";
    return kMismatch;
  }
  switch (fmt) {
    case Format::plain:
      write_replay_plain(out, rep);
      break;
    case Format::csv:
      write_csv_row(out, {"section", "e", "a", "b", "value", "status", "detail"});
      for (const auto& r : replay_rows(rep))
        write_csv_row(out, {r.section, std::to_string(r.data.e), std::to_string(r.data.a),
                            std::to_string(r.data.b), r.value, r.status, r.detail});
      break;
    case Format::json:
      out << replay_json(rep).dump(2) << "\n";
      break;
  }
  return kOk;
}

// ---- small commands -------------------------------------------------------

int cmd_splitting_types(int e, int n, Format fmt, std::ostream& out, std::ostream& err) {
  if (n < 2) {
    err << "splitting-types: n must be at least 2\n";
    return kUsage;
  }
  const auto types = pl::fano_splitting_types(e, n);
  switch (fmt) {
    case Format::plain: {
      std::string s;
      for (const auto& t : types) s += (s.empty() ? "" : ",") + t.to_string();
      out << s << "\n";
      break;
    }
    case Format::csv:
      out << "p,q\n";
      for (const auto& t : types) out << t.p << "," << t.q << "\n";
      break;
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& t : types) arr.push_back({{"p", t.p}, {"q", t.q}});
      out << ordered_json{{"e", e}, {"n", n}, {"types", arr}}.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int cmd_intersect(int k, int n, const std::string& spec, Format fmt, std::ostream& out,
                  std::ostream& err) {
  RingPtr ring;
  try {
    ring = GrassmannRing::make(k, n);
  } catch (const std::invalid_argument& e) {
    err << "intersect: " << e.what() << "\n";
    return kUsage;
  }
  std::vector<Partition> factors;
  try {
    factors = parse_partition_list(spec);
  } catch (const std::invalid_argument& e) {
    err << "intersect: " << e.what() << "\n";
    return kUsage;
  }
  ChowClass product = unit(ring);
  ordered_json names = ordered_json::array();
  try {
    for (const auto& p : factors) {
      product = product * sigma(ring, p);
      names.push_back(p.to_string());
    }
  } catch (const std::domain_error& e) {
    err << "intersect: " << e.what() << "\n";
    return kDomain;
  }
  write_scalar(out, fmt, {{"k", k}, {"n", n}, {"classes", names}}, integrate(product));
  return kOk;
}

}  // namespace

std::vector<Partition> parse_partition_list(const std::string& text) {
  std::vector<Partition> out;
  std::stringstream factors(text);
  std::string factor;
  if (text.empty()) throw std::invalid_argument("empty partition list");
  while (std::getline(factors, factor, ';')) {
    std::vector<int> parts;
    std::stringstream ps(factor);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed part '" + tok + "' in \"" + text + "\"");
      }
      if (used != tok.size() || v < 0)
        throw std::invalid_argument("malformed part '" + tok + "' in \"" + text + "\"");
      parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty factor in \"" + text + "\"");
    out.emplace_back(std::move(parts));  // rejects increasing parts
  }
  if (!text.empty() && text.back() == ';') throw std::invalid_argument("empty factor in \"" + text + "\"");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection theory on Grassmannians and the rank-two Fano bundle replay",
               "schubert-cli"};
  app.require_subcommand(1);

  Format fmt = Format::plain;
  const std::map<std::string, Format> formats{
      {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "plain, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  int k = 1, n = 4, e = 0, a = 0, b = 0, tw = 0;
  std::string classes;

  auto* intersect = app.add_subcommand("intersect", "integral of a product of Schubert classes");
  intersect->add_option("--k", k, "subspace dimension")->required();
  intersect->add_option("--n", n, "ambient projective dimension")->required();
  intersect->add_option("classes", classes, "products by ';', parts by ',', e.g. \"2,1;3\"")->required();
  add_format(intersect);

  auto* chi = app.add_subcommand("chi", "chi(E(twist)) on G(1,4) for Chern data (e,a,b)");
  chi->add_option("--e", e)->required();
  chi->add_option("--a", a)->required();
  chi->add_option("--b", b)->required();
  chi->add_option("--twist", tw)->required();
  add_format(chi);

  auto* chip3 = app.add_subcommand("chi-p3", "chi on P^3 of rank-two data (c1=e, c2=a) twisted");
  chip3->add_option("--e", e)->required();
  chip3->add_option("--a", a)->required();
  chip3->add_option("--twist", tw)->required();
  add_format(chip3);

  auto* filter = app.add_subcommand("filter", "Step 1 candidate table with verdicts");
  add_format(filter);
  auto* replay = app.add_subcommand("replay", "full classification replay");
  add_format(replay);

  auto* split = app.add_subcommand("splitting-types", "splitting types allowed on a line");
  split->add_option("--e", e)->required();
  split->add_option("--n", n)->required();
  add_format(split);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << app.get_name() << ": " << ex.what() << "\n";
    return kUsage;
  }

  if (*intersect) return cmd_intersect(k, n, classes, fmt, out, err);
  if (*chi) {
    const RingPtr g = GrassmannRing::make(1, 4);
    const Rational v = euler_characteristic(g, twist(rank_two_chern(g, {e, a, b}), tw));
    write_scalar(out, fmt, {{"e", e}, {"a", a}, {"b", b}, {"twist", tw}}, v);
    return kOk;
  }
  if (*chip3) {
    write_scalar(out, fmt, {{"e", e}, {"a", a}, {"twist", tw}}, chi_p3(e, a, tw));
    return kOk;
  }
  if (*filter) return cmd_filter(fmt, out, err);
  if (*replay) return cmd_replay(fmt, out, err);
  if (*split) return cmd_splitting_types(e, n, fmt, out, err);
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"schubert-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace schubert::cli

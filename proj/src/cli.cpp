#include "nsg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "nsg/classify.hpp"
#include "nsg/dilatation.hpp"
#include "nsg/ideals.hpp"
#include "nsg/presentation.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"

namespace nsg::cli {

namespace {

// Insertion-ordered so that structured output is byte-stable.
using Json = nlohmann::ordered_json;

std::string braces(std::span<Int const> values) { return "{" + format_list(values) + "}"; }

Json set_json(CofiniteSet const& set) {
  return Json{{"sporadic", set.sporadic()}, {"conductor", set.conductor()}};
}

Json semigroup_json(NumericalSemigroup const& s) {
  return Json{{"generators", s.minimal_generators()}, {"gaps", s.gaps()}};
}

Json invariants_json(InvariantRecord const& r) {
  return Json{{"frobenius", r.frobenius},
              {"genus", r.genus},
              {"multiplicity", r.multiplicity},
              {"sporadic_count", r.sporadic_count},
              {"type", r.type},
              {"embedding_dimension", r.embedding_dimension},
              {"reduction_number", r.reduction_number}};
}

std::string invariants_text(InvariantRecord const& r) {
  std::ostringstream os;
  os << "F=" << r.frobenius << " g=" << r.genus << " e=" << r.multiplicity
     << " n=" << r.sporadic_count << " t=" << r.type << " ν=" << r.embedding_dimension
     << " r=" << r.reduction_number;
  return os.str();
}

char const* yes_no(bool b) { return b ? "yes" : "no"; }

// Result of one subcommand: the structured payload plus its table rendering.
struct Output {
  std::optional<NumericalSemigroup> input;
  Json result = Json::object();
  std::ostringstream text;
  int code = kOk;
};

void emit(Output const& o, bool json, std::ostream& out) {
  if (json) {
    Json doc;
    doc["semigroup"] = o.input ? semigroup_json(*o.input) : Json(nullptr);
    doc["result"] = o.result;
    out << doc.dump(2) << '\n';
  } else {
    out << o.text.str();
  }
}

void cmd_info(NumericalSemigroup const& s, Output& o) {
  auto const inv = invariants(s);
  auto const pf = pseudo_frobenius(s);
  o.result = invariants_json(inv);
  o.result["members"] = set_json(s.as_set());
  o.result["pseudo_frobenius"] = pf;
  o.text << "semigroup " << to_string(s) << '\n'
         << "members " << s.as_set() << '\n'
         << "gaps " << braces(s.gaps()) << '\n'
         << invariants_text(inv) << '\n'
         << "pseudo-Frobenius " << braces(pf) << '\n';
}

void cmd_apery(NumericalSemigroup const& s, std::optional<Int> modulus, Output& o) {
  Int const m = modulus.value_or(s.multiplicity());
  auto const ap = apery_set(s, m);
  o.result = Json{{"modulus", m}, {"apery", ap}};
  o.text << "Ap(S," << m << ") = " << braces(ap) << '\n';
}

void cmd_dilate(NumericalSemigroup const& s, Int a, std::string const& show, Output& o) {
  auto const t = dilate(s, a);
  o.result["shift"] = a;
  o.result["dilatation"] = semigroup_json(t);
  o.result["members"] = set_json(t.as_set());
  if (show.empty()) {
    o.text << "T = S + " << a << " = " << to_string(t) << '\n'
           << "members " << t.as_set() << '\n'
           << "generators " << braces(t.minimal_generators()) << '\n';
  } else if (show == "generators") {
    o.result["generators"] = t.minimal_generators();
    o.text << "generators " << braces(t.minimal_generators()) << '\n';
  } else if (show == "apery") {
    auto const ap = apery_set(t, t.multiplicity());
    o.result["apery"] = Json{{"modulus", t.multiplicity()}, {"apery", ap}};
    o.text << "Ap(T," << t.multiplicity() << ") = " << braces(ap) << '\n';
  } else {
    auto const is = invariants(s);
    auto const it = invariants(t);
    auto const report = transfer_report(s, a);
    o.result["invariants"] = Json{{"base", invariants_json(is)},
                                  {"dilatation", invariants_json(it)},
                                  {"transfer_passed", report.passed()}};
    o.text << "S: " << invariants_text(is) << '\n'
           << "T: " << invariants_text(it) << '\n'
           << "transfer " << (report.passed() ? "pass" : "FAIL") << '\n';
  }
}

void cmd_contract(NumericalSemigroup const& t, std::optional<Int> a, Output& o) {
  if (a) {
    auto const s = contract(t, *a);
    o.result = Json{{"shift", *a}, {"contraction", semigroup_json(s)}};
    o.text << "T - " << *a << " = " << to_string(s) << '\n';
    return;
  }
  Json candidates = Json::array();
  auto const shifts = contraction_candidates(t);
  for (Int c : shifts) {
    auto const s = contract(t, c);
    candidates.push_back(Json{{"shift", c}, {"contraction", semigroup_json(s)}});
    o.text << "a=" << c << " " << to_string(s) << '\n';
  }
  if (shifts.empty()) o.text << "not a dilatation of any semigroup\n";
  o.result = Json{{"candidates", candidates}};
}

void cmd_domain(NumericalSemigroup const& s, Output& o) {
  auto const domain = dilatation_domain(s);
  auto const outside = set_minus(domain, s.as_set());
  std::vector<Int> extra;
  for (Int x : outside) {
    if (x >= 0) extra.push_back(x);
  }
  o.result = Json{{"domain", set_json(domain)}, {"nonnegative_non_members", extra}};
  o.text << "M-2M = " << domain << '\n'
         << "admissible shifts outside S " << braces(extra) << '\n';
}

void cmd_classify(NumericalSemigroup const& s, Output& o) {
  auto const c = classify(s);
  o.result = Json{{"symmetric", c.symmetric},
                  {"almost_symmetric", c.almost_symmetric},
                  {"two_agl", c.two_agl},
                  {"nearly_gorenstein", c.nearly_gorenstein},
                  {"med", c.med},
                  {"arf", c.arf},
                  {"wilf", c.wilf}};
  o.result["canonical_ideal"] = set_json(canonical_ideal(s));
  o.result["trace_ideal"] = set_json(trace_ideal(s));
  o.text << "symmetric          " << yes_no(c.symmetric) << '\n'
         << "almost symmetric   " << yes_no(c.almost_symmetric) << '\n'
         << "2-AGL              " << yes_no(c.two_agl) << '\n'
         << "nearly Gorenstein  " << yes_no(c.nearly_gorenstein) << '\n'
         << "MED                " << yes_no(c.med) << '\n'
         << "Arf                " << yes_no(c.arf) << '\n'
         << "Wilf               " << yes_no(c.wilf) << '\n'
         << "canonical ideal    " << canonical_ideal(s) << '\n'
         << "trace ideal        " << trace_ideal(s) << '\n';
}

void cmd_presentation(NumericalSemigroup const& s, Output& o) {
  auto const p = betti_contributions(s);
  Json betti = Json::array();
  o.text << "mu=" << p.mu << '\n';
  for (auto const& [degree, count] : p.betti_contributions) {
    betti.push_back(Json{{"degree", degree}, {"relations", count}});
    o.text << "degree " << degree << ": " << count << '\n';
  }
  o.result = Json{{"mu", p.mu}, {"betti", betti}};
}

void cmd_verify(std::string const& kind, int max_genus, Int max_a, Output& o) {
  VerificationSummary summary;
  if (kind == "section2") {
    summary = verify_dilatation_family(max_genus, max_a);
  } else if (kind == "section3") {
    summary = verify_canonical_family(max_genus, max_a);
  } else {
    summary = verify_classification_family(max_genus);
  }
  o.result = Json{{"kind", kind},
                  {"max_genus", max_genus},
                  {"max_a", max_a},
                  {"semigroups", summary.semigroups},
                  {"pairs", summary.pairs},
                  {"checks", summary.checks},
                  {"violations", summary.violations}};
  o.text << "semigroups=" << summary.semigroups << " pairs=" << summary.pairs
         << " checks=" << summary.checks << '\n';
  for (auto const& v : summary.violations) o.text << "VIOLATION " << v << '\n';
  o.text << summary.violations.size() << " violations\n";
  if (!summary.ok()) o.code = kViolation;
}

void cmd_scan(int max_genus, Int max_a, std::string const& log_path, Output& o,
              std::ostream& err) {
  auto const records = scan_presentations(max_genus, max_a);
  std::ofstream log;
  if (!log_path.empty()) {
    log.open(log_path);
    if (!log) {
      err << "error: cannot open log file " << log_path << '\n';
      o.code = kInputError;
      return;
    }
  }
  Json rows = Json::array();
  Int nonzero = 0;
  for (auto const& rec : records) {
    auto const line = to_log_line(rec);
    o.text << line << '\n';
    if (log) log << line << '\n';
    if (rec.gap != 0) ++nonzero;
    rows.push_back(Json{{"gens", rec.generators},
                        {"a", rec.shift},
                        {"mu_S", rec.mu_base},
                        {"mu_T", rec.mu_dilatation},
                        {"gap", rec.gap}});
  }
  o.result = Json{{"records", rows}, {"pairs", records.size()}, {"nonzero_gaps", nonzero}};
}

void cmd_enumerate(int genus, Output& o) {
  auto const levels = enumerate_by_genus(genus);
  Json list = Json::array();
  for (auto const& s : levels.back()) {
    list.push_back(semigroup_json(s));
    o.text << format_list(s.minimal_generators()) << '\n';
  }
  o.result = Json{{"genus", genus}, {"count", levels.back().size()}, {"semigroups", list}};
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, dilatations and Gorenstein-adjacent classes", "nsg"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "Structured output");

  std::string literal;
  std::optional<Int> modulus;
  std::optional<Int> shift;
  Int required_shift = 0;
  std::string show;
  std::string kind;
  int max_genus = 8;
  Int max_a = 6;
  std::string log_path;
  int genus = 1;

  auto add_literal = [&](CLI::App* sub) {
    sub->add_option("semigroup", literal, "generators \"4,7,9\" or \"gaps:1,2,4,7\"")
        ->required();
  };

  auto* info = app.add_subcommand("info", "Invariants of S");
  add_literal(info);
  auto* apery = app.add_subcommand("apery", "Apéry set of S");
  add_literal(apery);
  apery->add_option("--mod", modulus, "Modulus (default: multiplicity)");
  auto* dil = app.add_subcommand("dilate", "The dilatation S + a");
  add_literal(dil);
  dil->add_option("--a", required_shift, "Shift")->required();
  dil->add_option("--show", show, "Section to show")
      ->check(CLI::IsMember({"generators", "apery", "invariants"}));
  auto* con = app.add_subcommand("contract", "Semigroups S with S + a = T");
  add_literal(con);
  con->add_option("--a", shift, "Shift (default: try all)");
  auto* dom = app.add_subcommand("domain", "Admissible shifts M - 2M");
  add_literal(dom);
  auto* cls = app.add_subcommand("classify", "Symmetry-type classification");
  add_literal(cls);
  auto* pres = app.add_subcommand("presentation", "Minimal presentation size");
  add_literal(pres);
  auto* ver = app.add_subcommand("verify", "Exhaustive identity checks");
  ver->add_option("kind", kind)->required()->check(
      CLI::IsMember({"section2", "section3", "disjointness"}));
  ver->add_option("--max-genus", max_genus)->check(CLI::Range(1, 30));
  ver->add_option("--max-a", max_a)->check(CLI::NonNegativeNumber);
  auto* scan = app.add_subcommand("scan", "Presentation-size scan over dilatations");
  scan->add_option("kind", kind)->required()->check(CLI::IsMember({"q28"}));
  scan->add_option("--max-genus", max_genus)->check(CLI::Range(1, 30));
  scan->add_option("--max-a", max_a)->check(CLI::NonNegativeNumber);
  scan->add_option("--log", log_path, "Also write records to this file");
  auto* enu = app.add_subcommand("enumerate", "All semigroups of a genus");
  enu->add_option("--genus", genus)->required()->check(CLI::Range(1, 30));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Output o;
  try {
    auto parsed_input = [&] {
      o.input = parse_semigroup(literal);
      return *o.input;
    };
    if (info->parsed()) {
      cmd_info(parsed_input(), o);
    } else if (apery->parsed()) {
      cmd_apery(parsed_input(), modulus, o);
    } else if (dil->parsed()) {
      cmd_dilate(parsed_input(), required_shift, show, o);
    } else if (con->parsed()) {
      cmd_contract(parsed_input(), shift, o);
    } else if (dom->parsed()) {
      cmd_domain(parsed_input(), o);
    } else if (cls->parsed()) {
      cmd_classify(parsed_input(), o);
    } else if (pres->parsed()) {
      cmd_presentation(parsed_input(), o);
    } else if (ver->parsed()) {
      cmd_verify(kind, max_genus, max_a, o);
    } else if (scan->parsed()) {
      cmd_scan(max_genus, max_a, log_path, o, err);
      if (o.code != kOk) return o.code;
    } else if (enu->parsed()) {
      cmd_enumerate(genus, o);
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (std::logic_error const& e) {
    // An internal cross-check found two routes disagreeing.
    err << "inconsistency: " << e.what() << '\n';
    return kViolation;
  }
  emit(o, json, out);
  return o.code;
}

}  // namespace nsg::cli

// oeg: command-line front end for the catalog, solvers and verifier.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oeg/catalog/catalog.hpp"
#include "oeg/catalog/theorems.hpp"
#include "oeg/dunbar/solver.hpp"
#include "oeg/fpgroup/abelian.hpp"
#include "oeg/fpgroup/coset_enumeration.hpp"
#include "oeg/fpgroup/presentation.hpp"
#include "oeg/orbifold/graph.hpp"
#include "oeg/orbifold/riemann_hurwitz.hpp"
#include "oeg/verify/verify.hpp"

#ifndef OEG_DEFAULT_DATA_DIR
#define OEG_DEFAULT_DATA_DIR "data"
#endif

namespace fp = oeg::fp;

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Human lines and their structured mirror; one of the two gets printed.
struct Output {
  bool as_json = false;
  std::vector<std::string> text;
  json doc = json::object();

  void line(const std::string& s) { text.push_back(s); }
  void flush() const {
    if (as_json) {
      std::cout << doc.dump(2) << '\n';
    } else {
      for (const auto& s : text) std::cout << s << '\n';
    }
  }
};

std::string data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("OEG_DATA_DIR"); env && *env) return env;
  return OEG_DEFAULT_DATA_DIR;
}

fp::EnumerationLimits limits(std::optional<std::uint64_t> max_cosets, const std::string& strategy) {
  auto l = fp::EnumerationLimits::from_environment();
  if (max_cosets) l.max_live_cosets = *max_cosets;
  l.strategy = strategy == "felsch" ? fp::Strategy::felsch : fp::Strategy::hlt;
  return l;
}

json invariants_json(const std::vector<long long>& v) { return json(v); }

std::string join_ints(const std::vector<long long>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return "[" + s + "]";
}

int cmd_oe(Output& out, long long g, bool unknotted, bool knotted, const std::string& dir) {
  const auto catalog = oeg::cat::load_catalog(dir + "/catalog.txt");
  const auto rec = oeg::cat::derive_genus_record(g, catalog);
  std::string name = "OE";
  long long value = rec.oe;
  bool (*keep)(oeg::cat::Knotting) = nullptr;
  if (unknotted) {
    name = "OE^u";
    value = rec.oe_u;
    keep = oeg::cat::realizes_unknotted;
  } else if (knotted) {
    name = "OE^k";
    value = rec.oe_k;
    keep = oeg::cat::realizes_knotted;
  }
  out.line(name + "_" + std::to_string(g) + " = " + std::to_string(value));
  out.doc["quantity"] = name;
  out.doc["g"] = g;
  out.doc["value"] = value;
  out.doc["oe"] = rec.oe;
  out.doc["oe_u"] = rec.oe_u;
  out.doc["oe_k"] = rec.oe_k;
  if (!unknotted && !knotted) {
    out.line("  row " + oeg::cat::oe_row(g));
    out.doc["row"] = oeg::cat::oe_row(g);
  }
  out.line("  OE_g = " + std::to_string(rec.oe) + ", OE^u_g = " + std::to_string(rec.oe_u) +
           ", OE^k_g = " + std::to_string(rec.oe_k));
  json reals = json::array();
  for (const auto& r : rec.realizations) {
    if (r.order != value || (keep && !keep(r.knotting))) continue;
    std::string t = r.type ? r.type->to_string() : "-";
    if (r.type33 != oeg::cat::Type33::none) t += " " + std::string(oeg::cat::to_string(r.type33));
    out.line("  realization |G|=" + std::to_string(r.order) + " type=" + t + " knotting=" +
             std::string(oeg::cat::to_string(r.knotting)) + " source=" + r.source);
    reals.push_back({{"order", r.order},
                     {"type", t},
                     {"knotting", oeg::cat::to_string(r.knotting)},
                     {"source", r.source}});
  }
  out.doc["realizations"] = reals;
  return 0;
}

int cmd_order(Output& out, const std::string& file, const fp::EnumerationLimits& lim) {
  const auto p = fp::load_presentation(file);
  const auto res = fp::coset_enumerate(p, {}, lim);
  out.doc["file"] = file;
  out.doc["cosets_defined"] = res.cosets_defined;
  out.doc["max_live"] = res.cosets_max_live;
  if (!res.completed()) {
    out.line("order undecided: coset limit " + std::to_string(lim.max_live_cosets) + " exceeded");
    out.doc["status"] = "limit-exceeded";
    return kExitFailure;
  }
  out.line("order = " + std::to_string(*res.index));
  out.line("  cosets_defined " + std::to_string(res.cosets_defined) + ", max_live " +
           std::to_string(res.cosets_max_live));
  const auto inv = fp::abelian_invariants(p);
  out.line("  abelian invariants " + join_ints(inv));
  out.doc["status"] = "completed";
  out.doc["order"] = *res.index;
  out.doc["abelian_invariants"] = invariants_json(inv);
  return 0;
}

int cmd_index(Output& out, const std::string& file, const std::string& sub, const fp::EnumerationLimits& lim) {
  const auto p = fp::load_presentation(file);
  const auto* s = p.find_subgroup(sub);
  if (!s) {
    std::cerr << "oeg: " << file << " has no subgroup '" << sub << "'\n";
    return kExitUsage;
  }
  const auto res = fp::coset_enumerate(p, s->generators, lim);
  out.doc["file"] = file;
  out.doc["subgroup"] = sub;
  out.doc["cosets_defined"] = res.cosets_defined;
  out.doc["max_live"] = res.cosets_max_live;
  if (!res.completed()) {
    out.line("index undecided: coset limit " + std::to_string(lim.max_live_cosets) + " exceeded");
    out.doc["status"] = "limit-exceeded";
    return kExitFailure;
  }
  out.line("index = " + std::to_string(*res.index));
  out.doc["status"] = "completed";
  out.doc["index"] = *res.index;
  return 0;
}

int cmd_dunbar(Output& out, const std::string& family, int case_no, std::optional<long long> bound) {
  const auto f = oeg::dunbar::parse_family(family);
  oeg::dunbar::Bounds b;
  if (bound) b = {*bound, *bound, *bound};
  const auto sf = oeg::dunbar::solve_family(f, case_no, b);
  const auto orbits = oeg::dunbar::normalize_solutions(f, sf.solutions);
  out.line("family " + oeg::dunbar::family_name(f) + " case " + std::to_string(case_no) + " bound " +
           std::to_string(b.max_n));
  out.doc["family"] = oeg::dunbar::family_name(f);
  out.doc["case"] = case_no;
  out.doc["bound"] = b.max_n;
  out.line("solutions " + std::to_string(sf.solutions.size()));
  json sols = json::array();
  for (const auto& s : sf.solutions) {
    out.line("  " + oeg::dunbar::format_solution(s));
    sols.push_back(s);
  }
  out.doc["solutions"] = sols;
  out.line("orbits " + std::to_string(orbits.size()));
  json orbs = json::array();
  for (const auto& o : orbits) {
    out.line("  " + oeg::dunbar::format_solution(o.representative) + " size " + std::to_string(o.members.size()));
    orbs.push_back({{"representative", o.representative}, {"size", o.members.size()}});
  }
  out.doc["orbits"] = orbs;
  if (!sf.patterns.empty()) {
    out.line(std::string("patterns ") + std::to_string(sf.patterns.size()) +
             (sf.patterns_match ? " match" : " DO NOT match"));
    json pats = json::array();
    for (const auto& p : sf.patterns) {
      out.line("  " + p.text());
      pats.push_back(p.text());
    }
    out.doc["patterns"] = pats;
    out.doc["patterns_match"] = sf.patterns_match;
  }
  for (const auto& u : sf.unwitnessed) out.line("  bound too small to witness: " + u);
  for (const auto& t : sf.truncated) out.line("  cut short by the bound: " + t);
  out.doc["unwitnessed"] = sf.unwitnessed;
  out.doc["truncated"] = sf.truncated;
  return sf.patterns_match ? 0 : kExitFailure;
}

int cmd_genus(Output& out, long long order, const std::string& type) {
  const auto t = oeg::orb::SingularType::parse(type);
  const auto r = oeg::orb::quotient_genus(order, t.quotient());
  out.doc["order"] = order;
  out.doc["type"] = t.to_string();
  out.doc["value"] = oeg::orb::to_string(r.value);
  if (!r.realizable()) {
    out.line("not realizable: 1 - |G| chi / 2 = " + oeg::orb::to_string(r.value));
    out.doc["genus"] = nullptr;
    return kExitFailure;
  }
  out.line(std::to_string(*r.genus));
  out.doc["genus"] = *r.genus;
  return 0;
}

int cmd_wirtinger(Output& out, const std::string& file, bool with_order, const fp::EnumerationLimits& lim) {
  const auto g = oeg::orb::load_graph(file);
  const auto p = oeg::orb::wirtinger_presentation(g);
  const std::string text = p.to_text();
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      out.line(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) out.line(line);
  out.doc["generators"] = p.generators();
  json rels = json::array();
  for (const auto& r : p.relators()) rels.push_back(p.format(r));
  out.doc["relators"] = rels;
  if (with_order) {
    const auto res = fp::coset_enumerate(p, {}, lim);
    if (!res.completed()) {
      out.line("# order undecided: coset limit exceeded");
      out.doc["order"] = nullptr;
      return kExitFailure;
    }
    out.line("# order " + std::to_string(*res.index));
    out.doc["order"] = *res.index;
  }
  return 0;
}

int cmd_verify(Output& out, oeg::verify::Options opt, const std::string& report_file, bool timings) {
  const auto report = oeg::verify::run_all(opt);
  const std::string text = report.render(timings);
  if (!report_file.empty()) {
    std::ofstream f(report_file);
    if (!f) {
      std::cerr << "oeg: cannot write " << report_file << '\n';
      return kExitFailure;
    }
    f << text;
  }
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      out.line(line);
      line.clear();
    } else {
      line += c;
    }
  }
  json checks = json::array();
  for (const auto& l : report.lines) {
    json j = {{"group", l.group},
              {"id", l.id},
              {"status", l.status == oeg::verify::Status::pass   ? "PASS"
                         : l.status == oeg::verify::Status::fail ? "FAIL"
                                                                 : "CITED"},
              {"detail", l.detail}};
    if (timings) j["time_ms"] = l.time_ms;
    checks.push_back(j);
  }
  out.doc["checks"] = checks;
  out.doc["result"] = report.pass() ? "PASS" : "FAIL";
  out.doc["failed"] = report.failures();
  return report.pass() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extendable group actions on surfaces in the 3-sphere: enumeration, tables and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string data_flag;
  std::optional<std::uint64_t> max_cosets;
  std::string strategy = "hlt";
  app.add_flag("--json", as_json, "Structured output mirroring the text lines");
  app.add_option("--data", data_flag, "Fixture directory (default: $OEG_DATA_DIR or the build-time path)");
  app.add_option("--max-cosets", max_cosets, "Live coset cap (default: $OEG_MAX_COSETS or 1000000)");
  app.add_option("--strategy", strategy, "Coset enumeration strategy")->check(CLI::IsMember({"hlt", "felsch"}));

  long long g = 0;
  bool unknotted = false, knotted = false;
  auto* oe = app.add_subcommand("oe", "Maximal extendable orders at genus g");
  oe->add_option("g", g, "Genus")->required()->check(CLI::Range(2LL, 1LL << 40));
  auto* fu = oe->add_flag("--unknotted", unknotted, "Unknotted embeddings only");
  oe->add_flag("--knotted", knotted, "Knotted embeddings only")->excludes(fu);

  std::string file;
  auto* order = app.add_subcommand("order", "Group order of a presentation file");
  order->add_option("file", file, "Presentation")->required();

  std::string sub;
  auto* index = app.add_subcommand("index", "Index of a named subgroup");
  index->add_option("file", file, "Presentation")->required();
  index->add_option("--sub", sub, "Subgroup name from a `sub <name>:` line")->required();

  std::string family;
  int case_no = 1;
  std::optional<long long> bound;
  auto* dun = app.add_subcommand("dunbar", "Solve a Montesinos parameter family");
  dun->add_option("family", family, "2,3,3 | 2,3,4 | 2,3,5 | 2,2,n | n,n,1")->required();
  dun->add_option("--case", case_no, "Constraint case")->check(CLI::IsMember({1, 2}));
  dun->add_option("--bound", bound, "Bound on n, m and d (default 200)")->check(CLI::PositiveNumber);

  long long gorder = 0;
  std::string type;
  auto* genus = app.add_subcommand("genus", "Riemann-Hurwitz genus for a group order and singular type");
  genus->add_option("--order", gorder, "|G|")->required()->check(CLI::PositiveNumber);
  genus->add_option("--type", type, "q1,q2,q3,q4")->required();

  bool with_order = false;
  auto* wir = app.add_subcommand("wirtinger", "Presentation of a labelled diagram");
  wir->add_option("file", file, "Diagram")->required();
  wir->add_flag("--order", with_order, "Also enumerate the group order");

  long long gmax = 2000;
  std::string report_file;
  unsigned workers = 0;
  bool no_timings = false, dedupe = false;
  std::vector<std::string> lemma_groups;
  auto* ver = app.add_subcommand("verify", "Run the full verification suite");
  ver->add_option("--gmax", gmax, "Largest genus for the theorem checks")->check(CLI::Range(2LL, 1000000LL));
  ver->add_option("--report", report_file, "Also write the report here");
  ver->add_option("--workers", workers, "Worker threads (0 = hardware)");
  ver->add_flag("--no-timings", no_timings, "Omit time_ms for byte-stable reports");
  ver->add_flag("--dedupe", dedupe, "Conjugacy dedupe in the pair sweep");
  ver->add_option("--lemma-groups", lemma_groups, "Subset of A4 S4 A5")->check(CLI::IsMember({"A4", "S4", "A5"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.as_json = as_json;
  const std::string dir = data_dir(data_flag);
  const auto lim = limits(max_cosets, strategy);
  int rc = 0;
  try {
    if (*oe) {
      rc = cmd_oe(out, g, unknotted, knotted, dir);
    } else if (*order) {
      rc = cmd_order(out, file, lim);
    } else if (*index) {
      rc = cmd_index(out, file, sub, lim);
    } else if (*dun) {
      rc = cmd_dunbar(out, family, case_no, bound);
    } else if (*genus) {
      rc = cmd_genus(out, gorder, type);
    } else if (*wir) {
      rc = cmd_wirtinger(out, file, with_order, lim);
    } else if (*ver) {
      oeg::verify::Options opt;
      opt.data_dir = dir;
      opt.g_max = gmax;
      opt.workers = workers;
      opt.limits = lim;
      opt.lemma_dedupe = dedupe;
      if (!lemma_groups.empty()) {
        opt.lemma_groups.clear();
        for (const auto& s : lemma_groups) opt.lemma_groups.push_back(oeg::perm::parse_small_group(s));
      }
      rc = cmd_verify(out, opt, report_file, !no_timings);
    }
  } catch (const fp::ParseError& e) {
    std::cerr << "oeg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "oeg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "oeg: " << e.what() << '\n';
    return kExitFailure;
  }
  out.flush();
  return rc;
}

#include "oeg/dunbar/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace oeg::dunbar {

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::f233:
      return "2,3,3";
    case FamilyId::f234:
      return "2,3,4";
    case FamilyId::f235:
      return "2,3,5";
    case FamilyId::f22n:
      return "2,2,n";
    case FamilyId::fnn1:
      return "n,n,1";
  }
  return "?";
}

FamilyId parse_family(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  for (FamilyId f : kAllFamilies) {
    std::string name = family_name(f);
    name.erase(std::remove(name.begin(), name.end(), ','), name.end());
    if (name == key) {
      return f;
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(text) +
                              "' (want 2,3,3, 2,3,4, 2,3,5, 2,2,n or n,n,1)");
}

std::size_t solution_width(FamilyId f) { return f == FamilyId::f22n ? 5 : 4; }

namespace {

bool parametric(FamilyId f) { return f == FamilyId::f22n || f == FamilyId::fnn1; }

std::array<long long, 3> fixed_n(FamilyId f) {
  switch (f) {
    case FamilyId::f233:
      return {2, 3, 3};
    case FamilyId::f234:
      return {2, 3, 4};
    default:
      return {2, 3, 5};
  }
}

}  // namespace

MontesinosParams params_of(FamilyId f, const Solution& s) {
  if (s.size() != solution_width(f)) {
    throw std::invalid_argument("family " + family_name(f) + " takes " + std::to_string(solution_width(f)) +
                                "-tuples, got " + format_solution(s));
  }
  MontesinosParams p;
  p.k = s[0];
  switch (f) {
    case FamilyId::f22n:
      p.m = {s[1], s[2], s[3]};
      p.n = {2, 2, s[4]};
      break;
    case FamilyId::fnn1:
      p.m = {s[1], s[2], 0};
      p.n = {s[3], s[3], 1};
      break;
    default:
      p.m = {s[1], s[2], s[3]};
      p.n = fixed_n(f);
      break;
  }
  return p;
}

std::string format_solution(const Solution& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(s[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- patterns

SolutionPattern SolutionPattern::parse(std::string_view text) {
  SolutionPattern p;
  p.text_ = std::string(text);
  std::string_view tuple = text;
  std::string_view domain;
  if (auto bar = text.find('|'); bar != std::string_view::npos) {
    tuple = text.substr(0, bar);
    domain = text.substr(bar + 1);
  }
  std::size_t start = 0;
  int depth = 0;
  auto add_entry = [&](std::string_view piece) {
    std::string s(piece);
    s.erase(0, s.find_first_not_of(" \t"));
    Entry e;
    if (s.rfind("+-", 0) == 0 || s.rfind("±", 0) == 0) {
      e.sign = 1;
      s.erase(0, s[0] == '+' ? 2 : std::string("±").size());
    } else if (s.rfind("-+", 0) == 0 || s.rfind("∓", 0) == 0) {
      e.sign = -1;
      s.erase(0, s[0] == '-' ? 2 : std::string("∓").size());
    }
    e.expr = util::Expression::parse(s);
    p.entries_.push_back(std::move(e));
  };
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] == '(') {
      ++depth;
    } else if (tuple[i] == ')') {
      --depth;
    } else if (tuple[i] == ',' && depth == 0) {
      add_entry(tuple.substr(start, i - start));
      start = i + 1;
    }
  }
  add_entry(tuple.substr(start));

  std::istringstream in{std::string(domain)};
  for (std::string tok; in >> tok;) {
    if (tok.back() == ',') {
      tok.pop_back();
    }
    const auto ge = tok.find(">=");
    const auto gt = tok.find('>');
    if (ge != std::string::npos) {
      p.lower_.emplace_back(tok.substr(0, ge), std::stoll(tok.substr(ge + 2)));
    } else if (gt != std::string::npos) {
      p.lower_.emplace_back(tok.substr(0, gt), std::stoll(tok.substr(gt + 1)) + 1);
    } else {
      throw util::ExpressionError("bad parameter bound '" + tok + "' in pattern '" + p.text_ + "'");
    }
  }
  std::set<std::string> used;
  for (const Entry& e : p.entries_) {
    for (const auto& v : e.expr.variables()) {
      used.insert(v);
    }
  }
  for (const auto& v : used) {
    if (std::none_of(p.lower_.begin(), p.lower_.end(), [&](const auto& b) { return b.first == v; })) {
      throw util::ExpressionError("parameter '" + v + "' has no lower bound in pattern '" + p.text_ + "'");
    }
  }
  return p;
}

std::string SolutionPattern::canonical() const {
  std::string out;
  for (const Entry& e : entries_) {
    std::string t = e.expr.text();
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    out += (out.empty() ? "" : ",") + std::string(e.sign > 0 ? "+-" : e.sign < 0 ? "-+" : "") + t;
  }
  out += " |";
  auto sorted = lower_;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [v, lo] : sorted) {
    out += " " + v + ">=" + std::to_string(lo);
  }
  return out;
}

std::vector<Solution> SolutionPattern::instantiate(FamilyId f, const Bounds& b) const {
  std::vector<Solution> out;
  util::Bindings vars;
  const bool signed_pattern =
      std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.sign != 0; });
  std::vector<std::pair<std::string, long long>> params;
  std::set<std::string> used;
  for (const Entry& e : entries_) {
    for (const auto& v : e.expr.variables()) {
      used.insert(v);
    }
  }
  for (const auto& [v, lo] : lower_) {
    if (used.count(v)) {
      params.emplace_back(v, lo);
    }
  }
  auto upper = [&](const std::string& v) { return v == "m" ? b.max_m : b.max_d; };

  auto emit = [&] {
    for (int s : signed_pattern ? std::vector<int>{1, -1} : std::vector<int>{1}) {
      Solution sol;
      for (const Entry& e : entries_) {
        const long long v = e.expr.evaluate(vars);
        sol.push_back(e.sign == 0 ? v : e.sign * s * v);
      }
      if (parametric(f) && sol.back() > b.max_n) {
        continue;
      }
      out.push_back(std::move(sol));
    }
  };
  // Odometer over the parameters.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == params.size()) {
      emit();
      return;
    }
    const auto& [v, lo] = params[i];
    for (long long x = lo; x <= upper(v); ++x) {
      vars[v] = x;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SolutionPattern::truncated(FamilyId f, const Bounds& b) const {
  Bounds wider = b;
  ++wider.max_m;
  ++wider.max_d;
  return instantiate(f, wider).size() != instantiate(f, b).size();
}

std::vector<SolutionPattern> builtin_patterns(FamilyId f, int case_no) {
  std::vector<const char*> texts;
  if (case_no == 1 && f == FamilyId::f22n) {
    texts = {
        "0, +-1, 0, -+m d, (1+2m)d | m>=0 d>=3",
        "+-1, -+1, 0, -+m d, (1+2m)d | m>=0 d>=3",
        "0, 0, +-1, -+m d, (1+2m)d | m>=0 d>=3",
        "+-1, 0, -+1, -+m d, (1+2m)d | m>=0 d>=3",
    };
  } else if (case_no == 1 && f == FamilyId::fnn1) {
    texts = {
        "0, +-2, 0, 2n' | n'>=2",
        "0, +-2m, -+(1+2m), 2(1+2m) | m>=1",
        "0, +-3, -+4, 12",
        "0, +-6, -+5, 15",
        "+-1, -+2, 0, 4",
        "+-1, -+2m, -+(1+2m), 2(1+2m) | m>=1",
        "0, 0, +-2, 2n' | n'>=2",
        "0, -+(1+2m), +-2m, 2(1+2m) | m>=1",
        "0, +-4, -+3, 12",
        "0, +-5, -+6, 15",
        "+-1, 0, -+2, 4",
        "+-1, -+(1+2m), -+2m, 2(1+2m) | m>=1",
    };
  }
  std::vector<SolutionPattern> out;
  for (const char* t : texts) {
    out.push_back(SolutionPattern::parse(t));
  }
  return out;
}

// ------------------------------------------------------------------ solver

namespace {

void consider(FamilyId f, int case_no, Solution s, std::vector<Solution>& out) {
  const MontesinosParams p = params_of(f, s);
  const long long det = determinant(p);
  if ((det == 1 || det == -1) && check_constraints(p, case_no).pass) {
    out.push_back(std::move(s));
  }
}

}  // namespace

SolutionFamily solve_family(FamilyId f, int case_no, const Bounds& bounds) {
  if (case_no != 1 && case_no != 2) {
    throw std::invalid_argument("case must be 1 or 2");
  }
  SolutionFamily fam;
  fam.family = f;
  fam.case_no = case_no;
  fam.bounds = bounds;

  for (long long k = -1; k <= 1; ++k) {
    switch (f) {
      case FamilyId::f22n:
        for (long long n = 2; n <= bounds.max_n; ++n) {
          for (long long m1 = -1; m1 <= 1; ++m1) {
            for (long long m2 = -1; m2 <= 1; ++m2) {
              for (long long m3 = -n / 2; m3 <= n / 2; ++m3) {
                consider(f, case_no, {k, m1, m2, m3, n}, fam.solutions);
              }
            }
          }
        }
        break;
      case FamilyId::fnn1:
        for (long long n = 2; n <= bounds.max_n; ++n) {
          for (long long m1 = -n / 2; m1 <= n / 2; ++m1) {
            for (long long m2 = -n / 2; m2 <= n / 2; ++m2) {
              consider(f, case_no, {k, m1, m2, n}, fam.solutions);
            }
          }
        }
        break;
      default: {
        const auto n = fixed_n(f);
        for (long long m1 = -n[0] / 2; m1 <= n[0] / 2; ++m1) {
          for (long long m2 = -n[1] / 2; m2 <= n[1] / 2; ++m2) {
            for (long long m3 = -n[2] / 2; m3 <= n[2] / 2; ++m3) {
              consider(f, case_no, {k, m1, m2, m3}, fam.solutions);
            }
          }
        }
      }
    }
  }
  std::sort(fam.solutions.begin(), fam.solutions.end());

  fam.patterns = builtin_patterns(f, case_no);
  if (!fam.patterns.empty()) {
    std::vector<Solution> expanded;
    for (const SolutionPattern& p : fam.patterns) {
      const std::vector<Solution> inst = p.instantiate(f, bounds);
      if (inst.empty()) {
        fam.unwitnessed.push_back(p.text());
      }
      if (p.truncated(f, bounds)) {
        fam.truncated.push_back(p.text());
      }
      expanded.insert(expanded.end(), inst.begin(), inst.end());
    }
    std::sort(expanded.begin(), expanded.end());
    expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
    std::set_difference(fam.solutions.begin(), fam.solutions.end(), expanded.begin(), expanded.end(),
                        std::back_inserter(fam.missing_from_patterns));
    std::set_difference(expanded.begin(), expanded.end(), fam.solutions.begin(), fam.solutions.end(),
                        std::back_inserter(fam.extra_in_patterns));
    fam.patterns_match = fam.missing_from_patterns.empty() && fam.extra_in_patterns.empty();
  }
  return fam;
}

std::vector<Orbit> normalize_solutions(FamilyId f, const std::vector<Solution>& solutions) {
  std::vector<Solution> sols = solutions;
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  std::map<Solution, std::size_t> index;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    index[sols[i]] = i;
  }
  // Coordinates carrying k, m1, m2, m3; n (if stored) stays put.
  const std::size_t signed_width = f == FamilyId::fnn1 ? 3 : 4;
  const bool swap = parametric(f);  // n1 = n2 exactly for these

  std::vector<std::size_t> parent(sols.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  auto unite = [&](std::size_t a, const Solution& image) {
    auto it = index.find(image);
    if (it != index.end()) {
      parent[find(a)] = find(it->second);
    }
  };
  for (std::size_t i = 0; i < sols.size(); ++i) {
    Solution flipped = sols[i];
    for (std::size_t j = 0; j < signed_width; ++j) {
      flipped[j] = -flipped[j];
    }
    unite(i, flipped);
    if (swap) {
      Solution swapped = sols[i];
      std::swap(swapped[1], swapped[2]);
      unite(i, swapped);
    }
  }
  std::map<std::size_t, Orbit> by_root;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    by_root[find(i)].members.push_back(sols[i]);
  }
  std::vector<Orbit> out;
  for (auto& [root, orbit] : by_root) {
    orbit.representative = orbit.members.front();  // members are sorted
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
  return out;
}

// ------------------------------------------------------------------ golden

std::vector<Solution> GoldenList::expand(const Bounds& b) const {
  std::vector<Solution> out = solutions;
  for (const SolutionPattern& p : patterns) {
    const auto inst = p.instantiate(family, b);
    out.insert(out.end(), inst.begin(), inst.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GoldenList parse_golden(std::string_view text) {
  GoldenList g;
  bool have_family = false;
  bool have_case = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("golden list line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) {
      continue;
    }
    if (head == "family") {
      std::string name;
      ls >> name;
      try {
        g.family = parse_family(name);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      have_family = true;
    } else if (head == "case") {
      if (!(ls >> g.case_no) || (g.case_no != 1 && g.case_no != 2)) {
        fail("case must be 1 or 2");
      }
      have_case = true;
    } else if (head == "pattern") {
      if (!have_family) {
        fail("pattern before family");
      }
      std::string rest;
      std::getline(ls, rest);
      try {
        g.patterns.push_back(SolutionPattern::parse(rest));
      } catch (const util::ExpressionError& e) {
        fail(e.what());
      }
    } else {
      if (!have_family) {
        fail("tuple before family");
      }
      Solution s;
      std::istringstream ts(line);
      std::string tok;
      while (ts >> tok) {
        try {
          std::size_t used = 0;
          s.push_back(std::stoll(tok, &used));
          if (used != tok.size()) {
            throw std::invalid_argument(tok);
          }
        } catch (const std::exception&) {
          fail("'" + tok + "' is not an integer");
        }
      }
      if (s.size() != solution_width(g.family)) {
        fail("expected " + std::to_string(solution_width(g.family)) + " entries");
      }
      g.solutions.push_back(std::move(s));
    }
  }
  if (!have_family || !have_case) {
    throw std::invalid_argument("golden list needs 'family' and 'case' headers");
  }
  std::sort(g.solutions.begin(), g.solutions.end());
  return g;
}

GoldenList load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open golden list '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_golden(ss.str());
}

}  // namespace oeg::dunbar

#include "oeg/catalog/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oeg::cat {

namespace {

// One row of a maximal-order table: either ratio * (g-1) or a constant,
// attached to a finite genus list or to the square genera.
struct LookupRow {
  const char* label;
  long long num;
  long long den;
  long long constant;
  std::vector<long long> genera;
  bool square = false;

  long long value(long long g) const {
    if (square) {
      const long long k = std::llround(std::sqrt(static_cast<double>(g)));
      return 4 * (k + 1) * (k + 1);
    }
    return constant ? constant : num * (g - 1) / den;
  }
};

const std::vector<long long> kExclusions = {3, 5, 7, 11, 19, 41};

std::optional<long long> exact_sqrt(long long g) {
  long long k = std::llround(std::sqrt(static_cast<double>(g)));
  while (k * k > g) --k;
  while ((k + 1) * (k + 1) <= g) ++k;
  if (k * k == g) return k;
  return std::nullopt;
}

bool matches(const LookupRow& r, long long g) {
  if (r.square) {
    const auto k = exact_sqrt(g);
    return k && *k >= 2 &&
           std::find(kExclusions.begin(), kExclusions.end(), *k) == kExclusions.end();
  }
  return std::find(r.genera.begin(), r.genera.end(), g) != r.genera.end();
}

const std::vector<LookupRow>& oe_rows() {
  static const std::vector<LookupRow> rows = {
      {"12(g-1)", 12, 1, 0, {2, 3, 4, 5, 6, 9, 11, 17, 25, 97, 121, 241, 601}},
      {"8(g-1)", 8, 1, 0, {7, 49, 73}},
      {"20(g-1)/3", 20, 3, 0, {16, 19, 361}},
      {"6(g-1)", 6, 1, 0, {21, 481}},
      {"192", 0, 1, 192, {41}},
      {"7200", 0, 1, 7200, {1681}},
      {"4(sqrt(g)+1)^2", 0, 1, 0, {}, true},
  };
  return rows;
}

const std::vector<LookupRow>& oe_u_rows() {
  static const std::vector<LookupRow> rows = {
      {"12(g-1)", 12, 1, 0, {2, 3, 4, 5, 6, 9, 11, 17, 25, 97, 121, 241, 601}},
      {"8(g-1)", 8, 1, 0, {7, 49, 73}},
      {"20(g-1)/3", 20, 3, 0, {16, 19, 361}},
      {"192", 0, 1, 192, {41}},
      {"7200", 0, 1, 7200, {1681}},
      {"4(sqrt(g)+1)^2", 0, 1, 0, {}, true},
  };
  return rows;
}

const std::vector<LookupRow>& oe_k_rows() {
  static const std::vector<LookupRow> rows = {
      {"12(g-1)", 12, 1, 0, {9, 11, 121, 241}},
      {"2400", 0, 1, 2400, {361}},
      {"6(g-1)", 6, 1, 0, {2, 3, 4, 5, 21, 25, 97, 481}},
  };
  return rows;
}

void require_genus(long long g) {
  if (g < 2) {
    throw std::invalid_argument("genus must be at least 2, got " + std::to_string(g));
  }
}

// Largest matching row, or the default when nothing matches.
std::pair<long long, std::string> lookup(const std::vector<LookupRow>& rows, long long g,
                                         long long fallback, const char* fallback_label) {
  require_genus(g);
  std::optional<std::pair<long long, std::string>> best;
  for (const auto& r : rows) {
    if (matches(r, g)) {
      const long long v = r.value(g);
      if (!best || v > best->first) best = {v, r.label};
    }
  }
  return best ? *best : std::pair<long long, std::string>{fallback, fallback_label};
}

}  // namespace

long long oe(long long g) { return lookup(oe_rows(), g, 4 * (g + 1), "4(g+1)").first; }
long long oe_u(long long g) { return lookup(oe_u_rows(), g, 4 * (g + 1), "4(g+1)").first; }
long long oe_k(long long g) { return lookup(oe_k_rows(), g, 4 * (g - 1), "4(g-1)").first; }
std::string oe_row(long long g) { return lookup(oe_rows(), g, 4 * (g + 1), "4(g+1)").second; }

const std::vector<long long>& square_exclusions() { return kExclusions; }

std::vector<std::string> check_square_exclusions(long long g_max) {
  std::vector<std::string> problems;
  for (const auto* rows : {&oe_rows(), &oe_u_rows()}) {
    const char* table = rows == &oe_rows() ? "OE" : "OE^u";
    for (long long k = 2; k * k <= g_max; ++k) {
      const long long g = k * k;
      const long long sq = 4 * (k + 1) * (k + 1);
      std::optional<long long> other;
      for (const auto& r : *rows) {
        if (!r.square && matches(r, g)) other = std::max(other.value_or(0), r.value(g));
      }
      const bool excluded = std::find(kExclusions.begin(), kExclusions.end(), k) != kExclusions.end();
      if (excluded && !(other && *other > sq)) {
        problems.push_back(std::string(table) + ": k=" + std::to_string(k) +
                           " is excluded but no other row beats " + std::to_string(sq));
      }
      if (!excluded && other && *other > sq) {
        problems.push_back(std::string(table) + ": k=" + std::to_string(k) + " is kept but another row gives " +
                           std::to_string(*other) + " > " + std::to_string(sq));
      }
    }
  }
  return problems;
}

GenusRecord collect_genus_record(long long g, const Catalog& c) {
  require_genus(g);
  GenusRecord rec;
  rec.g = g;
  for (const auto& e : c.entries) {
    for (const auto& f : e.features) {
      if (!f.allowable || !f.singular_type) continue;
      auto add = [&](std::optional<long long> n) {
        const auto vars = e.bind(n);
        std::string src = e.id + "." + f.name;
        if (n) src += "[" + e.parameter->name + "=" + std::to_string(*n) + "]";
        rec.realizations.push_back(
            {e.group_order.evaluate(vars), f.singular_type->at(vars), f.type33, f.knotting, src});
      };
      if (!e.parameter) {
        if (f.genus->evaluate({}) == g) add(std::nullopt);
        continue;
      }
      // Genus formulas of the parametric entries grow with the parameter.
      for (long long n = e.parameter->lower; n <= e.parameter->lower + g + 64; ++n) {
        const long long gn = f.genus->evaluate(e.bind(n));
        if (gn == g) add(n);
        if (gn > g) break;
      }
    }
  }
  rec.realizations.push_back({4 * (g + 1), std::nullopt, Type33::none, Knotting::plain, "cage"});
  rec.realizations.push_back({4 * (g - 1), std::nullopt, Type33::none, Knotting::k, "knotted-arc"});
  for (const auto& r : rec.realizations) {
    if (realizes_unknotted(r.knotting)) rec.oe_u = std::max(rec.oe_u, r.order);
    if (realizes_knotted(r.knotting)) rec.oe_k = std::max(rec.oe_k, r.order);
  }
  rec.oe = std::max(rec.oe_u, rec.oe_k);
  return rec;
}

GenusRecord derive_genus_record(long long g, const Catalog& c) {
  GenusRecord rec = collect_genus_record(g, c);
  const long long lo = oe(g), lu = oe_u(g), lk = oe_k(g);
  if (rec.oe != lo || rec.oe_u != lu || rec.oe_k != lk) {
    throw CatalogError("g=" + std::to_string(g) + ": derived (oe, oe_u, oe_k) = (" + std::to_string(rec.oe) + ", " +
                       std::to_string(rec.oe_u) + ", " + std::to_string(rec.oe_k) + ") but the tables give (" +
                       std::to_string(lo) + ", " + std::to_string(lu) + ", " + std::to_string(lk) + ")");
  }
  return rec;
}

const std::vector<std::string>& main_table_keys() {
  static const std::vector<std::string> keys = {"12(g-1)",   "8(g-1)",    "20(g-1)/3", "6(g-1) I",
                                                "6(g-1) II", "24(g-1)/5", "30(g-1)/7", "4n(g-1)/(n-2)"};
  return keys;
}

std::string main_row_key(const orb::SingularType& t, Type33 t33) {
  const auto& q = t.q();
  if (q[0] == 2 && q[1] == 2 && q[2] == 2) {
    switch (q[3]) {
      case 3:
        return "12(g-1)";
      case 4:
        return "8(g-1)";
      case 5:
        return "20(g-1)/3";
      default:
        return "4n(g-1)/(n-2)";
    }
  }
  if (t == orb::SingularType(2, 2, 3, 3)) return t33 == Type33::II ? "6(g-1) II" : "6(g-1) I";
  if (t == orb::SingularType(2, 2, 3, 4)) return "24(g-1)/5";
  if (t == orb::SingularType(2, 2, 3, 5)) return "30(g-1)/7";
  throw std::invalid_argument("no main-table row for " + t.to_string());
}

const MainRow* MainTable::find(std::string_view key) const {
  for (const auto& r : rows) {
    if (r.key == key) return &r;
  }
  return nullptr;
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\r') out += c;
  }
  return out;
}

}  // namespace

MainTable derive_main_table(const Catalog& c, long long g_max) {
  std::map<std::string, std::map<long long, Knotting>> marks;
  std::map<std::string, std::vector<std::string>> symbolic;
  auto mark = [&](const std::string& key, long long g, Knotting k) {
    auto [it, fresh] = marks[key].try_emplace(g, k);
    if (!fresh) it->second = merge(it->second, k);
  };
  for (const auto& e : c.entries) {
    for (const auto& f : e.features) {
      if (!f.allowable || !f.singular_type) continue;
      if (!e.parameter) {
        const long long g = f.genus->evaluate({});
        if (g <= g_max && e.order() > 4 * (g - 1)) {
          mark(main_row_key(f.singular_type->at({}), f.type33), g, f.knotting);
        }
        continue;
      }
      bool family = false;
      for (long long n = e.parameter->lower;; ++n) {
        const auto vars = e.bind(n);
        const long long g = f.genus->evaluate(vars);
        if (g > g_max) break;
        const std::string key = main_row_key(f.singular_type->at(vars), f.type33);
        if (key == "4n(g-1)/(n-2)") {
          family = true;
        } else if (e.group_order.evaluate(vars) > 4 * (g - 1)) {
          mark(key, g, f.knotting);
        }
      }
      if (family) {
        auto& sym = symbolic["4n(g-1)/(n-2)"];
        const std::string text = strip_spaces(f.genus->text());
        if (std::find(sym.begin(), sym.end(), text) == sym.end()) sym.push_back(text);
      }
    }
  }
  MainTable t;
  for (const auto& key : main_table_keys()) {
    if (!marks.count(key) && !symbolic.count(key)) continue;
    MainRow row;
    row.key = key;
    for (const auto& [g, k] : marks[key]) row.genera.push_back({g, k});
    row.symbolic = symbolic[key];
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

Knotting parse_suffix(const std::string& tag, const std::string& line) {
  if (tag.empty()) return Knotting::plain;
  if (tag == "_k") return Knotting::k;
  if (tag == "_uk") return Knotting::uk;
  throw CatalogError("main table: bad footnote '" + tag + "' in: " + line);
}

std::optional<long long> as_integer(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::stoll(s);
}

}  // namespace

MainTable parse_main_table(std::string_view text) {
  MainTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (strip_spaces(line).empty()) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw CatalogError("main table: missing '|' in: " + line);
    MainRow row;
    {
      std::string key = line.substr(0, bar);
      const auto b = key.find_first_not_of(" \t");
      const auto e = key.find_last_not_of(" \t");
      row.key = b == std::string::npos ? std::string() : key.substr(b, e - b + 1);
    }
    const std::string body = strip_spaces(line.substr(bar + 1));
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == '{') {
        const auto close = body.find('}', i);
        if (close == std::string::npos) throw CatalogError("main table: unclosed brace in: " + line);
        auto next = body.find(',', close);
        if (next == std::string::npos) next = body.size();
        const Knotting k = parse_suffix(body.substr(close + 1, next - close - 1), line);
        std::istringstream inner(body.substr(i + 1, close - i - 1));
        std::string tok;
        while (std::getline(inner, tok, ',')) {
          const auto v = as_integer(tok);
          if (!v) throw CatalogError("main table: '" + tok + "' inside braces is not a genus");
          row.genera.push_back({*v, k});
        }
        i = next + 1;
        continue;
      }
      // A symbolic item may itself contain parentheses but no commas.
      auto next = body.find(',', i);
      if (next == std::string::npos) next = body.size();
      const std::string tok = body.substr(i, next - i);
      const auto us = tok.find('_');
      const auto v = as_integer(tok.substr(0, us));
      if (v) {
        row.genera.push_back({*v, parse_suffix(us == std::string::npos ? "" : tok.substr(us), line)});
      } else {
        row.symbolic.push_back(tok);
      }
      i = next + 1;
    }
    std::sort(row.genera.begin(), row.genera.end(),
              [](const GenusMark& a, const GenusMark& b) { return a.g < b.g; });
    t.rows.push_back(std::move(row));
  }
  return t;
}

MainTable load_main_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open main table " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_main_table(ss.str());
}

std::string format_row(const MainRow& r) {
  std::string out = r.key + " |";
  bool first = true;
  auto sep = [&] {
    out += first ? " " : ", ";
    first = false;
  };
  for (const auto& m : r.genera) {
    sep();
    out += std::to_string(m.g);
    if (m.knotting != Knotting::plain) out += "_" + std::string(to_string(m.knotting));
  }
  for (const auto& s : r.symbolic) {
    sep();
    out += s;
  }
  return out;
}

CageResult cage_construction(long long m, long long n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("cage construction needs m, n >= 2, got (" + std::to_string(m) + ", " +
                                std::to_string(n) + ")");
  }
  CageResult r;
  r.genus = (m - 1) * (n - 1);
  r.order = 2 * m * n;
  if (m == n) r.square_order = 4 * n * n;
  return r;
}

}  // namespace oeg::cat

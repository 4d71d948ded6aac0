#include "oeg/catalog/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace oeg::cat {

std::string_view to_string(FeatureKind k) { return k == FeatureKind::edge ? "edge" : "dashed-arc"; }

std::string_view to_string(Type33 t) {
  switch (t) {
    case Type33::I:
      return "I";
    case Type33::II:
      return "II";
    default:
      return "none";
  }
}

std::string_view to_string(Knotting k) {
  switch (k) {
    case Knotting::k:
      return "k";
    case Knotting::uk:
      return "uk";
    default:
      return "plain";
  }
}

Knotting parse_knotting(std::string_view text) {
  if (text == "plain") return Knotting::plain;
  if (text == "k") return Knotting::k;
  if (text == "uk") return Knotting::uk;
  throw CatalogError("knotting must be plain, k or uk, got '" + std::string(text) + "'");
}

Knotting merge(Knotting a, Knotting b) { return a == b ? a : Knotting::uk; }

bool realizes_unknotted(Knotting k) { return k != Knotting::k; }
bool realizes_knotted(Knotting k) { return k != Knotting::plain; }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) s = trim(s);
  return out;
}

}  // namespace

TypeFormula TypeFormula::parse(std::string_view text) {
  std::string t(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') {
    t = t.substr(1, t.size() - 2);
  }
  const auto parts = split_top_level(t, ',');
  if (parts.size() != 4) {
    throw CatalogError("singular type needs four entries: '" + std::string(text) + "'");
  }
  TypeFormula f;
  for (std::size_t i = 0; i < 4; ++i) {
    f.q[i] = util::Expression::parse(parts[i]);
  }
  return f;
}

orb::SingularType TypeFormula::at(const util::Bindings& b) const {
  return orb::SingularType(q[0].evaluate(b), q[1].evaluate(b), q[2].evaluate(b), q[3].evaluate(b));
}

std::string TypeFormula::text() const {
  return q[0].text() + "," + q[1].text() + "," + q[2].text() + "," + q[3].text();
}

long long CatalogEntry::order() const {
  if (parametric()) {
    throw CatalogError("entry " + id + " is parametric; its order needs " + parameter->name);
  }
  return group_order.evaluate({});
}

long long CatalogEntry::order_at(long long n) const { return group_order.evaluate(bind(n)); }

util::Bindings CatalogEntry::bind(std::optional<long long> n) const {
  util::Bindings b;
  if (parameter && n) {
    b[parameter->name] = *n;
  }
  return b;
}

const Feature* CatalogEntry::find_feature(std::string_view name) const {
  for (const auto& f : features) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::size_t Catalog::feature_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.features.size();
  return n;
}

namespace {

std::vector<fp::Word> resolve_gens(const CatalogEntry& e, const Feature& f) {
  const fp::Presentation& p = *e.presentation;
  const std::string& text = *f.subgroup_gens_text;
  if (!text.empty() && text.front() == '@') {
    const auto* sub = p.find_subgroup(text.substr(1));
    if (!sub) {
      throw CatalogError("entry " + e.id + " feature " + f.name + ": presentation has no subgroup '" +
                         text.substr(1) + "'");
    }
    return sub->generators;
  }
  std::vector<fp::Word> out;
  for (const auto& w : split_top_level(text, ',')) {
    out.push_back(fp::parse_word(w, p));
  }
  return out;
}

}  // namespace

Catalog parse_catalog(std::string_view text, const std::string& base_dir) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  CatalogEntry* entry = nullptr;
  Feature* feature = nullptr;

  auto fail = [&](const std::string& what) -> void {
    throw CatalogError("catalog line " + std::to_string(line_no) + ": " + what);
  };
  auto guarded = [&](auto&& fn) {
    try {
      fn();
    } catch (const CatalogError& e) {
      fail(e.what());
    } catch (const util::ExpressionError& e) {
      fail(e.what());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string value;
    std::getline(ls, value);
    value = trim(value);

    if (key == "entry") {
      if (entry) fail("entry '" + value + "' opened inside entry " + entry->id);
      if (value.empty()) fail("entry needs an id");
      cat.entries.emplace_back();
      entry = &cat.entries.back();
      entry->id = value;
      continue;
    }
    if (!entry) fail("'" + key + "' outside an entry block");

    if (key == "end") {
      if (feature) {
        feature = nullptr;
      } else {
        entry = nullptr;
      }
      continue;
    }

    if (feature) {
      if (key == "kind") {
        if (value == "edge") {
          feature->kind = FeatureKind::edge;
        } else if (value == "dashed-arc") {
          feature->kind = FeatureKind::dashed_arc;
        } else {
          fail("kind must be edge or dashed-arc");
        }
      } else if (key == "singular_type") {
        guarded([&] { feature->singular_type = TypeFormula::parse(value); });
      } else if (key == "type33") {
        if (value == "I") {
          feature->type33 = Type33::I;
        } else if (value == "II") {
          feature->type33 = Type33::II;
        } else if (value == "none") {
          feature->type33 = Type33::none;
        } else {
          fail("type33 must be none, I or II");
        }
      } else if (key == "genus") {
        guarded([&] { feature->genus = util::Expression::parse(value); });
      } else if (key == "knotting") {
        guarded([&] { feature->knotting = parse_knotting(value); });
      } else if (key == "allowable") {
        if (value != "true" && value != "false") fail("allowable must be true or false");
        feature->allowable = value == "true";
      } else if (key == "subgroup_gens") {
        feature->subgroup_gens_text = value;
      } else if (key == "expected_index") {
        guarded([&] {
          std::size_t used = 0;
          const long long v = std::stoll(value, &used);
          if (used != value.size() || v < 1) throw CatalogError("expected_index must be a positive integer");
          feature->expected_index = static_cast<std::uint64_t>(v);
        });
      } else if (key == "note") {
        feature->note = value;
      } else {
        fail("unknown feature field '" + key + "'");
      }
      continue;
    }

    if (key == "feature") {
      if (value.empty()) fail("feature needs a name");
      entry->features.emplace_back();
      feature = &entry->features.back();
      feature->name = value;
    } else if (key == "table") {
      entry->table = value;
    } else if (key == "group_order") {
      guarded([&] { entry->group_order = util::Expression::parse(value); });
    } else if (key == "parameter") {
      // n>=3
      const auto ge = value.find(">=");
      if (ge == std::string::npos) fail("parameter wants the form n>=3");
      guarded([&] {
        entry->parameter = Parameter{value.substr(0, ge), std::stoll(value.substr(ge + 2))};
      });
    } else if (key == "presentation") {
      entry->presentation_path = value;
      if (!base_dir.empty()) {
        const auto path = (std::filesystem::path(base_dir) / value).string();
        try {
          entry->presentation = fp::load_presentation(path);
        } catch (const std::exception& e) {
          fail(std::string("entry ") + entry->id + ": " + e.what());
        }
      }
    } else if (key == "note") {
      entry->note = value;
    } else {
      fail("unknown entry field '" + key + "'");
    }
  }
  if (feature || entry) {
    throw CatalogError("catalog ends inside entry " + (entry ? entry->id : std::string("?")));
  }

  for (auto& e : cat.entries) {
    if (e.group_order.text().empty()) {
      throw CatalogError("entry " + e.id + ": group_order is missing");
    }
    for (auto& f : e.features) {
      if (f.subgroup_gens_text && e.presentation) {
        try {
          f.subgroup_gens = resolve_gens(e, f);
        } catch (const fp::ParseError& err) {
          throw CatalogError("entry " + e.id + " feature " + f.name + ": subgroup_gens: " + err.what());
        }
      }
    }
  }
  validate(cat);
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CatalogError("cannot open catalog " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_catalog(ss.str(), std::filesystem::path(path).parent_path().string());
  } catch (const CatalogError& e) {
    throw CatalogError(path + ": " + e.what());
  }
}

namespace {

void check_feature_at(const CatalogEntry& e, const Feature& f, std::optional<long long> n) {
  const std::string where = "entry " + e.id + " feature " + f.name +
                            (n ? " at " + e.parameter->name + "=" + std::to_string(*n) : std::string());
  auto fail = [&](const std::string& what) { throw CatalogError(where + ": " + what); };
  const auto vars = e.bind(n);
  const long long order = e.group_order.evaluate(vars);
  if (!f.singular_type) {
    return;
  }
  const orb::SingularType t = f.singular_type->at(vars);
  if (!t.in_lemma_list()) fail("singular_type " + t.to_string() + " is not an admissible type");
  const bool is33 = t == orb::SingularType(2, 2, 3, 3);
  if (is33 != (f.type33 != Type33::none)) {
    fail(is33 ? "type33 missing for (2,2,3,3)" : "type33 given for " + t.to_string());
  }
  const long long g = f.genus->evaluate(vars);
  if (g < 2) fail("genus " + std::to_string(g) + " below 2");
  const auto rh = orb::quotient_genus(order, t.quotient());
  if (!rh.genus || *rh.genus != g) {
    fail("genus " + std::to_string(g) + " disagrees with quotient_genus(" + std::to_string(order) + ", " +
         t.to_string() + ") = " + orb::to_string(rh.value));
  }
  if (orb::order_from_type(g, t) != orb::Rational(order)) {
    fail("order_from_type(" + std::to_string(g) + ", " + t.to_string() + ") != " + std::to_string(order));
  }
}

}  // namespace

void validate(const Catalog& c, long long parametric_span) {
  std::set<std::string> ids;
  for (const auto& e : c.entries) {
    auto fail = [&](const std::string& what) { throw CatalogError("entry " + e.id + ": " + what); };
    if (!ids.insert(e.id).second) fail("duplicate id");
    if (e.table != "IV" && e.table != "V" && e.table != "VI") fail("table must be IV, V or VI");
    std::set<std::string> allowed;
    if (e.parameter) allowed.insert(e.parameter->name);
    auto check_vars = [&](const util::Expression& x, const std::string& field) {
      for (const auto& v : x.variables()) {
        if (!allowed.count(v)) fail(field + " mentions unknown parameter '" + v + "'");
      }
    };
    check_vars(e.group_order, "group_order");
    if (e.parameter && e.group_order.variables().empty()) fail("parametric entry with constant group_order");

    std::set<std::string> names;
    for (const auto& f : e.features) {
      auto ffail = [&](const std::string& what) { fail("feature " + f.name + ": " + what); };
      if (!names.insert(f.name).second) ffail("duplicate name");
      if (f.allowable != (f.expected_index == 1)) ffail("allowable must hold exactly when expected_index = 1");
      if (f.singular_type.has_value() != f.genus.has_value()) ffail("singular_type and genus go together");
      if (!f.singular_type && f.allowable) ffail("allowable feature without singular_type");
      if (f.singular_type) {
        for (const auto& q : f.singular_type->q) check_vars(q, "singular_type");
        check_vars(*f.genus, "genus");
      }
      if (f.type33 == Type33::II && f.kind != FeatureKind::dashed_arc) ffail("type II must be a dashed-arc");
      if (f.kind == FeatureKind::dashed_arc && f.type33 != Type33::II) ffail("a dashed-arc is type II");
      if (!f.allowable && !f.subgroup_gens_text) ffail("non-allowable feature needs subgroup_gens");
      if (f.subgroup_gens_text && !e.presentation_path) ffail("subgroup_gens without a presentation");

      if (e.parameter) {
        for (long long n = e.parameter->lower; n <= e.parameter->lower + parametric_span; ++n) {
          check_feature_at(e, f, n);
        }
      } else {
        check_feature_at(e, f, std::nullopt);
      }
    }
    if (e.parameter) {
      if (e.order_at(e.parameter->lower) < 1) fail("group_order below 1");
    } else if (e.order() < 1) {
      fail("group_order below 1");
    }
  }
}

}  // namespace oeg::cat

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "oeg/catalog/catalog.hpp"
#include "oeg/catalog/rejections.hpp"
#include "oeg/catalog/theorems.hpp"
#include "oeg/fpgroup/coset_enumeration.hpp"
#include "support.hpp"

using namespace oeg;
using cat::Knotting;
using orb::Rational;
using orb::SingularType;

namespace {

const cat::Catalog& shipped() {
  static const cat::Catalog c = cat::load_catalog(test::data_path("catalog.txt"));
  return c;
}

const char* kOne = R"(entry X
  table IV
  group_order 6
  feature a
    kind dashed-arc
    singular_type 2,2,3,3
    type33 II
    genus 2
    knotting uk
  end
end
)";

std::string with(std::string_view from, std::string_view to) {
  std::string s = kOne;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  s.replace(pos, from.size(), to);
  return s;
}

std::string error_of(const std::string& text) {
  try {
    cat::parse_catalog(text);
  } catch (const cat::CatalogError& e) {
    return e.what();
  }
  return {};
}

struct Maxima {
  long long all = 0, u = 0, k = 0;
};

// Straight from the fixture: every allowable feature whose genus is g,
// parametric entries solved for n, plus the two floors.
Maxima oracle_maxima(long long g, const cat::Catalog& c) {
  Maxima m{4 * (g + 1), 4 * (g + 1), 4 * (g - 1)};
  m.all = 4 * (g + 1);
  auto take = [&](long long order, Knotting kn) {
    m.all = std::max(m.all, order);
    if (kn != Knotting::k) m.u = std::max(m.u, order);
    if (kn != Knotting::plain) m.k = std::max(m.k, order);
  };
  for (const auto& e : c.entries) {
    for (const auto& f : e.features) {
      if (!f.allowable || !f.genus) continue;
      if (!e.parametric()) {
        if (f.genus->evaluate({}) == g) take(e.order(), f.knotting);
        continue;
      }
      for (long long n = e.parameter->lower; n <= 2 * g + 4; ++n) {
        if (f.genus->evaluate(e.bind(n)) == g) take(e.order_at(n), f.knotting);
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("knotting tags") {
  CHECK(cat::merge(Knotting::plain, Knotting::plain) == Knotting::plain);
  CHECK(cat::merge(Knotting::k, Knotting::k) == Knotting::k);
  CHECK(cat::merge(Knotting::plain, Knotting::k) == Knotting::uk);
  CHECK(cat::merge(Knotting::uk, Knotting::plain) == Knotting::uk);
  CHECK(cat::parse_knotting("uk") == Knotting::uk);
  CHECK_THROWS_AS(cat::parse_knotting("x"), cat::CatalogError);
  CHECK(cat::realizes_unknotted(Knotting::plain));
  CHECK_FALSE(cat::realizes_unknotted(Knotting::k));
  CHECK(cat::realizes_knotted(Knotting::uk));
  CHECK_FALSE(cat::realizes_knotted(Knotting::plain));
}

TEST_CASE("type formulas") {
  const auto t = cat::TypeFormula::parse("2,2,2,n");
  CHECK(t.at({{"n", 7}}) == SingularType(2, 2, 2, 7));
  CHECK(t.text() == "2,2,2,n");
  CHECK_THROWS(t.at({}));
  CHECK_THROWS_AS(cat::TypeFormula::parse("2,2,3"), cat::CatalogError);
}

TEST_CASE("shipped catalog") {
  const auto& c = shipped();
  CHECK(c.entries.size() == 40);
  std::map<std::string, int> per_table;
  for (const auto& e : c.entries) ++per_table[e.table];
  CHECK(per_table["IV"] == 11);
  CHECK(per_table["V"] == 11);
  CHECK(per_table["VI"] == 18);

  const auto* e34 = c.find("34");
  REQUIRE(e34 != nullptr);
  CHECK(e34->order() == 120);
  REQUIRE(e34->features.size() == 3);
  const auto* a = e34->find_feature("a");
  CHECK(a->singular_type->at({}) == SingularType(2, 2, 2, 3));
  CHECK(a->genus->evaluate({}) == 11);
  CHECK(a->knotting == Knotting::plain);
  CHECK(e34->find_feature("b")->knotting == Knotting::k);
  const auto* c34 = e34->find_feature("c");
  CHECK(c34->type33 == cat::Type33::II);
  CHECK(c34->kind == cat::FeatureKind::dashed_arc);
  CHECK(c34->genus->evaluate({}) == 21);
  CHECK(c34->knotting == Knotting::k);
  REQUIRE(c34->subgroup_gens.has_value());
  CHECK(c34->subgroup_gens->size() == 2);
  REQUIRE(e34->presentation.has_value());

  const auto* e15 = c.find("15E");
  REQUIRE(e15 != nullptr);
  CHECK(e15->parametric());
  CHECK(e15->order_at(10) == 40);
  CHECK_THROWS_AS(e15->order(), cat::CatalogError);
  CHECK(e15->features[0].genus->evaluate(e15->bind(10)) == 9);
  CHECK(e15->features[0].singular_type->at(e15->bind(10)) == SingularType(2, 2, 2, 10));

  const auto* e31 = c.find("31");
  REQUIRE(e31 != nullptr);
  CHECK(e31->order() == 288);
  CHECK(e31->features.empty());

  const auto* e38 = c.find("38");
  REQUIRE(e38 != nullptr);
  CHECK(e38->order() == 2880);
  CHECK_FALSE(e38->find_feature("e")->allowable);
  CHECK(e38->find_feature("e")->expected_index == 4);
  CHECK(e38->find_feature("f")->expected_index == 5);
  CHECK(e38->find_feature("d")->knotting == Knotting::k);
  CHECK(c.find("nope") == nullptr);
  CHECK(c.feature_count() == 73);
  CHECK_NOTHROW(cat::validate(c, 400));
}

TEST_CASE("every feature satisfies Riemann-Hurwitz exactly") {
  for (const auto& e : shipped().entries) {
    for (const auto& f : e.features) {
      if (!f.singular_type) continue;
      CAPTURE(e.id + "." + f.name);
      const long long lo = e.parametric() ? e.parameter->lower : 0;
      const long long hi = e.parametric() ? lo + 300 : 0;
      for (long long n = lo; n <= hi; ++n) {
        const auto b = e.bind(e.parametric() ? std::optional<long long>(n) : std::nullopt);
        const long long g = f.genus->evaluate(b);
        const auto t = f.singular_type->at(b);
        const long long order = e.group_order.evaluate(b);
        CHECK(orb::order_from_type(g, t) == Rational(order));
        CHECK(orb::quotient_genus(order, t.quotient()).genus == g);
        CHECK((t == SingularType(2, 2, 3, 3)) == (f.type33 != cat::Type33::none));
      }
    }
  }
}

TEST_CASE("presentation orders and indices") {
  for (const auto& e : shipped().entries) {
    if (!e.presentation || e.order() > 200) continue;
    CAPTURE(e.id);
    CHECK(fp::group_order(*e.presentation) == static_cast<std::uint64_t>(e.order()));
    for (const auto& f : e.features) {
      if (f.subgroup_gens) CHECK(*fp::coset_enumerate(*e.presentation, *f.subgroup_gens).index == f.expected_index);
    }
  }
}

TEST_CASE("catalog parse and validation errors") {
  CHECK(cat::parse_catalog("").entries.empty());
  CHECK(cat::parse_catalog("# nothing\n\n").entries.empty());
  CHECK(error_of(kOne).empty());

  CHECK(error_of(with("table IV", "table VII")).find("table") != std::string::npos);
  CHECK(error_of(with("genus 2", "genus 3")).find("entry X feature a") != std::string::npos);
  CHECK(error_of(with("genus 2", "genus 3")).find("genus") != std::string::npos);
  CHECK(error_of(with("type33 II", "type33 I")).find("dashed-arc") != std::string::npos);
  {
    std::string s = with("    type33 II\n", "");
    s.erase(s.find("    kind dashed-arc\n"), 20);
    CHECK(error_of(s).find("type33 missing") != std::string::npos);
  }
  CHECK(error_of(with("knotting uk", "knotting kk")).find("knotting") != std::string::npos);
  CHECK(error_of(with("knotting uk", "expected_index 4")).find("expected_index") != std::string::npos);
  CHECK(error_of(with("knotting uk", "allowable false")).find("expected_index") != std::string::npos);
  CHECK(error_of(with("knotting uk", "colour red")).find("unknown feature field") != std::string::npos);
  CHECK(error_of(with("table IV", "colour red")).find("unknown entry field") != std::string::npos);
  CHECK(error_of(with("  group_order 6\n", "")).find("group_order") != std::string::npos);
  CHECK(error_of(with("singular_type 2,2,3,3", "singular_type 2,3,3,3")).find("admissible") != std::string::npos);
  CHECK(error_of(std::string(kOne) + kOne).find("duplicate") != std::string::npos);
  CHECK(error_of(with("end\nend\n", "end\n")).find("ends inside") != std::string::npos);
  CHECK(error_of("table IV\n").find("outside") != std::string::npos);
  CHECK(error_of(with("knotting uk", "subgroup_gens x")).find("presentation") != std::string::npos);
  CHECK(error_of(with("genus 2", "genus 2\n    expected_index 2\n    allowable false")).find("subgroup_gens") !=
        std::string::npos);
  CHECK_THROWS_AS(cat::load_catalog("/nonexistent/catalog.txt"), cat::CatalogError);
  // a line number rides along for syntax errors
  CHECK(error_of(with("table IV", "colour red")).find("line 2") != std::string::npos);
}

TEST_CASE("parametric entries") {
  const auto c = cat::parse_catalog(R"(entry P
  table V
  parameter n>=3
  group_order 4n
  feature a
    singular_type 2,2,2,n
    genus n-1
  end
end
)");
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].parameter->name == "n");
  CHECK(c.entries[0].parameter->lower == 3);
  CHECK_THROWS_AS(cat::parse_catalog(R"(entry P
  table V
  parameter n>=3
  group_order 4m
end
)"),
                  cat::CatalogError);
  // genus n would break the relation at every n
  CHECK_THROWS_AS(cat::parse_catalog(R"(entry P
  table V
  parameter n>=3
  group_order 4n
  feature a
    singular_type 2,2,2,n
    genus n
  end
end
)"),
                  cat::CatalogError);
}

TEST_CASE("lookup examples") {
  CHECK(cat::oe(41) == 192);
  CHECK(cat::oe(10) == 44);
  CHECK(cat::oe(36) == 196);
  CHECK(cat::oe(2) == 12);
  CHECK(cat::oe(16) == 100);
  CHECK(cat::oe(1681) == 7200);
  CHECK(cat::oe(601) == 7200);
  CHECK(cat::oe_k(21) == 120);
  CHECK(cat::oe_u(21) == 88);
  CHECK(cat::oe_k(7) == 24);
  CHECK(cat::oe(481) == 2880);
  CHECK(cat::oe_u(481) == 1928);
  CHECK(cat::oe_row(2) == "12(g-1)");
  CHECK(cat::oe_row(10) == "4(g+1)");
  CHECK(cat::oe_row(36) == "4(sqrt(g)+1)^2");
  CHECK_THROWS_AS(cat::oe(1), std::invalid_argument);
  CHECK_THROWS_AS(cat::oe_u(0), std::invalid_argument);
  CHECK_THROWS_AS(cat::oe_k(-3), std::invalid_argument);
}

TEST_CASE("lookup invariants for g in [2, 2000]") {
  std::set<long long> inversions;
  for (long long g = 2; g <= 2000; ++g) {
    const long long v = cat::oe(g), u = cat::oe_u(g), k = cat::oe_k(g);
    CHECK(4 * (g + 1) <= v);
    CHECK(v <= 12 * (g - 1));
    CHECK(v == std::max(u, k));
    CHECK(k >= 4 * (g - 1));
    const auto s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(g))));
    if (s * s == g) CHECK(v >= 4 * (s + 1) * (s + 1));
    if (u < k) inversions.insert(g);
  }
  CHECK(inversions == std::set<long long>{21, 481});
}

TEST_CASE("lookups equal the maxima over the fixture") {
  const auto& c = shipped();
  for (long long g = 2; g <= 2000; ++g) {
    CAPTURE(g);
    const auto m = oracle_maxima(g, c);
    CHECK(cat::oe(g) == m.all);
    CHECK(cat::oe_u(g) == m.u);
    CHECK(cat::oe_k(g) == m.k);
  }
}

TEST_CASE("genus records") {
  const auto& c = shipped();
  const auto r481 = cat::derive_genus_record(481, c);
  CHECK(r481.oe == 2880);
  CHECK(r481.oe_k == 2880);
  CHECK(r481.oe_u == 1928);
  bool saw_38d = false, saw_cage = false;
  for (const auto& r : r481.realizations) {
    saw_38d |= r.source == "38.d" && r.order == 2880 && r.knotting == Knotting::k;
    saw_cage |= r.source == "cage" && r.order == 1928;
  }
  CHECK(saw_38d);
  CHECK(saw_cage);
  CHECK(cat::derive_genus_record(2, c).oe == 12);
  const auto r10 = cat::derive_genus_record(10, c);
  CHECK(r10.oe == 44);
  // floors plus the parametric (2,2,2,11) instance of the cage family
  for (const auto& r : r10.realizations) CHECK(r.order <= 44);
  CHECK_THROWS_AS(cat::derive_genus_record(1, c), std::invalid_argument);

  // dropping the only realization of a lookup value is caught
  cat::Catalog cut = c;
  for (auto& e : cut.entries)
    if (e.id == "30") e.features.clear();
  CHECK_THROWS_AS(cat::derive_genus_record(1681, cut), cat::CatalogError);
  CHECK(cat::collect_genus_record(1681, cut).oe < 7200);
}

TEST_CASE("square exclusions") {
  CHECK(cat::square_exclusions() == std::vector<long long>{3, 5, 7, 11, 19, 41});
  CHECK(cat::check_square_exclusions(2000).empty());
  CHECK(cat::check_square_exclusions(100000).empty());
}

TEST_CASE("main table") {
  const auto& c = shipped();
  const auto derived = cat::derive_main_table(c, 2000);
  const auto fixture = cat::load_main_table(test::data_path("theorems/main_table.txt"));
  CHECK(derived.rows.size() == cat::main_table_keys().size());
  for (const auto& key : cat::main_table_keys()) {
    CAPTURE(key);
    const auto* d = derived.find(key);
    const auto* f = fixture.find(key);
    REQUIRE(d != nullptr);
    REQUIRE(f != nullptr);
    CHECK(*d == *f);
  }
  auto genera = [&](const std::string& key) {
    std::vector<long long> out;
    for (const auto& m : derived.find(key)->genera) out.push_back(m.g);
    return out;
  };
  CHECK(genera("24(g-1)/5") == std::vector<long long>{6, 11, 41, 121});
  CHECK(genera("30(g-1)/7") == std::vector<long long>{8, 29, 841, 1681});
  CHECK(derived.find("4n(g-1)/(n-2)")->symbolic == std::vector<std::string>{"n-1", "(n-1)^2"});
  CHECK(cat::main_row_key({2, 2, 2, 3}, cat::Type33::none) == "12(g-1)");
  CHECK(cat::main_row_key({2, 2, 2, 9}, cat::Type33::none) == "4n(g-1)/(n-2)");
  CHECK(cat::main_row_key({2, 2, 3, 3}, cat::Type33::II) == "6(g-1) II");
}

TEST_CASE("main table text") {
  const auto t = cat::parse_main_table("6(g-1) II | {2, 3}_uk, 21_k, 5\nfam | n-1\n");
  REQUIRE(t.rows.size() == 2);
  const auto& r = t.rows[0];
  REQUIRE(r.genera.size() == 4);
  CHECK(r.genera[0] == cat::GenusMark{2, Knotting::uk});
  CHECK(r.genera[1] == cat::GenusMark{3, Knotting::uk});
  CHECK(r.genera[2] == cat::GenusMark{5, Knotting::plain});
  CHECK(r.genera[3] == cat::GenusMark{21, Knotting::k});
  CHECK(t.rows[1].symbolic == std::vector<std::string>{"n-1"});
  CHECK(cat::parse_main_table(cat::format_row(r) + "\n").rows[0] == r);
  CHECK_THROWS_AS(cat::parse_main_table("no bar here\n"), cat::CatalogError);
  CHECK_THROWS_AS(cat::parse_main_table("k | {2, 3\n"), cat::CatalogError);
}

TEST_CASE("cage construction") {
  for (long long n = 2; n <= 50; ++n) {
    const auto r = cat::cage_construction(2, n);
    CHECK(r.genus == n - 1);
    CHECK(r.order == 4 * n);
    CHECK(r.order == 4 * (r.genus + 1));
    const auto s = cat::cage_construction(n, n);
    CHECK(s.genus == (n - 1) * (n - 1));
    REQUIRE(s.square_order.has_value());
    CHECK(*s.square_order == 4 * n * n);
  }
  const auto r33 = cat::cage_construction(3, 3);
  CHECK(r33.genus == 4);
  CHECK(r33.order == 18);
  CHECK(r33.square_order == 36);
  CHECK_FALSE(cat::cage_construction(3, 5).square_order.has_value());
  CHECK(cat::cage_construction(3, 5).genus == 8);
  CHECK_THROWS_AS(cat::cage_construction(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(cat::cage_construction(5, 0), std::invalid_argument);
}

TEST_CASE("rejection fixtures") {
  const auto rs = cat::load_rejections(test::data_path("rejections.txt"));
  CHECK(rs.size() == 11);
  std::set<std::string> entries;
  for (const auto& r : rs) {
    entries.insert(r.entry);
    CHECK(shipped().find(r.entry) != nullptr);
    if (r.cited) {
      CHECK_FALSE(r.quotient.has_value());
      continue;
    }
    REQUIRE(r.quotient.has_value());
    CAPTURE(r.id);
    CHECK(fp::group_order(*r.quotient) == r.expected_order);
    CHECK(*fp::coset_enumerate(*r.quotient, r.image).index == r.expected_index);
    CHECK(r.expected_index > 1);
  }
  CHECK(entries == std::set<std::string>{"15B", "20A", "21B", "25", "27", "31", "33", "34"});

  const char* base = "rejection r\n  entry 33\n  gens x\n  rel x^2\n  image 1\n  expected_order 2\n  expected_index 2\nend\n";
  CHECK(cat::parse_rejections(base).size() == 1);
  CHECK(cat::parse_rejections(base)[0].image.size() == 1);
  CHECK(cat::parse_rejections(base)[0].image[0].empty());
  CHECK_THROWS_AS(cat::parse_rejections("rejection r\n  entry 33\nend\n"), cat::CatalogError);
  CHECK_THROWS_AS(cat::parse_rejections("rejection r\n  entry 33\n  status cited\n  gens x\nend\n"), cat::CatalogError);
  CHECK_THROWS_AS(cat::parse_rejections("rejection r\n  entry 33\n  status maybe\nend\n"), cat::CatalogError);
  CHECK_THROWS_AS(cat::parse_rejections("rejection r\n  entry 33\n  gens x\n  rel y\n  expected_order 2\n  "
                                        "expected_index 2\nend\n"),
                  cat::CatalogError);
  CHECK_THROWS_AS(cat::parse_rejections("rejection r\n  entry 33\n"), cat::CatalogError);
  CHECK_THROWS_AS(cat::parse_rejections("entry 33\n"), cat::CatalogError);
  CHECK(cat::parse_rejections("rejection r\n  entry 31\n  status cited\nend\n")[0].cited);
}

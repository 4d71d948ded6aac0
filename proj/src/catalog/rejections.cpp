#include "oeg/catalog/rejections.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "oeg/catalog/catalog.hpp"

namespace oeg::cat {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t positive(const std::string& v, const std::string& field) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || x < 1) throw CatalogError(field + " must be a positive integer");
  return static_cast<std::uint64_t>(x);
}

}  // namespace

std::vector<RejectionFixture> parse_rejections(std::string_view text) {
  std::vector<RejectionFixture> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool open = false;
  std::string gens, rels, image;
  std::size_t start_line = 0;

  auto fail = [&](const std::string& what) {
    throw CatalogError("rejections line " + std::to_string(line_no) + ": " + what);
  };

  auto close = [&]() {
    RejectionFixture& r = out.back();
    if (r.entry.empty()) fail("fixture " + r.id + " has no entry");
    if (r.cited) {
      if (!gens.empty() || !rels.empty()) fail("cited fixture " + r.id + " carries a presentation");
      return;
    }
    if (gens.empty()) fail("fixture " + r.id + " has no gens");
    if (r.expected_order == 0 || r.expected_index == 0) fail("fixture " + r.id + " needs expected_order and expected_index");
    try {
      r.quotient = fp::parse_presentation("gens: " + gens + "\nrel: " + rels + "\n");
      std::istringstream is(image);
      std::string w;
      while (std::getline(is, w, ',')) {
        r.image.push_back(fp::parse_word(trim(w), *r.quotient));
      }
    } catch (const fp::ParseError& e) {
      throw CatalogError("rejection " + r.id + " (line " + std::to_string(start_line) + "): " + e.what());
    }
  };

  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string value;
    std::getline(ls, value);
    value = trim(value);

    if (key == "rejection") {
      if (open) fail("rejection opened inside " + out.back().id);
      if (value.empty() || !ids.insert(value).second) fail("missing or duplicate rejection id");
      out.emplace_back();
      out.back().id = value;
      gens.clear();
      rels.clear();
      image.clear();
      start_line = line_no;
      open = true;
      continue;
    }
    if (!open) fail("'" + key + "' outside a rejection block");
    RejectionFixture& r = out.back();
    try {
      if (key == "end") {
        close();
        open = false;
      } else if (key == "entry") {
        r.entry = value;
      } else if (key == "target") {
        r.target = value;
      } else if (key == "killed") {
        r.killed = value;
      } else if (key == "note") {
        r.note += (r.note.empty() ? "" : " ") + value;
      } else if (key == "status") {
        if (value != "checked" && value != "cited") fail("status must be checked or cited");
        r.cited = value == "cited";
      } else if (key == "gens") {
        gens = value;
      } else if (key == "rel") {
        rels += (rels.empty() ? "" : ", ") + value;
      } else if (key == "image") {
        image = value;
      } else if (key == "expected_order") {
        r.expected_order = positive(value, "expected_order");
      } else if (key == "expected_index") {
        r.expected_index = positive(value, "expected_index");
      } else {
        fail("unknown field '" + key + "'");
      }
    } catch (const CatalogError& e) {
      const std::string what = e.what();
      if (what.rfind("rejection", 0) == 0) throw;
      fail(what);
    }
  }
  if (open) fail("file ends inside rejection " + out.back().id);
  return out;
}

std::vector<RejectionFixture> load_rejections(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open rejections " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_rejections(ss.str());
  } catch (const CatalogError& e) {
    throw CatalogError(path + ": " + e.what());
  }
}

}  // namespace oeg::cat

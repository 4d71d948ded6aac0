#include "oeg/fpgroup/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace oeg::fp {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (const Word& r : relators) {
    add_relator(r);
  }
}

std::optional<std::uint32_t> Presentation::find_generator(std::string_view name) const {
  for (std::uint32_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::uint32_t Presentation::generator_id(std::string_view name) const {
  if (auto id = find_generator(name)) {
    return *id;
  }
  throw std::out_of_range("unknown generator '" + std::string(name) + "'");
}

const NamedSubgroup* Presentation::find_subgroup(std::string_view name) const {
  for (const auto& s : subgroups_) {
    if (s.name == name) {
      return &s;
    }
  }
  return nullptr;
}

std::uint32_t Presentation::add_generator(std::string name) {
  if (find_generator(name)) {
    throw std::invalid_argument("duplicate generator '" + name + "'");
  }
  generators_.push_back(std::move(name));
  return generator_count() - 1;
}

void Presentation::add_relator(const Word& w) {
  if (w.generator_bound() > generator_count()) {
    throw std::invalid_argument("relator uses an undeclared generator");
  }
  Word r = w.cyclically_reduced();
  if (!r.empty()) {
    relators_.push_back(std::move(r));
  }
}

void Presentation::add_subgroup(NamedSubgroup subgroup) {
  if (find_subgroup(subgroup.name)) {
    throw std::invalid_argument("duplicate subgroup '" + subgroup.name + "'");
  }
  subgroups_.push_back(std::move(subgroup));
}

std::string Presentation::format(const Word& w) const {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  const auto letters = w.letters();
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) {
      ++j;
    }
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) {
      out += ' ';
    }
    out += generators_.at(letters[i].generator());
    const long exponent = letters[i].is_inverse() ? -run : run;
    if (exponent != 1) {
      out += '^' + std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : generators_) {
    os << ' ' << g;
  }
  os << "\nrel:\n";
  for (const auto& r : relators_) {
    os << "  " << format(r) << '\n';
  }
  for (const auto& s : subgroups_) {
    os << "sub " << s.name << ':';
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      os << (i == 0 ? " " : ", ") << format(s.generators[i]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

/// A slice of the source with the position of its first character.
struct Segment {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class WordParser {
 public:
  WordParser(Segment seg, const Presentation& p) : seg_(seg), p_(p) {}

  Word parse(bool allow_equation) {
    Word lhs = parse_product();
    skip_space();
    if (peek() == '=') {
      if (!allow_equation) {
        fail("'=' is only allowed in relations");
      }
      ++pos_;
      Word rhs = parse_product();
      skip_space();
      if (!at_end()) {
        fail("unexpected '" + std::string(1, peek()) + "'");
      }
      return lhs * rhs.inverse();
    }
    if (!at_end()) {
      fail("unexpected '" + std::string(1, peek()) + "'");
    }
    return lhs;
  }

 private:
  Word parse_product() {
    Word w;
    bool any = false;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '(' || is_ident_start(c) || c == '1') {
        w *= parse_term();
        any = true;
      } else {
        break;
      }
    }
    if (!any) {
      fail(at_end() ? "empty word" : "expected a generator or '('");
    }
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_space();
    if (peek() != '^') {
      return atom;
    }
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    // Accept the TeX-ish `^{-1}` as well as `^-1`.
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++pos_;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      }
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) {
        fail("exponent too large");
      }
      ++pos_;
    }
    if (braced) {
      if (peek() != '}') {
        fail("expected '}'");
      }
      ++pos_;
    }
    if (value == 0) {
      pos_ = start;
      fail("zero exponent");
    }
    return atom.pow(static_cast<int>(negative ? -value : value));
  }

  Word parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = parse_product();
      skip_space();
      if (peek() != ')') {
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    const std::size_t start = pos_;
    while (is_ident_char(peek())) {
      ++pos_;
    }
    const std::string_view name = seg_.text.substr(start, pos_ - start);
    const auto id = p_.find_generator(name);
    if (!id) {
      pos_ = start;
      fail("undeclared generator '" + std::string(name) + "'");
    }
    return Word::generator(*id);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(seg_.text[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= seg_.text.size(); }
  char peek() const { return at_end() ? '\0' : seg_.text[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, seg_.line, seg_.column + pos_);
  }

  Segment seg_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

/// Splits on top-level commas.
std::vector<Segment> split_words(Segment seg) {
  std::vector<Segment> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = seg.text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) {
      ++lead;
    }
    std::size_t trail = piece.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(piece[trail - 1]))) {
      --trail;
    }
    if (trail > lead) {
      out.push_back(Segment{piece.substr(lead, trail - lead), seg.line, seg.column + start + lead});
    }
  };
  for (std::size_t i = 0; i < seg.text.size(); ++i) {
    const char c = seg.text[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(seg.text.size());
  return out;
}

enum class Section { none, gens, rel, sub };

}  // namespace

Word parse_word(std::string_view text, const Presentation& p, bool allow_equation) {
  return WordParser(Segment{text, 1, 1}, p).parse(allow_equation);
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  Section section = Section::none;
  NamedSubgroup* current_sub = nullptr;
  std::vector<NamedSubgroup> subs;

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    std::size_t eol = text.find('\n', cursor);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(cursor, eol - cursor);
    ++line_no;
    cursor = eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    std::size_t col = 0;
    while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col]))) {
      ++col;
    }
    if (col == line.size()) {
      continue;
    }

    std::string_view rest = line.substr(col);
    std::size_t body = col;
    auto starts_with = [&](std::string_view prefix) { return rest.substr(0, prefix.size()) == prefix; };

    if (starts_with("gens:")) {
      section = Section::gens;
      body += 5;
    } else if (starts_with("rels:") || starts_with("rel:")) {
      section = Section::rel;
      body += starts_with("rels:") ? 5 : 4;
    } else if (starts_with("sub ") || starts_with("sub\t")) {
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected ':' after subgroup name", line_no, col + 1);
      }
      std::string_view name = rest.substr(3, colon - 3);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) {
        name.remove_prefix(1);
      }
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
        name.remove_suffix(1);
      }
      if (name.empty()) {
        throw ParseError("empty subgroup name", line_no, col + 4);
      }
      for (const auto& s : subs) {
        if (s.name == name) {
          throw ParseError("duplicate subgroup '" + std::string(name) + "'", line_no, col + 1);
        }
      }
      subs.push_back(NamedSubgroup{std::string(name), {}});
      current_sub = &subs.back();
      section = Section::sub;
      body += colon + 1;
    } else if (section == Section::none) {
      throw ParseError("expected 'gens:', 'rel:' or 'sub <name>:'", line_no, col + 1);
    }

    const Segment seg{line.substr(body), line_no, body + 1};
    switch (section) {
      case Section::gens: {
        std::size_t i = 0;
        const auto t = seg.text;
        while (i < t.size()) {
          while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) {
            ++i;
          }
          if (i == t.size()) {
            break;
          }
          if (!is_ident_start(t[i])) {
            throw ParseError("invalid generator name", line_no, seg.column + i);
          }
          const std::size_t start = i;
          while (i < t.size() && is_ident_char(t[i])) {
            ++i;
          }
          if (i < t.size() && !std::isspace(static_cast<unsigned char>(t[i])) && t[i] != ',') {
            throw ParseError("invalid generator name", line_no, seg.column + i);
          }
          std::string name(t.substr(start, i - start));
          if (p.find_generator(name)) {
            throw ParseError("duplicate generator '" + name + "'", line_no, seg.column + start);
          }
          p.add_generator(std::move(name));
        }
        break;
      }
      case Section::rel:
        for (const Segment& w : split_words(seg)) {
          p.add_relator(WordParser(w, p).parse(true));
        }
        break;
      case Section::sub:
        for (const Segment& w : split_words(seg)) {
          current_sub->generators.push_back(WordParser(w, p).parse(false));
        }
        break;
      case Section::none:
        break;
    }
  }
  for (auto& s : subs) {
    p.add_subgroup(std::move(s));
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open presentation '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

Presentation kill_generators(const Presentation& p, const std::set<std::string>& killed) {
  Presentation out = p;
  for (const auto& name : killed) {
    out.add_relator(Word::generator(p.generator_id(name)));
  }
  return out;
}

}  // namespace oeg::fp

#include <cctype>
#include <sstream>

#include "ultragrade/error.hpp"
#include "ultragrade/presentation.hpp"

namespace ultragrade {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t value = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '.';
}

std::vector<Token> tokenize(std::string_view s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::uint64_t v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        if (v > (UINT64_MAX - 9) / 10) throw Error(ErrorCode::Syntax, "integer literal too large", line);
        v = v * 10 + static_cast<std::uint64_t>(s[j] - '0');
        ++j;
      }
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), v});
      i = j;
    } else if (s.substr(i, 2) == "->" || s.substr(i, 2) == ">=") {
      out.push_back({Tok::Symbol, std::string(s.substr(i, 2))});
      i += 2;
    } else if (std::string_view(":{}[](),*+-").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c)});
      ++i;
    } else {
      throw Error(ErrorCode::Syntax, std::string("unexpected character '") + c + "'", line);
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool is_word(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }
  void expect_word(std::string_view s) {
    if (!is_word(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }
  bool accept_symbol(std::string_view s) {
    if (!is_symbol(s)) return false;
    ++pos_;
    return true;
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier");
    return toks_[pos_++].text;
  }
  std::uint64_t number() {
    if (peek().kind != Tok::Number) fail("expected number");
    return toks_[pos_++].value;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input '" + peek().text + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::string near = at_end() ? "end of line" : "'" + peek().text + "'";
    throw Error(ErrorCode::Syntax, msg + " near " + near, line_);
  }
  int line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

// affine = [ nat "*" ] "n" [ ("+"|"-") nat ]
Affine parse_affine(Cursor& c) {
  Affine a{1, 0};
  if (c.peek().kind == Tok::Number) {
    a.slope = c.number();
    c.expect_symbol("*");
    if (a.slope == 0) c.fail("slope must be positive");
  }
  c.expect_word("n");
  if (c.accept_symbol("+")) {
    a.offset = static_cast<std::int64_t>(c.number());
  } else if (c.accept_symbol("-")) {
    a.offset = -static_cast<std::int64_t>(c.number());
  }
  return a;
}

std::uint32_t resolve_family(const Presentation& p, Cursor& c, const std::string& name) {
  auto f = p.find_family(name);
  if (!f) throw Error(ErrorCode::DanglingReference, "unknown vertex family '" + name + "'", c.line());
  return *f;
}

VertexRef checked_ref(const Presentation& p, Cursor& c, std::uint32_t family, std::uint64_t index) {
  VertexRef v{family, index};
  if (!p.is_valid_vertex(v)) {
    throw Error(ErrorCode::DanglingReference, "vertex index out of range for '" + p.families()[family].name + "'",
                c.line());
  }
  return v;
}

VertexRef parse_vref(const Presentation& p, Cursor& c) {
  std::string name = c.ident();
  std::uint32_t f = resolve_family(p, c, name);
  if (c.accept_symbol("[")) {
    std::uint64_t idx = c.number();
    c.expect_symbol("]");
    return checked_ref(p, c, f, idx);
  }
  if (!p.families()[f].atom) c.fail("family '" + name + "' needs an index");
  return {f, 0};
}

VertexSet parse_vset_items(const Presentation& p, Cursor& c, std::string_view closer) {
  VertexSet s = p.empty_set();
  if (c.is_symbol(closer)) return s;
  while (true) {
    std::string name = c.ident();
    std::uint32_t f = resolve_family(p, c, name);
    if (c.accept_symbol("[")) {
      if (c.accept_symbol("*")) {
        s.part(f) = p.family_universe(f);
      } else if (c.peek().kind == Tok::Number && c.is_symbol("]", 1)) {
        s.insert(checked_ref(p, c, f, c.number()));
      } else {
        Affine a = parse_affine(c);
        c.expect_word("for");
        c.expect_word("n");
        c.expect_symbol(">=");
        std::uint64_t k0 = c.number();
        if (a.at(k0) < 0) c.fail("progression has negative indices");
        if (p.families()[f].cardinality) c.fail("progression over finite family '" + name + "'");
        IndexSet prog = IndexSet::progression(a.slope, static_cast<std::uint64_t>(a.at(k0)), 0);
        s.part(f) = s.part(f) | prog;
      }
      c.expect_symbol("]");
    } else {
      if (!p.families()[f].atom) c.fail("family '" + name + "' needs an index or [*]");
      s.insert({f, 0});
    }
    if (!c.accept_symbol(",")) break;
  }
  return s;
}

VertexTemplate parse_template(const Presentation& p, Cursor& c) {
  std::string name = c.ident();
  std::uint32_t f = resolve_family(p, c, name);
  if (c.accept_symbol("[")) {
    VertexTemplate t{f, {}};
    if (c.peek().kind == Tok::Number && c.is_symbol("]", 1)) {
      t.index = {0, static_cast<std::int64_t>(checked_ref(p, c, f, c.number()).index)};
    } else {
      t.index = parse_affine(c);
    }
    c.expect_symbol("]");
    return t;
  }
  if (!p.families()[f].atom) c.fail("family '" + name + "' needs an index");
  return {f, {0, 0}};
}

void parse_statement(Presentation& p, Cursor& c, bool& have_header) {
  std::string kw = c.ident();
  if (kw == "ultragraph") {
    if (have_header) c.fail("duplicate header");
    p.set_name(c.ident());
    have_header = true;
    c.expect_end();
    return;
  }
  if (!have_header) c.fail("expected 'ultragraph <name>' header first");
  if (kw == "vertex") {
    p.add_vertex(c.ident());
  } else if (kw == "vertex_family") {
    std::string name = c.ident();
    if (c.is_word("infinite")) {
      c.ident();
      p.add_vertex_family(name, std::nullopt);
    } else {
      c.expect_word("finite");
      p.add_vertex_family(name, c.number());
    }
  } else if (kw == "edge") {
    std::string id = c.ident();
    c.expect_symbol(":");
    VertexRef src = parse_vref(p, c);
    c.expect_symbol("->");
    c.expect_symbol("{");
    VertexSet range = parse_vset_items(p, c, "}");
    c.expect_symbol("}");
    if (range.is_empty()) throw Error(ErrorCode::EmptyRange, "edge '" + id + "' has empty range", c.line());
    p.add_edge(id, src, std::move(range));
  } else if (kw == "edge_family") {
    std::string id = c.ident();
    c.expect_symbol("[");
    c.expect_word("n");
    c.expect_symbol("]");
    c.expect_symbol("(");
    c.expect_word("n");
    c.expect_symbol(">=");
    std::uint64_t first = c.number();
    c.expect_symbol(")");
    c.expect_symbol(":");
    VertexTemplate src = parse_template(p, c);
    c.expect_symbol("->");
    c.expect_symbol("{");
    std::vector<VertexTemplate> range;
    if (!c.is_symbol("}")) {
      do {
        range.push_back(parse_template(p, c));
      } while (c.accept_symbol(","));
    }
    c.expect_symbol("}");
    if (range.empty()) throw Error(ErrorCode::EmptyRange, "edge family '" + id + "' has empty range", c.line());
    p.add_edge_family(id, first, src, std::move(range));
  } else {
    c.fail("unknown statement '" + kw + "'");
  }
  c.expect_end();
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_header = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    Cursor c(tokenize(text.substr(start, end - start), line_no), line_no);
    if (!c.at_end()) {
      try {
        parse_statement(p, c, have_header);
      } catch (const Error& e) {
        if (e.line() != 0) throw;
        throw Error(e.code(), e.what(), line_no);
      }
    }
    start = end + 1;
  }
  if (!have_header) throw Error(ErrorCode::Syntax, "missing 'ultragraph <name>' header", line_no);
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "ultragraph " << p.name() << '\n';
  for (const auto& f : p.families()) {
    if (f.atom) {
      os << "vertex " << f.name << '\n';
    } else if (f.cardinality) {
      os << "vertex_family " << f.name << " finite " << *f.cardinality << '\n';
    } else {
      os << "vertex_family " << f.name << " infinite\n";
    }
  }
  for (const auto& e : p.edges()) {
    os << "edge " << e.id << " : " << p.vertex_label(e.source) << " -> { " << p.set_label(e.range) << " }\n";
  }
  for (const auto& f : p.edge_families()) {
    os << "edge_family " << f.id << "[n] (n >= " << f.first << ") : " << p.template_label(f.source) << " -> { ";
    for (std::size_t i = 0; i < f.range.size(); ++i) {
      if (i) os << ", ";
      os << p.template_label(f.range[i]);
    }
    os << " }\n";
  }
  return os.str();
}

VertexSet parse_vertex_set(const Presentation& p, std::string_view text) {
  Cursor c(tokenize(text, 0), 0);
  VertexSet s = parse_vset_items(p, c, "");
  c.expect_end();
  return s;
}

EdgeInst parse_edge_inst(const Presentation& p, std::string_view text) {
  Cursor c(tokenize(text, 0), 0);
  std::string id = c.ident();
  EdgeInst e;
  if (c.accept_symbol("[")) {
    auto fam = p.find_edge_family(id);
    if (!fam) throw Error(ErrorCode::DanglingReference, "unknown edge family '" + id + "'");
    e = EdgeInst::of_family(*fam, c.number());
    c.expect_symbol("]");
  } else {
    auto edge = p.find_edge(id);
    if (!edge) throw Error(ErrorCode::DanglingReference, "unknown edge '" + id + "'");
    e = EdgeInst::single(*edge);
  }
  c.expect_end();
  if (!p.is_valid_edge(e)) throw Error(ErrorCode::DanglingReference, "edge family member below its first index");
  return e;
}

}  // namespace ultragrade

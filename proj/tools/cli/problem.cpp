#include "problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "nart/error.hpp"

namespace nart::cli {

InputError::InputError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const std::vector<std::string>& task_verbs() {
  static const std::vector<std::string> verbs{
      "order",     "solve-nested", "approximate",     "homogenize", "eliminate", "intersect-module",
      "idealize",  "chevalley",    "syzygies",        "kernel",     "check-injective",
      "preimage",  "weierstrass",  "lift",            "implicit"};
  return verbs;
}

RingPtr ProblemFile::x_ring() const { return x_subring(ring); }

RingPtr ProblemFile::y_ring() const {
  if (ring->y_count() == 0) return nullptr;
  std::vector<std::string> names(ring->names().begin() + static_cast<std::ptrdiff_t>(ring->x_count()),
                                 ring->names().end());
  return make_ring(ring->field(), names);
}

namespace {

// A statement after comment stripping and bracket continuation, with the
// source position of every character.
struct Statement {
  std::string text;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  std::size_t first_line = 0;
};

std::vector<Statement> split_statements(std::string_view text) {
  std::vector<Statement> out;
  Statement current;
  int depth = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (current.text.empty()) current.first_line = line_no;
    if (!current.text.empty()) {
      current.text.push_back(' ');
      current.where.emplace_back(line_no, 1);
    }
    for (std::size_t i = 0; i < line.size(); ++i) {
      char ch = line[i];
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') --depth;
      current.text.push_back(ch);
      current.where.emplace_back(line_no, i + 1);
    }
    bool blank = std::all_of(current.text.begin(), current.text.end(),
                             [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    if (blank) {
      current = Statement{};
    } else if (depth <= 0) {
      out.push_back(std::move(current));
      current = Statement{};
      depth = 0;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!current.text.empty()) out.push_back(std::move(current));
  return out;
}

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_ident(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

struct Range {
  std::size_t begin;
  std::size_t end;
};

class Parser {
 public:
  explicit Parser(ProblemFile& problem) : p_(problem) {}

  void statement(const Statement& s) {
    s_ = &s;
    pos_ = 0;
    skip();
    std::size_t kw_at = pos_;
    std::string kw = identifier("a declaration keyword");
    if (kw == "field") return field();
    if (kw == "ring") return ring();
    if (kw == "task") return task();
    if (!p_.ring) fail_at(kw_at, "'" + kw + "' before the ring declaration");
    if (kw == "precision") return precision();
    if (kw == "series") return series();
    if (kw == "hensel") return hensel();
    if (kw == "matrix") return matrix();
    if (kw == "vector") return vector();
    if (kw == "nesting") return nesting();
    if (kw == "ideal") return ideal();
    if (kw == "module") return module();
    if (kw == "morphism") return morphism();
    fail_at(kw_at, "unknown declaration '" + kw + "'");
  }

  void finish(std::size_t last_line) {
    if (!p_.ring) throw InputError(last_line, 1, "missing ring declaration");
    if (p_.task.verb.empty()) throw InputError(last_line, 1, "missing task directive");
  }

 private:
  [[noreturn]] void fail_at(std::size_t index, const std::string& message) const {
    if (index < s_->where.size()) {
      throw InputError(s_->where[index].first, s_->where[index].second, message);
    }
    std::size_t line = s_->where.empty() ? s_->first_line : s_->where.back().first;
    std::size_t col = s_->where.empty() ? 1 : s_->where.back().second + 1;
    throw InputError(line, col, message);
  }

  const std::string& text() const { return s_->text; }
  bool at_end() const { return pos_ >= text().size(); }
  void skip() {
    while (!at_end() && is_space(text()[pos_])) ++pos_;
  }

  std::string identifier(const std::string& what) {
    skip();
    if (at_end() || !is_ident_start(text()[pos_])) fail_at(pos_, "expected " + what);
    std::size_t start = pos_;
    while (!at_end() && is_ident(text()[pos_])) ++pos_;
    return text().substr(start, pos_ - start);
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && !is_space(text()[pos_])) ++pos_;
    return text().substr(start, pos_ - start);
  }

  void expect(char ch) {
    skip();
    if (at_end() || text()[pos_] != ch) fail_at(pos_, std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (!at_end() && text()[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    skip();
    if (!at_end()) fail_at(pos_, "unexpected trailing text");
  }

  unsigned number(const std::string& what) {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text()[pos_]))) ++pos_;
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(text().data() + start, text().data() + pos_, value);
    if (start == pos_ || ec != std::errc() || value > 1000000) fail_at(start, "expected " + what);
    (void)ptr;
    return static_cast<unsigned>(value);
  }

  void new_name(const std::string& name, std::size_t at) {
    if (p_.ring && p_.ring->index_of(name)) fail_at(at, "'" + name + "' is a ring variable");
    if (!declared_.insert(name).second) fail_at(at, "'" + name + "' is already declared");
  }

  std::string declared_name() {
    skip();
    std::size_t at = pos_;
    std::string name = identifier("a name");
    if (name == "O") fail_at(at, "'O' is reserved");
    new_name(name, at);
    return name;
  }

  // Top-level separators inside [begin, end).
  std::vector<Range> split(Range r, char sep) const {
    std::vector<Range> parts;
    int depth = 0;
    std::size_t start = r.begin;
    for (std::size_t i = r.begin; i < r.end; ++i) {
      char ch = text()[i];
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') --depth;
      if (ch == sep && depth == 0) {
        parts.push_back({start, i});
        start = i + 1;
      }
    }
    parts.push_back({start, r.end});
    return parts;
  }

  Range trimmed(Range r) const {
    while (r.begin < r.end && is_space(text()[r.begin])) ++r.begin;
    while (r.end > r.begin && is_space(text()[r.end - 1])) --r.end;
    return r;
  }

  // Matching closer for the opener at `open`.
  std::size_t closing(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < text().size(); ++i) {
      char ch = text()[i];
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') {
        if (--depth == 0) return i;
      }
    }
    fail_at(open, "unbalanced bracket");
  }

  // Contents of a bracketed group starting at the cursor.
  Range group(char open, char close) {
    skip();
    if (at_end() || text()[pos_] != open) fail_at(pos_, std::string("expected '") + open + "'");
    std::size_t end = closing(pos_);
    if (text()[end] != close) fail_at(end, std::string("expected '") + close + "'");
    Range inner{pos_ + 1, end};
    pos_ = end + 1;
    return inner;
  }

  std::vector<Range> items(Range inner) const {
    if (trimmed(inner).begin == trimmed(inner).end) return {};
    auto parts = split(inner, ',');
    for (auto& r : parts) {
      r = trimmed(r);
      if (r.begin == r.end) fail_at(r.begin, "empty entry");
    }
    return parts;
  }

  ExprValue expression(const RingPtr& ring, Range r, bool with_names = true) const {
    r = trimmed(r);
    if (r.begin == r.end) fail_at(r.begin, "expected an expression");
    NameLookup lookup;
    if (with_names) {
      lookup = [this](std::string_view name) -> const ExprValue* {
        auto it = p_.series.find(name);
        return it == p_.series.end() ? nullptr : &it->second;
      };
    }
    std::string_view sv(text().data() + r.begin, r.end - r.begin);
    try {
      return parse_expression(ring, sv, lookup);
    } catch (const ParseError& e) {
      fail_at(r.begin + e.column() - 1, e.what());
    } catch (const Error& e) {
      fail_at(r.begin, e.what());
    }
  }

  Polynomial polynomial(const RingPtr& ring, Range r) const {
    ExprValue v = expression(ring, r);
    if (!v.exact()) fail_at(trimmed(r).begin, "expected a polynomial, found a truncated series");
    return v.value;
  }

  Range rest() {
    skip();
    return {pos_, text().size()};
  }

  void field() {
    if (field_seen_) fail_at(0, "field declared twice");
    if (p_.ring) fail_at(0, "field must precede the ring declaration");
    field_seen_ = true;
    std::size_t at = (skip(), pos_);
    std::string kind = identifier("'Q' or 'Fp'");
    if (kind == "Q") {
      p_.field = Field::rationals();
    } else if (kind == "Fp") {
      skip();
      std::size_t num_at = pos_;
      std::string digits = word();
      unsigned long long m = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        fail_at(num_at, "expected a modulus");
      }
      if (!is_prime(m)) fail_at(num_at, "modulus " + digits + " is not prime");
      if (m >= (1ULL << 31)) fail_at(num_at, "modulus " + digits + " exceeds 2^31");
      p_.field = Field::prime(m);
    } else {
      fail_at(at, "unknown field '" + kind + "'");
    }
    expect_end();
  }

  std::vector<std::string> block(const std::string& label) {
    std::string got = identifier("'" + label + ":'");
    if (got != label) fail_at(pos_ - got.size(), "expected '" + label + ":'");
    expect(':');
    std::vector<std::string> names;
    while (true) {
      skip();
      if (at_end() || text()[pos_] == ';') break;
      std::size_t at = pos_;
      std::string n = identifier("a variable name");
      if (n == "O" || n == "u") fail_at(at, "'" + n + "' is reserved");
      if (std::find(all_vars_.begin(), all_vars_.end(), n) != all_vars_.end()) {
        fail_at(at, "variable '" + n + "' declared twice");
      }
      all_vars_.push_back(n);
      names.push_back(n);
    }
    return names;
  }

  void ring() {
    if (p_.ring) fail_at(0, "ring declared twice");
    auto xs = block("x");
    if (xs.empty()) fail_at(pos_, "the x-block needs at least one variable");
    std::vector<std::string> ys;
    if (accept(';')) ys = block("y");
    expect_end();
    std::vector<std::string> names = xs;
    names.insert(names.end(), ys.begin(), ys.end());
    p_.ring = make_ring(p_.field, names, xs.size());
    for (const auto& n : names) {
      if (declared_.count(n)) fail_at(0, "'" + n + "' clashes with a declared name");
    }
  }

  void precision() {
    if (p_.precision) fail_at(0, "precision declared twice");
    unsigned c = number("a precision");
    if (c == 0) fail_at(pos_ - 1, "precision must be positive");
    p_.precision = c;
    expect_end();
  }

  void series() {
    std::string name = declared_name();
    expect('=');
    p_.series.emplace(name, expression(p_.ring, rest()));
  }

  void hensel() {
    std::string name = declared_name();
    expect(':');
    Range body = rest();
    std::string unknown = "u";
    // Optional trailing "in <name>".
    auto last_in = text().rfind(" in ");
    if (last_in != std::string::npos && last_in >= body.begin && text().find('@', last_in) == std::string::npos) {
      std::size_t save = pos_;
      pos_ = last_in + 4;
      std::size_t at = (skip(), pos_);
      unknown = identifier("an unknown name");
      expect_end();
      if (p_.ring->index_of(unknown) || declared_.count(unknown)) fail_at(at, "'" + unknown + "' is already used");
      pos_ = save;
      body.end = last_in;
    }
    auto at_sign = text().rfind('@', body.end == 0 ? 0 : body.end - 1);
    if (at_sign == std::string::npos || at_sign < body.begin) fail_at(body.end, "expected '@ <seed>'");
    RingPtr ext = extend_ring(p_.ring, {unknown});
    std::size_t u = ext->size() - 1;
    ExprValue F = expression(ext, {body.begin, at_sign}, false);
    if (!F.exact()) fail_at(body.begin, "the defining polynomial must be exact");
    Polynomial seed = polynomial(p_.ring, {at_sign + 1, body.end});
    if (seed.degree() > 0) fail_at(at_sign + 1, "seed must be a constant");
    if (!F.value.involves(u)) fail_at(body.begin, "the defining polynomial does not involve '" + unknown + "'");
    try {
      p_.hensel.emplace(name, HenselDecl{HenselCode(F.value, u, seed.constant_term()), unknown});
    } catch (const Error& e) {
      fail_at(body.begin, e.what());
    }
  }

  std::vector<ExprValue> row(Range inner) const {
    std::vector<ExprValue> out;
    for (Range r : items(inner)) out.push_back(expression(p_.ring, r));
    return out;
  }

  void matrix() {
    std::string name = declared_name();
    expect('=');
    Range outer = group('[', ']');
    expect_end();
    std::vector<std::vector<ExprValue>> rows;
    for (Range r : items(outer)) {
      std::size_t save = pos_;
      pos_ = r.begin;
      Range inner = group('[', ']');
      if (trimmed({pos_, r.end}).begin != r.end) fail_at(pos_, "unexpected text after a matrix row");
      pos_ = save;
      rows.push_back(row(inner));
      if (rows.back().empty()) fail_at(r.begin, "empty matrix row");
      if (rows.back().size() != rows.front().size()) fail_at(r.begin, "matrix rows differ in length");
    }
    if (rows.empty()) fail_at(outer.begin, "empty matrix");
    p_.matrices.emplace(name, std::move(rows));
  }

  void vector() {
    std::string name = declared_name();
    expect('=');
    Range inner = group('[', ']');
    expect_end();
    auto v = row(inner);
    if (v.empty()) fail_at(inner.begin, "empty vector");
    p_.vectors.emplace(name, std::move(v));
  }

  void nesting() {
    std::string name = declared_name();
    expect('=');
    std::vector<std::size_t> sigma;
    while ((skip(), !at_end())) {
      std::size_t at = pos_;
      unsigned s = number("a nesting bound");
      if (s > p_.ring->size()) fail_at(at, "nesting bound exceeds the number of variables");
      sigma.push_back(s);
    }
    if (sigma.empty()) fail_at(pos_, "empty nesting profile");
    p_.nestings.emplace(name, std::move(sigma));
  }

  std::vector<Polynomial> ideal_body(const RingPtr& ring, Range inner) const {
    std::vector<Polynomial> gens;
    for (Range r : items(inner)) gens.push_back(polynomial(ring, r));
    return gens;
  }

  void ideal() {
    std::string name = declared_name();
    expect('=');
    Range inner = group('(', ')');
    expect_end();
    p_.ideals.emplace(name, PolyIdeal(p_.ring, ideal_body(p_.ring, inner)));
  }

  void module() {
    std::string name = declared_name();
    expect('=');
    Range inner = group('{', '}');
    std::optional<std::size_t> rank;
    skip();
    if (!at_end()) {
      std::string kw = identifier("'rank'");
      if (kw != "rank") fail_at(pos_ - kw.size(), "expected 'rank'");
      rank = number("a rank");
      if (*rank == 0) fail_at(pos_ - 1, "rank must be positive");
      expect_end();
    }
    std::vector<std::vector<Polynomial>> gens;
    for (Range r : items(inner)) {
      std::size_t save = pos_;
      pos_ = r.begin;
      Range v = group('(', ')');
      if (trimmed({pos_, r.end}).begin != r.end) fail_at(pos_, "unexpected text after a module element");
      pos_ = save;
      gens.push_back(ideal_body(p_.ring, v));
      if (gens.back().empty()) fail_at(r.begin, "empty module element");
      if (!rank) rank = gens.back().size();
      if (gens.back().size() != *rank) fail_at(r.begin, "module element has the wrong length");
    }
    if (!rank) fail_at(inner.begin, "an empty module needs 'rank k'");
    p_.modules.emplace(name, PolyModule(p_.ring, *rank, std::move(gens)));
  }

  // An inline `( ... )` ideal or the name of a declared ideal, moved to `ring`.
  PolyIdeal ideal_ref(const RingPtr& ring) {
    skip();
    if (!at_end() && text()[pos_] == '(') return PolyIdeal(ring, ideal_body(ring, group('(', ')')));
    std::size_t at = pos_;
    std::string n = identifier("an ideal");
    auto it = p_.ideals.find(n);
    if (it == p_.ideals.end()) fail_at(at, declared_.count(n) ? "'" + n + "' is not an ideal" : "undeclared name '" + n + "'");
    std::vector<Polynomial> gens;
    for (const auto& g : it->second.generators) {
      try {
        gens.push_back(parse_polynomial(ring, to_string(g)));
      } catch (const ParseError&) {
        fail_at(at, "ideal '" + n + "' uses variables outside this ring");
      }
    }
    return PolyIdeal(ring, std::move(gens));
  }

  void morphism() {
    std::string name = declared_name();
    if (p_.ring->y_count() == 0) fail_at(0, "morphisms need a y-block");
    expect(':');
    RingPtr src = p_.x_ring();
    RingPtr tgt = p_.y_ring();
    Range body = rest();
    std::size_t with_at = std::string::npos;
    for (std::size_t i = body.begin; i + 4 <= body.end; ++i) {
      if (text().compare(i, 4, "with") == 0 && (i == 0 || !is_ident(text()[i - 1])) &&
          (i + 4 == body.end || !is_ident(text()[i + 4]))) {
        with_at = i;
        break;
      }
    }
    Range maps{body.begin, with_at == std::string::npos ? body.end : with_at};
    std::vector<std::optional<Image>> images(src->size());
    for (Range r : split(maps, ';')) {
      r = trimmed(r);
      if (r.begin == r.end) fail_at(r.begin, "empty image assignment");
      auto arrow = text().find("->", r.begin);
      if (arrow == std::string::npos || arrow >= r.end) fail_at(r.begin, "expected '<variable> -> <expression>'");
      pos_ = r.begin;
      std::string var = identifier("a source variable");
      auto idx = src->index_of(var);
      if (!idx) fail_at(r.begin, "'" + var + "' is not an x-variable");
      if (images[*idx]) fail_at(r.begin, "image of '" + var + "' given twice");
      ExprValue v = expression(tgt, {arrow + 2, r.end}, false);
      if (v.exact()) {
        images[*idx] = Image(v.value);
      } else {
        images[*idx] = Image(TruncatedSeries::from_polynomial(v.value, *v.order));
      }
    }
    std::vector<Image> imgs;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) fail_at(maps.end, "missing image of '" + src->name(i) + "'");
      imgs.push_back(*images[i]);
    }
    PolyIdeal I(src, {});
    PolyIdeal J(tgt, {});
    if (with_at != std::string::npos) {
      pos_ = with_at + 4;
      bool seen_i = false;
      bool seen_j = false;
      do {
        std::size_t at = (skip(), pos_);
        std::string which = identifier("'I' or 'J'");
        expect('=');
        if (which == "I" && !seen_i) {
          I = ideal_ref(src);
          seen_i = true;
        } else if (which == "J" && !seen_j) {
          J = ideal_ref(tgt);
          seen_j = true;
        } else {
          fail_at(at, "expected 'I' or 'J' once each");
        }
      } while (accept(','));
      expect_end();
    }
    try {
      p_.morphisms.emplace(name, AlgebraMorphism(src, tgt, std::move(imgs), std::move(I), std::move(J)));
    } catch (const Error& e) {
      fail_at(body.begin, e.what());
    }
  }

  void task() {
    if (!p_.task.verb.empty()) fail_at(0, "more than one task directive");
    skip();
    std::size_t at = pos_;
    std::string verb = word();
    const auto& verbs = task_verbs();
    if (verb.empty()) fail_at(at, "expected a task verb");
    if (std::find(verbs.begin(), verbs.end(), verb) == verbs.end()) fail_at(at, "unknown task '" + verb + "'");
    Task t;
    t.verb = verb;
    t.line = s_->where[at].first;
    while ((skip(), !at_end())) {
      std::size_t w_at = pos_;
      std::string w = word();
      if (auto eq = w.find('='); eq != std::string::npos) {
        std::string key = w.substr(0, eq);
        if (key.empty() || eq + 1 == w.size()) fail_at(w_at, "expected key=value");
        if (!t.params.emplace(key, w.substr(eq + 1)).second) fail_at(w_at, "parameter '" + key + "' given twice");
        continue;
      }
      if (!t.params.empty()) fail_at(w_at, "positional argument after key=value parameters");
      if (!declared_.count(w)) fail_at(w_at, "undeclared name '" + w + "'");
      t.args.push_back({w, s_->where[w_at].first, s_->where[w_at].second});
    }
    p_.task = std::move(t);
  }

  ProblemFile& p_;
  const Statement* s_ = nullptr;
  std::size_t pos_ = 0;
  bool field_seen_ = false;
  std::set<std::string> declared_;
  std::vector<std::string> all_vars_;
};

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile problem;
  Parser parser(problem);
  auto statements = split_statements(text);
  std::size_t last_line = 1;
  for (const auto& s : statements) {
    parser.statement(s);
    last_line = s.where.empty() ? s.first_line : s.where.back().first;
  }
  parser.finish(last_line);
  return problem;
}

}  // namespace nart::cli

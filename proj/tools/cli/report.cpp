#include "report.hpp"

#include <charconv>
#include <sstream>

#include "nart/error.hpp"
#include "nart/nested.hpp"
#include "nart/span.hpp"

namespace nart::cli {

namespace {

class Runner {
 public:
  Runner(const ProblemFile& p, const RunOptions& o) : p_(p), o_(o) {}

  std::string run() {
    const auto& v = p_.task.verb;
    out_ << "task: " << v;
    for (const auto& a : p_.task.args) out_ << ' ' << a.text;
    for (const auto& [k, val] : p_.task.params) out_ << ' ' << k << '=' << val;
    out_ << '\n';
    out_ << "field: " << p_.field.to_string() << '\n';
    if (v == "order") order();
    else if (v == "solve-nested") solve();
    else if (v == "approximate") approx();
    else if (v == "homogenize") homog();
    else if (v == "eliminate") elim();
    else if (v == "intersect-module") intersect();
    else if (v == "idealize") idealize();
    else if (v == "chevalley") chevalley();
    else if (v == "syzygies") syz();
    else if (v == "kernel") kernel();
    else if (v == "check-injective") injective();
    else if (v == "preimage") pre();
    else if (v == "weierstrass") weierstrass();
    else if (v == "lift") lift();
    else if (v == "implicit") implicit();
    return out_.str();
  }

 private:
  [[noreturn]] void arg_error(std::size_t i, const std::string& message) const {
    if (i < p_.task.args.size()) throw InputError(p_.task.args[i].line, p_.task.args[i].column, message);
    throw InputError(p_.task.line, 1, message);
  }

  void arity(std::size_t n) const {
    if (p_.task.args.size() != n) {
      throw InputError(p_.task.line, 1,
                       "task '" + p_.task.verb + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }
  }

  template <class Map>
  const typename Map::mapped_type& get(const Map& m, std::size_t i, const std::string& kind) const {
    if (i >= p_.task.args.size()) arg_error(i, "missing " + kind + " argument");
    auto it = m.find(p_.task.args[i].text);
    if (it == m.end()) arg_error(i, "'" + p_.task.args[i].text + "' is not " + kind);
    return it->second;
  }

  unsigned precision() const {
    if (o_.order) return *o_.order;
    if (p_.precision) return *p_.precision;
    throw InputError(p_.task.line, 1, "no precision given (use 'precision c' or --order)");
  }

  std::optional<unsigned> uparam(const std::string& key) const {
    auto it = p_.task.params.find(key);
    if (it == p_.task.params.end()) return std::nullopt;
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc() || ptr != it->second.data() + it->second.size()) {
      throw InputError(p_.task.line, 1, "parameter '" + key + "' needs a nonnegative integer");
    }
    return v;
  }

  void allow_params(std::initializer_list<std::string> keys) const {
    for (const auto& [k, v] : p_.task.params) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        throw InputError(p_.task.line, 1, "unknown parameter '" + k + "' for task '" + p_.task.verb + "'");
      }
    }
  }

  static std::string yes(bool b) { return b ? "yes" : "no"; }

  void list(const std::string& label, const std::vector<Polynomial>& ps) {
    out_ << label << " (" << ps.size() << "):\n";
    for (const auto& p : ps) out_ << "  " << to_string(p) << '\n';
  }

  void module_list(const std::string& label, const PolyModule& M) {
    out_ << label << " (rank " << M.rank << ", " << M.generators.size() << " generators):\n";
    for (const auto& g : M.generators) {
      out_ << "  (";
      for (std::size_t i = 0; i < g.size(); ++i) out_ << (i ? ", " : "") << to_string(g[i]);
      out_ << ")\n";
    }
  }

  void series_vector(const std::string& prefix, const SeriesVector& v, std::size_t first = 1) {
    for (std::size_t i = 0; i < v.size(); ++i) out_ << prefix << (i + first) << " = " << to_string(v[i]) << '\n';
  }

  NestedLinearSystem system(unsigned c) const {
    const auto& T = get(p_.matrices, 0, "a matrix");
    const auto& b = get(p_.vectors, 1, "a vector");
    const auto& s = get(p_.nestings, 2, "a nesting profile");
    if (T.size() != b.size()) arg_error(1, "vector length differs from the matrix row count");
    if (T.front().size() != s.size()) arg_error(2, "nesting length differs from the matrix column count");
    NestedLinearSystem sys;
    for (const auto& row : T) {
      std::vector<TruncatedSeries> r;
      for (const auto& e : row) r.push_back(e.to_series(c));
      sys.T.push_back(std::move(r));
    }
    for (const auto& e : b) sys.b.push_back(e.to_series(c));
    sys.profile = NestedProfile(s);
    sys.c = c;
    for (const auto& row : T) {
      for (const auto& e : row) {
        if (e.order && *e.order < c) arg_error(0, "matrix entry known only to order " + std::to_string(*e.order));
      }
    }
    for (const auto& e : b) {
      if (e.order && *e.order < c) arg_error(1, "vector entry known only to order " + std::to_string(*e.order));
    }
    return sys;
  }

  void solution(const NestedLinearSystem& sys, const SolutionSet& s) {
    out_ << "status: " << (s.solvable ? "SOLVABLE" : "UNSOLVABLE") << '\n';
    out_ << "precision: " << sys.c << '\n';
    out_ << "nesting: ";
    for (std::size_t i = 0; i < sys.profile.size(); ++i) out_ << (i ? " " : "") << sys.profile[i];
    out_ << '\n';
    if (!s.solvable) {
      if (s.obstruction_degree) out_ << "obstruction degree: " << *s.obstruction_degree << '\n';
      out_ << "validity order: " << sys.c << '\n';
      return;
    }
    series_vector("y", s.particular);
    out_ << "nullspace dimension: " << s.nullspace.size() << '\n';
    for (std::size_t k = 0; k < s.nullspace.size(); ++k) {
      out_ << "kernel " << (k + 1) << ":";
      for (const auto& e : s.nullspace[k]) out_ << "  [" << to_string(e.polynomial()) << "]";
      out_ << '\n';
    }
    out_ << "residual zero below " << sys.c << ": " << yes(is_solution(sys, s.particular, sys.c)) << '\n';
    out_ << "validity order: " << s.validity_order << '\n';
  }

  void order() {
    arity(1);
    allow_params({});
    const auto& f = get(p_.series, 0, "a series");
    out_ << "series: " << (f.exact() ? to_string(f.value) : to_string(f.to_series(*f.order))) << '\n';
    if (f.exact()) {
      if (f.value.is_zero()) out_ << "order: infinite\n";
      else out_ << "order: " << f.value.valuation() << '\n';
      out_ << "validity order: exact\n";
    } else {
      auto s = f.to_series(*f.order);
      if (s.is_zero()) out_ << "order: >= " << s.known_order() << '\n';
      else out_ << "order: " << s.valuation() << '\n';
      out_ << "validity order: " << s.known_order() << '\n';
    }
  }

  void solve() {
    arity(3);
    allow_params({});
    auto sys = system(precision());
    solution(sys, solve_nested(sys));
  }

  void approx() {
    arity(4);
    allow_params({"agree"});
    unsigned c = precision();
    auto sys = system(c);
    const auto& target = get(p_.vectors, 3, "a vector");
    if (target.size() != sys.unknowns()) arg_error(3, "target length differs from the unknown count");
    unsigned agree = uparam("agree").value_or(c);
    SeriesVector t;
    for (const auto& e : target) t.push_back(e.to_series(e.order.value_or(c)));
    out_ << "agreement order: " << agree << '\n';
    solution(sys, approximate(sys, t, agree));
  }

  void homog() {
    arity(3);
    allow_params({});
    auto sys = system(precision());
    auto h = homogenize(sys);
    out_ << "homogenized nesting:";
    for (std::size_t i = 0; i < h.profile.size(); ++i) out_ << ' ' << h.profile[i];
    out_ << '\n';
    out_ << "homogenized matrix:\n";
    for (const auto& row : h.T) {
      out_ << "  [";
      for (std::size_t j = 0; j < row.size(); ++j) out_ << (j ? ", " : "") << to_string(row[j].polynomial());
      out_ << "]\n";
    }
    auto y = solve_via_homogenization(sys, HomogeneousPin::constant_term);
    out_ << "status: " << (y ? "SOLVABLE" : "UNSOLVABLE") << '\n';
    out_ << "precision: " << sys.c << '\n';
    if (y) {
      series_vector("y", *y);
      out_ << "residual zero below " << sys.c << ": " << yes(is_solution(sys, *y, sys.c)) << '\n';
      out_ << "nested: " << yes(is_nested(sys.profile, *y)) << '\n';
    }
    out_ << "validity order: " << sys.c << '\n';
  }

  void elim() {
    arity(1);
    allow_params({});
    const auto& I = get(p_.ideals, 0, "an ideal");
    unsigned c = precision();
    unsigned cp = o_.working_order.value_or(c + 8);
    if (cp < c) throw InputError(p_.task.line, 1, "working order below precision");
    auto K = eliminate_ideal(I);
    list("elimination ideal", K.generators);
    out_ << "working order: " << cp << '\n';
    for (const auto& cmp : compare_elimination(I, c, cp)) {
      out_ << "c=" << cmp.c << " exact span=" << cmp.exact.size() << " candidate span=" << cmp.candidates_at_max.size();
      if (cmp.stabilized_at) out_ << " stabilized at=" << *cmp.stabilized_at;
      else out_ << " stabilized at=none";
      out_ << '\n';
    }
    list("truncated elimination at c=" + std::to_string(c), truncated_completion_elimination(I, c, cp));
    out_ << "validity order: " << c << '\n';
  }

  std::size_t block_size(std::size_t rank) const {
    std::size_t p = uparam("p").value_or(1);
    if (p > rank) throw InputError(p_.task.line, 1, "p exceeds the module rank");
    return p;
  }

  void intersect() {
    arity(1);
    allow_params({"p"});
    const auto& M = get(p_.modules, 0, "a module");
    std::size_t p = block_size(M.rank);
    out_ << "front block: " << p << '\n';
    module_list("intersection", module_intersect_zero_block(M, p));
    out_ << "validity order: exact\n";
  }

  void idealize() {
    arity(1);
    allow_params({"p"});
    const auto& M = get(p_.modules, 0, "a module");
    std::size_t p = block_size(M.rank);
    auto idl = nagata_idealize(M, p);
    out_ << "front block: " << p << '\n';
    out_ << "idealization ring:";
    for (const auto& n : idl.ideal.ring->names()) out_ << ' ' << n;
    out_ << '\n';
    list("idealization", idl.ideal.generators);
    auto route = idealization_route(idl, p_.x_ring());
    module_list("route", route);
    out_ << "route agrees with intersection: " << yes(same_module(route, module_intersect_zero_block(M, p))) << '\n';
    out_ << "validity order: exact\n";
  }

  void chevalley() {
    arity(1);
    allow_params({"p"});
    const auto& M = get(p_.modules, 0, "a module");
    std::size_t p = block_size(M.rank);
    unsigned cmax = precision();
    bool truncated = o_.mode == ChevalleyModeFlag::truncated;
    out_ << "mode: " << (truncated ? "truncated" : "exact") << '\n';
    out_ << "front block: " << p << '\n';
    for (unsigned c = 1; c <= cmax; ++c) {
      unsigned D = o_.working_order.value_or(c + 4);
      auto r = chevalley_beta(M, p, c, truncated ? ChevalleyMode::truncated : ChevalleyMode::exact, truncated ? D : 0);
      out_ << "c=" << c << " beta=" << r.beta;
      if (truncated) out_ << " D=" << r.working_order;
      out_ << '\n';
    }
    out_ << "validity order: " << (truncated ? "per row D" : "exact") << '\n';
  }

  void syz() {
    arity(1);
    allow_params({});
    const auto& T = get(p_.matrices, 0, "a matrix");
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& r : T) {
      std::vector<Polynomial> row;
      for (const auto& e : r) {
        if (!e.exact()) arg_error(0, "syzygies need polynomial entries");
        row.push_back(e.value);
      }
      rows.push_back(std::move(row));
    }
    module_list("syzygies", syzygies(rows));
    out_ << "validity order: exact\n";
  }

  void kernel() {
    arity(1);
    allow_params({});
    const auto& phi = get(p_.morphisms, 0, "a morphism");
    unsigned c = precision();
    std::vector<unsigned> schedule = default_kernel_schedule(c);
    if (o_.working_order) {
      if (*o_.working_order < c) throw InputError(p_.task.line, 1, "working order below precision");
      schedule.clear();
      for (unsigned cp = c; cp <= *o_.working_order; ++cp) schedule.push_back(cp);
    }
    auto r = truncated_completion_kernel(phi, c, schedule);
    if (r.exact_kernel) {
      list("exact kernel", r.exact_kernel->generators);
    } else {
      out_ << "exact kernel: unavailable (series images)\n";
    }
    out_ << "schedule:";
    for (unsigned cp : schedule) out_ << ' ' << cp;
    out_ << '\n';
    list("candidate basis at c=" + std::to_string(c), r.candidate_basis);
    out_ << "stabilized: " << yes(r.stabilized) << '\n';
    if (r.exact_kernel) {
      auto ex = exact_kernel_truncation(phi, *r.exact_kernel, c);
      out_ << "matches exact kernel truncation: " << yes(same_kernel_span(phi, ex, r.candidate_basis, c)) << '\n';
    }
    out_ << "validity order: " << c << '\n';
  }

  void injective() {
    arity(1);
    allow_params({});
    const auto& phi = get(p_.morphisms, 0, "a morphism");
    unsigned c = precision();
    unsigned cp = o_.working_order.value_or(c + 4);
    auto r = check_strong_injectivity(phi, c, cp);
    out_ << "working order: " << cp << '\n';
    list("exact kernel", r.exact_kernel.generators);
    list("exact kernel span below " + std::to_string(c), r.exact_span);
    list("candidate span below " + std::to_string(c), r.candidate_span);
    out_ << "injective: " << yes(r.exact_kernel.is_zero()) << '\n';
    out_ << "spans equal: " << yes(r.equal) << '\n';
    out_ << "validity order: " << c << '\n';
  }

  void pre() {
    arity(2);
    allow_params({});
    const auto& phi = get(p_.morphisms, 0, "a morphism");
    const auto& b = get(p_.series, 1, "a series");
    unsigned c = precision();
    Polynomial in_target(phi.target());
    try {
      in_target = parse_polynomial(phi.target(), to_string(b.value));
    } catch (const ParseError&) {
      arg_error(1, "'" + p_.task.args[1].text + "' must involve y-variables only");
    }
    Image img = b.exact() ? Image(in_target) : Image(TruncatedSeries::from_polynomial(in_target, *b.order));
    auto f = preimage(phi, img, c);
    if (f) {
      out_ << "status: FOUND\n";
      out_ << "preimage = " << to_string(*f) << '\n';
    } else {
      out_ << "status: NONE\n";
    }
    out_ << "validity order: " << c << '\n';
  }

  void weierstrass() {
    arity(2);
    allow_params({});
    unsigned c = precision();
    const auto& fv = get(p_.series, 0, "a series");
    auto d = regularity_order(fv.to_series(fv.order.value_or(c + 1)));
    unsigned need = weierstrass_working_order(d.value_or(1), c);
    const auto& gv = get(p_.series, 1, "a series");
    auto f = fv.to_series(fv.order.value_or(need));
    auto g = gv.to_series(gv.order.value_or(need));
    auto r = weierstrass_divide(f, g, c);
    out_ << "regularity order: " << r.d << '\n';
    out_ << "working order: " << r.working_order << '\n';
    out_ << "q = " << to_string(r.q) << '\n';
    series_vector("a", r.a, 0);
    out_ << "validity order: " << c << '\n';
  }

  void lift() {
    arity(1);
    allow_params({});
    const auto& h = get(p_.hensel, 0, "a hensel code");
    unsigned c = precision();
    HenselCode::Stats stats;
    auto f = h.code.lift(c, &stats);
    out_ << "lift = " << to_string(f) << '\n';
    out_ << "newton steps: " << stats.newton_steps << '\n';
    out_ << "validity order: " << f.known_order() << '\n';
  }

  void implicit() {
    arity(1);
    allow_params({});
    unsigned c = precision();
    const auto& name = p_.task.args[0].text;
    if (auto it = p_.hensel.find(name); it != p_.hensel.end()) {
      HenselCode::Stats stats;
      auto g = implicit_solve(it->second.code.defining(), it->second.code.unknown(), c, &stats);
      out_ << it->second.unknown_name << " = " << to_string(g) << '\n';
      out_ << "validity order: " << g.known_order() << '\n';
      return;
    }
    const auto& fv = get(p_.series, 0, "a series or hensel code");
    auto r = implicit_linear(fv.to_series(fv.order.value_or(c + 1)), c);
    out_ << "h = " << to_string(r.h) << '\n';
    out_ << "u = " << to_string(r.u) << '\n';
    out_ << "validity order: " << c << '\n';
  }

  const ProblemFile& p_;
  const RunOptions& o_;
  std::ostringstream out_;
};

}  // namespace

std::string run(const ProblemFile& problem, const RunOptions& options) { return Runner(problem, options).run(); }

Outcome execute(std::string_view text, const RunOptions& options) {
  Outcome o;
  try {
    o.out = run(parse_problem(text), options);
  } catch (const InputError& e) {
    o.exit_code = 1;
    o.err = std::string("input error: ") + e.what() + "\n";
  } catch (const Error& e) {
    o.exit_code = e.code() == ErrorCode::internal_invariant ? 2 : 1;
    o.err = std::string(o.exit_code == 2 ? "internal error: " : "error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    o.exit_code = 2;
    o.err = std::string("internal error: ") + e.what() + "\n";
  }
  return o;
}

}  // namespace nart::cli

#include "permdeg/pcpres.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "permdeg/errors.hpp"

namespace permdeg {

namespace {

struct Tok {
  enum Type { Ident, Int, Sym, End };
  Type type = End;
  std::string s;
  std::int64_t v = 0;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::string where(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : ""; }

std::string normalize_var(const std::string& s) {
  if (s == "ν") return "nu";
  if (s == "ω") return "omega";
  return s;
}

std::vector<Tok> lex(const std::string& text, int line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (std::isdigit(c)) {
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > (std::int64_t{1} << 40)) throw InputError(where(line) + "integer too large");
        ++i;
      }
      out.push_back({Tok::Int, {}, v});
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), 0});
      i = j;
      continue;
    }
    static const char* two[] = {"..", "==", "!=", "<=", ">=", "&&"};
    bool matched = false;
    for (const char* t : two) {
      if (text.compare(i, 2, t) == 0) {
        out.push_back({Tok::Sym, t, 0});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string("[]{}(),=^*+-%<>").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, static_cast<char>(c)), 0});
      ++i;
      continue;
    }
    throw InputError(where(line) + "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  out.push_back({Tok::End, {}, 0});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Tok> toks, int line) : toks_(std::move(toks)), line_(line) {}

  const Tok& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().type == Tok::End; }
  bool is_sym(const char* s) const { return peek().type == Tok::Sym && peek().s == s; }
  bool is_ident(const char* s) const { return peek().type == Tok::Ident && peek().s == s; }
  Tok next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { throw InputError(where(line_) + msg); }

  void expect(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    next();
  }

  Expr cond() {
    Expr e = cmp();
    while (is_ident("and") || is_sym("&&")) {
      next();
      e = Expr{Expr::Op::And, 0, {}, {e, cmp()}};
    }
    return e;
  }

  Expr cmp() {
    Expr e = sum();
    static const std::pair<const char*, Expr::Op> ops[] = {
        {"==", Expr::Op::Eq}, {"!=", Expr::Op::Ne}, {"<=", Expr::Op::Le},
        {">=", Expr::Op::Ge}, {"<", Expr::Op::Lt},  {">", Expr::Op::Gt}};
    for (const auto& [s, op] : ops) {
      if (is_sym(s)) {
        next();
        return Expr{op, 0, {}, {e, sum()}};
      }
    }
    return e;
  }

  Expr sum() {
    Expr e = term();
    while (is_sym("+") || is_sym("-")) {
      auto op = next().s == "+" ? Expr::Op::Add : Expr::Op::Sub;
      e = Expr{op, 0, {}, {e, term()}};
    }
    return e;
  }

  Expr term() {
    Expr e = unary();
    while (is_sym("*") || is_sym("%")) {
      auto op = next().s == "*" ? Expr::Op::Mul : Expr::Op::Mod;
      e = Expr{op, 0, {}, {e, unary()}};
    }
    return e;
  }

  Expr unary() {
    if (is_sym("-")) {
      next();
      return Expr{Expr::Op::Neg, 0, {}, {unary()}};
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (is_sym("^")) {
      next();
      return Expr{Expr::Op::Pow, 0, {}, {base, unary()}};
    }
    return base;
  }

  Expr atom() {
    const Tok& t = peek();
    if (t.type == Tok::Int) return Expr::number(next().v);
    if (t.type == Tok::Ident) return Expr::variable(normalize_var(next().s));
    if (is_sym("(")) {
      next();
      Expr e = cond();
      expect(")");
      return e;
    }
    if (is_sym("{")) {
      next();
      Expr e = cond();
      expect("}");
      return e;
    }
    fail("expected an integer expression");
  }

  Word word() {
    std::vector<Word> parts{factor()};
    while (is_sym("*")) {
      next();
      parts.push_back(factor());
    }
    if (parts.size() == 1) return parts[0];
    return Word{Word::Kind::Prod, {}, std::move(parts), {}};
  }

  Word factor() {
    Word base = primary();
    if (is_sym("^")) {
      next();
      return Word{Word::Kind::Pow, {}, {base}, exponent()};
    }
    return base;
  }

  Expr exponent() {
    if (is_sym("-")) {
      next();
      return Expr{Expr::Op::Neg, 0, {}, {exponent()}};
    }
    const Tok& t = peek();
    if (t.type == Tok::Int) return Expr::number(next().v);
    if (t.type == Tok::Ident) return Expr::variable(normalize_var(next().s));
    if (is_sym("(") || is_sym("{")) return atom();
    fail("expected an exponent");
  }

  Word primary() {
    const Tok& t = peek();
    if (t.type == Tok::Ident) return Word{Word::Kind::Gen, next().s, {}, {}};
    if (t.type == Tok::Int) {
      if (t.v != 1) fail("only 1 may appear as a group element literal");
      next();
      return Word{};
    }
    if (is_sym("[")) {
      next();
      Word acc = word();
      int count = 1;
      while (is_sym(",")) {
        next();
        acc = Word{Word::Kind::Comm, {}, {acc, word()}, {}};
        ++count;
      }
      if (count < 2) fail("commutator needs at least two entries");
      expect("]");
      return acc;
    }
    if (is_sym("(")) {
      next();
      Word w = word();
      expect(")");
      return w;
    }
    fail("expected a group element");
  }

 private:
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  int line_;
};

void collect_vars(const Expr& e, std::set<std::string>& out) {
  if (e.op == Expr::Op::Var) out.insert(e.var);
  for (const auto& a : e.args) collect_vars(a, out);
}

void collect_word(const Word& w, std::set<std::string>& gens, std::set<std::string>& vars) {
  if (w.kind == Word::Kind::Gen) gens.insert(w.gen);
  if (w.kind == Word::Kind::Pow) collect_vars(w.exponent, vars);
  for (const auto& p : w.parts) collect_word(p, gens, vars);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& s) {
  auto k = s.find('#');
  return k == std::string::npos ? s : s.substr(0, k);
}

bool valid_ident(const std::string& s) {
  if (s.empty() || !ident_start(static_cast<unsigned char>(s[0]))) return false;
  for (unsigned char c : s)
    if (!ident_char(c)) return false;
  return true;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  if (e < 0) throw InputError("negative power in integer expression");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > (std::int64_t{1} << 52) || r < -(std::int64_t{1} << 52))
      throw InputError("integer expression overflows");
  }
  return r;
}

bool is_atom(const Expr& e) { return e.op == Expr::Op::Num || e.op == Expr::Op::Var; }

std::string wrap(const Expr& e) { return is_atom(e) ? format_expr(e) : "(" + format_expr(e) + ")"; }

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeParams prime_params(int p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw InputError("p = 2 is not supported; an odd prime is required");
  auto powmod = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  PrimeParams out;
  for (int a = 2; a < p; ++a) {
    if (powmod(a, (p - 1) / 2) == p - 1) {
      out.nu = a;
      break;
    }
  }
  std::vector<int> qs;
  int m = p - 1;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) qs.push_back(m);
  for (int g = 2; g < p; ++g) {
    bool prim = true;
    for (int q : qs) prim = prim && powmod(g, (p - 1) / q) != 1;
    if (prim) {
      out.omega = g;
      break;
    }
  }
  return out;
}

Expr parse_expr(const std::string& text) {
  Parser ps(lex(text, 0), 0);
  Expr e = ps.cond();
  if (!ps.at_end()) ps.fail("trailing input in expression '" + text + "'");
  return e;
}

Word parse_word(const std::string& text) {
  Parser ps(lex(text, 0), 0);
  Word w = ps.word();
  if (!ps.at_end()) ps.fail("trailing input in word '" + text + "'");
  return w;
}

std::int64_t eval_expr(const Expr& e, const Bindings& b) {
  using Op = Expr::Op;
  auto a = [&](int i) { return eval_expr(e.args[i], b); };
  switch (e.op) {
    case Op::Num: return e.num;
    case Op::Var: {
      if (e.var == "p") return b.p;
      if (e.var == "nu") return b.prime.nu;
      if (e.var == "omega") return b.prime.omega;
      auto it = b.params.find(e.var);
      if (it == b.params.end()) throw InputError("unknown parameter '" + e.var + "'");
      return it->second;
    }
    case Op::Neg: return -a(0);
    case Op::Add: return a(0) + a(1);
    case Op::Sub: return a(0) - a(1);
    case Op::Mul: return a(0) * a(1);
    case Op::Mod: {
      std::int64_t m = a(1);
      if (m == 0) throw InputError("modulus by zero");
      return ((a(0) % m) + m) % m;
    }
    case Op::Pow: return ipow(a(0), a(1));
    case Op::Eq: return a(0) == a(1);
    case Op::Ne: return a(0) != a(1);
    case Op::Lt: return a(0) < a(1);
    case Op::Le: return a(0) <= a(1);
    case Op::Gt: return a(0) > a(1);
    case Op::Ge: return a(0) >= a(1);
    case Op::And: return a(0) && a(1);
  }
  return 0;
}

std::string format_expr(const Expr& e) {
  using Op = Expr::Op;
  auto bin = [&](const char* op) { return wrap(e.args[0]) + op + wrap(e.args[1]); };
  switch (e.op) {
    case Op::Num: return std::to_string(e.num);
    case Op::Var: return e.var;
    case Op::Neg: return "-" + wrap(e.args[0]);
    case Op::Add: return bin("+");
    case Op::Sub: return bin("-");
    case Op::Mul: return bin("*");
    case Op::Mod: return bin("%");
    case Op::Pow: return bin("^");
    case Op::Eq: return bin("==");
    case Op::Ne: return bin("!=");
    case Op::Lt: return bin("<");
    case Op::Le: return bin("<=");
    case Op::Gt: return bin(">");
    case Op::Ge: return bin(">=");
    case Op::And: return wrap(e.args[0]) + " and " + wrap(e.args[1]);
  }
  return {};
}

std::string format_word(const Word& w) {
  switch (w.kind) {
    case Word::Kind::One: return "1";
    case Word::Kind::Gen: return w.gen;
    case Word::Kind::Prod: {
      std::string out;
      for (std::size_t i = 0; i < w.parts.size(); ++i) {
        if (i) out += "*";
        const Word& x = w.parts[i];
        out += x.kind == Word::Kind::Prod ? "(" + format_word(x) + ")" : format_word(x);
      }
      return out;
    }
    case Word::Kind::Pow: {
      const Word& base = w.parts[0];
      bool paren = base.kind == Word::Kind::Prod || base.kind == Word::Kind::Pow;
      std::string b = paren ? "(" + format_word(base) + ")" : format_word(base);
      return b + "^" + (is_atom(w.exponent) ? format_expr(w.exponent) : "(" + format_expr(w.exponent) + ")");
    }
    case Word::Kind::Comm:
      return "[" + format_word(w.parts[0]) + "," + format_word(w.parts[1]) + "]";
  }
  return {};
}

std::vector<Relation> Presentation::power_relations() const {
  std::vector<Relation> out;
  for (const auto& r : relations)
    if (r.lhs.kind == Word::Kind::Pow && r.lhs.parts[0].kind == Word::Kind::Gen) out.push_back(r);
  return out;
}

std::vector<Relation> Presentation::commutator_relations() const {
  std::vector<Relation> out;
  for (const auto& r : relations) {
    if (r.lhs.kind == Word::Kind::Comm && r.lhs.parts[0].kind == Word::Kind::Gen &&
        r.lhs.parts[1].kind == Word::Kind::Gen)
      out.push_back(r);
  }
  return out;
}

std::vector<Relation> Presentation::all_relations() const {
  std::vector<Relation> out = relations;
  if (!omitted_trivial) return out;
  std::set<std::pair<std::string, std::string>> seen;
  auto note = [&](const Word& w) {
    if (w.kind == Word::Kind::Comm && w.parts[0].kind == Word::Kind::Gen &&
        w.parts[1].kind == Word::Kind::Gen) {
      seen.insert({w.parts[0].gen, w.parts[1].gen});
      seen.insert({w.parts[1].gen, w.parts[0].gen});
    }
  };
  for (const auto& r : relations) {
    note(r.lhs);
    note(r.rhs);
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (seen.count({generators[i], generators[j]})) continue;
      Word c{Word::Kind::Comm, {}, {Word{Word::Kind::Gen, generators[j], {}, {}}, Word{Word::Kind::Gen, generators[i], {}, {}}}, {}};
      out.push_back({c, Word{}, 0});
    }
  }
  return out;
}

std::vector<std::string> Presentation::parameters() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    for (const auto& x : out)
      if (x == s) return;
    out.push_back(s);
  };
  for (const auto& [k, v] : defaults) add(k);
  for (const auto& r : ranges) add(r.param);
  return out;
}

Presentation parse_presentation(const std::string& text) {
  Presentation pres;
  bool have_header = false;
  bool have_gens = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<std::pair<int, std::set<std::string>>> used_vars;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = strip_comment(raw);
    auto words = split_ws(body);
    if (words.empty()) continue;
    const std::string& key = words[0];
    if (key == "group") {
      if (have_header) throw InputError(where(line) + "duplicate group header");
      if (words.size() < 4 || words[2] != "prime")
        throw InputError(where(line) + "expected 'group <name> prime <p>'");
      have_header = true;
      pres.name = words[1];
      if (words[3] != "p") {
        try {
          pres.fixed_prime = std::stoi(words[3]);
        } catch (const std::exception&) {
          throw InputError(where(line) + "bad prime '" + words[3] + "'");
        }
        if (!is_prime(*pres.fixed_prime)) throw InputError(where(line) + "header prime is not prime");
      }
      for (std::size_t i = 4; i < words.size(); ++i) {
        if (words[i] != "param" || i + 1 >= words.size())
          throw InputError(where(line) + "expected 'param name=value'");
        const std::string& kv = words[++i];
        auto eq = kv.find('=');
        if (eq == std::string::npos || !valid_ident(kv.substr(0, eq)))
          throw InputError(where(line) + "expected 'param name=value'");
        Expr v;
        try {
          v = parse_expr(kv.substr(eq + 1));
        } catch (const InputError& e) {
          throw InputError(where(line) + e.what());
        }
        std::set<std::string> vs;
        collect_vars(v, vs);
        used_vars.push_back({line, vs});
        pres.defaults.push_back({kv.substr(0, eq), v});
      }
      continue;
    }
    if (!have_header) throw InputError(where(line) + "missing 'group' header");
    if (key == "gens") {
      if (have_gens) throw InputError(where(line) + "duplicate gens line");
      have_gens = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!valid_ident(words[i])) throw InputError(where(line) + "bad generator name '" + words[i] + "'");
        for (const auto& g : pres.generators)
          if (g == words[i]) throw InputError(where(line) + "generator '" + g + "' declared twice");
        pres.generators.push_back(words[i]);
      }
      if (pres.generators.empty()) throw InputError(where(line) + "no generators declared");
      continue;
    }
    if (key == "omitted") {
      if (words.size() != 3 || words[1] != "commutators" || words[2] != "trivial")
        throw InputError(where(line) + "expected 'omitted commutators trivial'");
      pres.omitted_trivial = true;
      continue;
    }
    Parser ps(lex(body, line), line);
    if (key == "order") {
      ps.next();
      if (pres.order) ps.fail("duplicate order line");
      pres.order = ps.cond();
      if (!ps.at_end()) ps.fail("trailing input after order");
      std::set<std::string> vs;
      collect_vars(*pres.order, vs);
      used_vars.push_back({line, vs});
      continue;
    }
    if (key == "range") {
      ps.next();
      ParamRange r;
      r.line = line;
      if (ps.peek().type != Tok::Ident) ps.fail("expected parameter name");
      r.param = ps.next().s;
      ps.expect("=");
      std::set<std::string> vs;
      while (true) {
        Expr lo = ps.sum();
        collect_vars(lo, vs);
        std::optional<Expr> hi;
        if (ps.is_sym("..")) {
          ps.next();
          hi = ps.sum();
          collect_vars(*hi, vs);
        }
        r.items.push_back({lo, hi});
        if (!ps.is_sym(",")) break;
        ps.next();
      }
      if (ps.is_ident("if")) {
        ps.next();
        r.cond = ps.cond();
        collect_vars(*r.cond, vs);
      }
      if (!ps.at_end()) ps.fail("trailing input after range");
      vs.erase(r.param);
      used_vars.push_back({line, vs});
      pres.ranges.push_back(std::move(r));
      continue;
    }
    if (!have_gens) throw InputError(where(line) + "relations before 'gens' line");
    std::vector<Word> chain{ps.word()};
    while (ps.is_sym("=")) {
      ps.next();
      chain.push_back(ps.word());
    }
    if (!ps.at_end()) ps.fail("unexpected '" + ps.peek().s + "'");
    if (chain.size() < 2) ps.fail("relation needs '='");
    std::set<std::string> gs, vs;
    for (const auto& w : chain) collect_word(w, gs, vs);
    for (const auto& g : gs) {
      bool known = false;
      for (const auto& d : pres.generators) known = known || d == g;
      if (!known) ps.fail("unknown generator '" + g + "'");
    }
    used_vars.push_back({line, vs});
    std::vector<Relation> rels;
    if (chain.back().kind == Word::Kind::One) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) rels.push_back({chain[i], chain.back(), line});
    } else {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) rels.push_back({chain[i], chain[i + 1], line});
    }
    for (auto& r : rels) {
      for (const auto& o : pres.relations)
        if (o == r) ps.fail("duplicate relation " + format_word(r.lhs) + " = " + format_word(r.rhs));
      pres.relations.push_back(std::move(r));
    }
  }
  if (!have_header) throw InputError("missing 'group' header");
  if (!have_gens) throw InputError("missing 'gens' line");
  auto params = pres.parameters();
  for (const auto& [ln, vs] : used_vars) {
    for (const auto& v : vs) {
      if (v == "p" || v == "nu" || v == "omega") continue;
      bool known = false;
      for (const auto& q : params) known = known || q == v;
      if (!known) throw InputError(where(ln) + "unknown parameter '" + v + "'");
    }
  }
  return pres;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << "group " << pres.name << " prime "
      << (pres.fixed_prime ? std::to_string(*pres.fixed_prime) : std::string("p"));
  for (const auto& [k, v] : pres.defaults) out << " param " << k << "=" << format_expr(v);
  out << "\ngens";
  for (const auto& g : pres.generators) out << " " << g;
  out << "\n";
  if (pres.order) out << "order " << format_expr(*pres.order) << "\n";
  if (pres.omitted_trivial) out << "omitted commutators trivial\n";
  for (const auto& r : pres.ranges) {
    out << "range " << r.param << " =";
    for (std::size_t i = 0; i < r.items.size(); ++i) {
      out << (i ? ", " : " ") << format_expr(r.items[i].first);
      if (r.items[i].second) out << ".." << format_expr(*r.items[i].second);
    }
    if (r.cond) out << " if " << format_expr(*r.cond);
    out << "\n";
  }
  for (const auto& r : pres.relations) out << format_word(r.lhs) << " = " << format_word(r.rhs) << "\n";
  return out.str();
}

Bindings bind(const Presentation& pres, int p, const std::map<std::string, std::string>& overrides) {
  if (p == 0) {
    if (!pres.fixed_prime) throw InputError("a prime is required for " + pres.name);
    p = *pres.fixed_prime;
  }
  if (pres.fixed_prime && *pres.fixed_prime != p)
    throw InputError(pres.name + " is only defined for p = " + std::to_string(*pres.fixed_prime));
  Bindings b;
  b.p = p;
  b.prime = prime_params(p);
  auto params = pres.parameters();
  for (const auto& [k, v] : overrides) {
    bool known = false;
    for (const auto& q : params) known = known || q == k;
    if (!known) throw InputError("unknown parameter '" + k + "' for " + pres.name);
  }
  for (const auto& name : params) {
    const ParamRange* applicable = nullptr;
    bool has_range = false;
    for (const auto& r : pres.ranges) {
      if (r.param != name) continue;
      has_range = true;
      if (!r.cond || eval_expr(*r.cond, b)) {
        applicable = &r;
        break;
      }
    }
    if (has_range && !applicable)
      throw InputError("no valid range of " + name + " for p = " + std::to_string(p));
    std::optional<std::int64_t> value;
    if (auto it = overrides.find(name); it != overrides.end()) {
      value = eval_expr(parse_expr(it->second), b);
    } else {
      for (const auto& [k, v] : pres.defaults)
        if (k == name) value = eval_expr(v, b);
      if (!value && applicable) value = eval_expr(applicable->items.front().first, b);
    }
    if (!value) throw InputError("parameter '" + name + "' is not set");
    if (applicable) {
      auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
      bool ok = false;
      for (const auto& [lo, hi] : applicable->items) {
        std::int64_t a = eval_expr(lo, b);
        if (!hi) {
          ok = ok || mod(a) == mod(*value);
        } else {
          std::int64_t z = eval_expr(*hi, b);
          for (std::int64_t x = a; x <= z && !ok; ++x) ok = mod(x) == mod(*value);
        }
      }
      if (!ok)
        throw InputError(name + " = " + std::to_string(*value) + " is outside the valid range for p = " +
                         std::to_string(p));
    }
    b.params[name] = *value;
  }
  return b;
}

std::vector<std::map<std::string, std::string>> parameter_choices(const Presentation& pres, int p) {
  Bindings b = bind(pres, p);
  std::vector<std::map<std::string, std::string>> out{{}};
  for (const auto& name : pres.parameters()) {
    std::vector<std::string> values;
    for (const auto& r : pres.ranges) {
      if (r.param != name || (r.cond && !eval_expr(*r.cond, b))) continue;
      for (const auto& [lo, hi] : r.items) {
        if (!hi) {
          values.push_back(format_expr(lo));
          continue;
        }
        for (std::int64_t x = eval_expr(lo, b), z = eval_expr(*hi, b); x <= z; ++x) values.push_back(std::to_string(x));
      }
      break;
    }
    if (values.empty()) continue;  // fixed by a default
    std::vector<std::map<std::string, std::string>> next;
    for (const auto& partial : out)
      for (const auto& v : values) {
        auto m = partial;
        m[name] = v;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace permdeg

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permdeg/pcgroup.hpp"

namespace permdeg {

// Integer expression over p, nu, omega and named parameters.
struct Expr {
  enum class Op { Num, Var, Neg, Add, Sub, Mul, Mod, Pow, Eq, Ne, Lt, Le, Gt, Ge, And };
  Op op = Op::Num;
  std::int64_t num = 0;
  std::string var;
  std::vector<Expr> args;

  bool operator==(const Expr&) const = default;

  static Expr number(std::int64_t v) { return Expr{Op::Num, v, {}, {}}; }
  static Expr variable(std::string v) { return Expr{Op::Var, 0, std::move(v), {}}; }
};

struct Word {
  enum class Kind { One, Gen, Prod, Pow, Comm };
  Kind kind = Kind::One;
  std::string gen;
  std::vector<Word> parts;
  Expr exponent;

  bool operator==(const Word&) const = default;
};

struct Relation {
  Word lhs;
  Word rhs;
  int line = 0;

  bool operator==(const Relation& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// Values allowed for a parameter, applying when cond holds. Each item is a
// single value or an inclusive span lo..hi.
struct ParamRange {
  std::string param;
  std::vector<std::pair<Expr, std::optional<Expr>>> items;
  std::optional<Expr> cond;
  int line = 0;

  bool operator==(const ParamRange& o) const {
    return param == o.param && items == o.items && cond == o.cond;
  }
};

struct Presentation {
  std::string name;
  std::optional<int> fixed_prime;
  std::vector<std::pair<std::string, Expr>> defaults;
  std::vector<std::string> generators;
  std::optional<Expr> order;
  std::vector<ParamRange> ranges;
  std::vector<Relation> relations;
  // Commutators of generator pairs that no relation mentions are trivial.
  bool omitted_trivial = false;

  bool operator==(const Presentation&) const = default;

  // Relations plus the implied trivial commutators.
  std::vector<Relation> all_relations() const;

  // Relations x^k = w with x a generator.
  std::vector<Relation> power_relations() const;
  // Relations [x, y] = w with x, y generators.
  std::vector<Relation> commutator_relations() const;
  std::vector<std::string> parameters() const;
};

struct PrimeParams {
  int nu = 0;     // least quadratic non-residue
  int omega = 0;  // least primitive root
};

bool is_prime(std::int64_t n);
PrimeParams prime_params(int p);

struct Bindings {
  int p = 0;
  PrimeParams prime;
  std::map<std::string, std::int64_t> params;
};

Expr parse_expr(const std::string& text);
std::int64_t eval_expr(const Expr& e, const Bindings& b);
Word parse_word(const std::string& text);

Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);
std::string format_presentation(const Presentation& pres);
std::string format_expr(const Expr& e);
std::string format_word(const Word& w);

// Fixes p and every parameter. Overrides are expressions such as "nu" or "3".
// Unset parameters take the header default, else the first value of the
// applicable range.
Bindings bind(const Presentation& pres, int p,
              const std::map<std::string, std::string>& overrides = {});

// Every combination of parameter values allowed at p, as overrides for bind.
// Single range items keep their source text ("nu"); spans are expanded.
std::vector<std::map<std::string, std::string>> parameter_choices(const Presentation& pres, int p);

struct RefineOptions {
  int max_gens = 6;
  bool check_order = true;
};

// Largest finite p-quotient of the presented group as a consistent pc
// presentation; the named generators are kept as images.
std::shared_ptr<PcGroup> refine(const Presentation& pres, const Bindings& b,
                                const RefineOptions& opt = {});

// Evaluates a word on the named generators of g.
Elem eval_word(const PcGroup& g, const Word& w, const Bindings& b);

// Overlap test words of the pc presentation; empty when consistent.
std::vector<std::string> consistency_check(const PcGroup& g);

}  // namespace permdeg

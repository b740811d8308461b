#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "factoromata/automata.hpp"

// First-order queries over naturals with named automaton predicates,
// compiled to DFAs. The surface syntax is a small Walnut-style language:
// quantifiers `E`/`A` (glued forms like `Aj` allowed), connectives
// ~ & | => <=>, atoms $name(term, ...), comparisons with = != < <= > >=,
// terms with + and natural (relational) -. An optional leading `?lsd_2`
// is accepted and ignored. A quantifier's body extends to the end of the
// enclosing parenthesized group.
namespace factoromata {

struct QueryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Term {
    enum class Kind { Var, Const, Add, Sub };
    Kind kind = Kind::Var;
    std::string name;         // Var
    std::uint64_t value = 0;  // Const
    std::unique_ptr<Term> lhs, rhs;
    int pos = 0;  // byte offset in the source text
};

struct Formula {
    enum class Kind {
        Atom, Compare, Not, And, Or, Implies, Iff, Exists, Forall
    };
    enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

    Kind kind = Kind::Atom;
    std::string pred;            // Atom
    std::vector<Term> args;      // Atom
    Rel rel = Rel::Eq;           // Compare
    std::unique_ptr<Term> tlhs, trhs;
    std::unique_ptr<Formula> a, b;  // children; Not/quantifiers use a
    std::vector<std::string> bound;  // Exists/Forall variables
    int pos = 0;
};

// Throws QueryError with a byte position on malformed input.
std::unique_ptr<Formula> parse(const std::string& text);

// Named predicates; argument order is the automaton's track order.
class PredicateRegistry {
  public:
    // Rejects duplicate names and automata that are not padding-invariant.
    void add(const std::string& name, Dfa d);
    const Dfa& at(const std::string& name) const;
    bool has(const std::string& name) const;

  private:
    std::map<std::string, Dfa> preds_;
};

// Registry with the seed predicates: factauto, gamma, a3, a5.
PredicateRegistry standard_registry();

// Variables of f not bound by any quantifier, sorted.
std::vector<std::string> free_variables(const Formula& f);

// Compiles to a minimized DFA over the free variables (track order =
// alphabetical). Terms become fresh projected tracks via the add/const
// relations; natural subtraction t = a - b is relational (t + b = a);
// `A` is compiled as ~E~. Throws QueryError on unbound/rebound variables,
// unknown predicates, arity mismatches, or an empty free-variable set.
Dfa compile(const Formula& f, const PredicateRegistry& reg);
Dfa compile_query(const std::string& text, const PredicateRegistry& reg);

// The gap automata over (n, r): position n starts a gap of length r in
// Sbar (gaps) or in S (sgaps). Registry must contain factauto.
Dfa gaps_dfa(const PredicateRegistry& reg);
Dfa sgaps_dfa(const PredicateRegistry& reg);
// Their source texts, for display and for the reference interpreter.
const char* gaps_query_text();
const char* sgaps_query_text();

// Projects away the first (position) track, determinizes, minimizes, and
// enumerates accepted lengths up to bound. The degenerate value r = 0,
// which the gap formulas accept vacuously (n and n+0 are not distinct
// members), is not a gap length and is excluded.
std::set<std::uint64_t> gap_length_set(const Dfa& d, std::uint64_t bound);

// Reference interpreter: quantifiers searched over [0, quantifier_bound].
// Exact for formulas whose quantified variables are range-guarded below
// the bound. Terms evaluate partially: a - b with b > a has no value and
// falsifies its atom, matching the relational compilation.
using PredicateEval =
    std::function<bool(const std::string&, const std::vector<std::uint64_t>&)>;
bool eval_formula(const Formula& f, const PredicateEval& predicates,
                  const std::map<std::string, std::uint64_t>& env,
                  std::uint64_t quantifier_bound);

}  // namespace factoromata

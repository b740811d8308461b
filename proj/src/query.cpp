#include "factoromata/query.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "factoromata/seeds.hpp"

namespace factoromata {
namespace {

enum class Tok {
    LParen, RParen, And, Or, Not, Implies, Iff,
    Eq, Ne, Lt, Le, Gt, Ge,
    Plus, Minus, Comma, Dollar, Ident, Number, End
};

struct Token {
    Tok type = Tok::End;
    int pos = 0;
    std::string text;
    std::uint64_t num = 0;
};

[[noreturn]] void fail(int pos, const std::string& msg) {
    throw QueryError(msg + " at position " + std::to_string(pos));
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i < s.size() && s[i] == '?') {
        // the only supported numeration marker; it is the default anyway
        if (s.compare(i, 6, "?lsd_2") == 0) i += 6;
        else fail(static_cast<int>(i), "unsupported numeration system marker");
    }
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        int pos = static_cast<int>(i);
        char c = s[i];
        auto push = [&](Tok t, std::size_t len) {
            out.push_back({t, pos, s.substr(i, len), 0});
            i += len;
        };
        if (c == '(') { push(Tok::LParen, 1); continue; }
        if (c == ')') { push(Tok::RParen, 1); continue; }
        if (c == '&') { push(Tok::And, 1); continue; }
        if (c == '|') { push(Tok::Or, 1); continue; }
        if (c == '~') { push(Tok::Not, 1); continue; }
        if (c == '+') { push(Tok::Plus, 1); continue; }
        if (c == '-') { push(Tok::Minus, 1); continue; }
        if (c == ',') { push(Tok::Comma, 1); continue; }
        if (c == '$') { push(Tok::Dollar, 1); continue; }
        if (c == '<') {
            if (s.compare(i, 3, "<=>") == 0) { push(Tok::Iff, 3); continue; }
            if (s.compare(i, 2, "<=") == 0) { push(Tok::Le, 2); continue; }
            push(Tok::Lt, 1);
            continue;
        }
        if (c == '=') {
            if (s.compare(i, 2, "=>") == 0) { push(Tok::Implies, 2); continue; }
            push(Tok::Eq, 1);
            continue;
        }
        if (c == '>') {
            if (s.compare(i, 2, ">=") == 0) { push(Tok::Ge, 2); continue; }
            push(Tok::Gt, 1);
            continue;
        }
        if (c == '!') {
            if (s.compare(i, 2, "!=") == 0) { push(Tok::Ne, 2); continue; }
            fail(pos, "unexpected '!'");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                std::uint64_t d = static_cast<std::uint64_t>(s[j] - '0');
                if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                    fail(pos, "integer literal too large");
                v = v * 10 + d;
                ++j;
            }
            out.push_back({Tok::Number, pos, s.substr(i, j - i), v});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, pos, s.substr(i, j - i), 0});
            i = j;
            continue;
        }
        fail(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, static_cast<int>(s.size()), "", 0});
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::unique_ptr<Formula> parse_all() {
        auto f = formula();
        if (peek().type != Tok::End) fail(peek().pos, "trailing input");
        return f;
    }

  private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& peek() const { return toks_[at_]; }
    Token take() {
        Token t = toks_[at_];
        if (t.type != Tok::End) ++at_;
        return t;
    }
    bool accept(Tok t) {
        if (peek().type == t) { ++at_; return true; }
        return false;
    }
    void expect(Tok t, const char* what) {
        if (!accept(t)) fail(peek().pos, std::string("expected ") + what);
    }

    static std::unique_ptr<Formula> node(Formula::Kind k, int pos) {
        auto f = std::make_unique<Formula>();
        f->kind = k;
        f->pos = pos;
        return f;
    }

    std::unique_ptr<Formula> formula() { return iff(); }

    std::unique_ptr<Formula> iff() {
        auto l = implication();
        while (peek().type == Tok::Iff) {
            int pos = take().pos;
            auto n = node(Formula::Kind::Iff, pos);
            n->a = std::move(l);
            n->b = implication();
            l = std::move(n);
        }
        return l;
    }

    std::unique_ptr<Formula> implication() {
        auto l = disjunction();
        if (peek().type == Tok::Implies) {
            int pos = take().pos;
            auto n = node(Formula::Kind::Implies, pos);
            n->a = std::move(l);
            n->b = implication();  // right associative
            return n;
        }
        return l;
    }

    std::unique_ptr<Formula> disjunction() {
        auto l = conjunction();
        while (peek().type == Tok::Or) {
            int pos = take().pos;
            auto n = node(Formula::Kind::Or, pos);
            n->a = std::move(l);
            n->b = conjunction();
            l = std::move(n);
        }
        return l;
    }

    std::unique_ptr<Formula> conjunction() {
        auto l = unary();
        while (peek().type == Tok::And) {
            int pos = take().pos;
            auto n = node(Formula::Kind::And, pos);
            n->a = std::move(l);
            n->b = unary();
            l = std::move(n);
        }
        return l;
    }

    static bool is_quantifier(const Token& t) {
        return t.type == Tok::Ident && !t.text.empty() &&
               (t.text[0] == 'A' || t.text[0] == 'E');
    }

    std::unique_ptr<Formula> unary() {
        if (peek().type == Tok::Not) {
            int pos = take().pos;
            auto n = node(Formula::Kind::Not, pos);
            n->a = unary();
            return n;
        }
        if (is_quantifier(peek())) return quantifier();
        return primary();
    }

    std::unique_ptr<Formula> quantifier() {
        Token q = take();
        auto n = node(q.text[0] == 'A' ? Formula::Kind::Forall
                                       : Formula::Kind::Exists,
                      q.pos);
        if (q.text.size() > 1) {
            n->bound.push_back(q.text.substr(1));  // glued form like Aj
        } else {
            if (peek().type != Tok::Ident)
                fail(peek().pos, "expected variable after quantifier");
            n->bound.push_back(take().text);
        }
        while (accept(Tok::Comma)) {
            if (peek().type != Tok::Ident)
                fail(peek().pos, "expected variable after ','");
            n->bound.push_back(take().text);
        }
        n->a = formula();  // scope runs to the end of the enclosing group
        return n;
    }

    // decides whether a '(' at the cursor opens a term (as in "(x+y) < z")
    // or a parenthesized formula, by looking at the token after the match
    bool paren_starts_term() const {
        int depth = 0;
        std::size_t k = at_;
        for (; k < toks_.size(); ++k) {
            if (toks_[k].type == Tok::LParen) ++depth;
            else if (toks_[k].type == Tok::RParen && --depth == 0) break;
            else if (toks_[k].type == Tok::End) break;
        }
        if (k >= toks_.size() || toks_[k].type != Tok::RParen)
            fail(toks_[at_].pos, "unbalanced '('");
        Tok after = toks_[k + 1].type;
        return after == Tok::Plus || after == Tok::Minus || after == Tok::Eq ||
               after == Tok::Ne || after == Tok::Lt || after == Tok::Le ||
               after == Tok::Gt || after == Tok::Ge;
    }

    std::unique_ptr<Formula> primary() {
        if (peek().type == Tok::Dollar) return atom();
        if (peek().type == Tok::LParen) {
            if (paren_starts_term()) return comparison();
            take();
            auto f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        return comparison();
    }

    std::unique_ptr<Formula> atom() {
        int pos = take().pos;  // '$'
        if (peek().type != Tok::Ident)
            fail(peek().pos, "expected predicate name after '$'");
        auto n = node(Formula::Kind::Atom, pos);
        n->pred = take().text;
        expect(Tok::LParen, "'('");
        if (peek().type != Tok::RParen) {
            n->args.push_back(std::move(*term_tree()));
            while (accept(Tok::Comma))
                n->args.push_back(std::move(*term_tree()));
        }
        expect(Tok::RParen, "')'");
        return n;
    }

    std::unique_ptr<Formula> comparison() {
        auto l = term_tree();
        Formula::Rel rel;
        int pos = peek().pos;
        switch (peek().type) {
            case Tok::Eq: rel = Formula::Rel::Eq; break;
            case Tok::Ne: rel = Formula::Rel::Ne; break;
            case Tok::Lt: rel = Formula::Rel::Lt; break;
            case Tok::Le: rel = Formula::Rel::Le; break;
            case Tok::Gt: rel = Formula::Rel::Gt; break;
            case Tok::Ge: rel = Formula::Rel::Ge; break;
            default: fail(pos, "expected comparison operator");
        }
        take();
        auto n = node(Formula::Kind::Compare, pos);
        n->rel = rel;
        n->tlhs = std::move(l);
        n->trhs = term_tree();
        return n;
    }

    std::unique_ptr<Term> term_tree() {
        auto l = factor();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            Token op = take();
            auto t = std::make_unique<Term>();
            t->kind = op.type == Tok::Plus ? Term::Kind::Add : Term::Kind::Sub;
            t->pos = op.pos;
            t->lhs = std::move(l);
            t->rhs = factor();
            l = std::move(t);
        }
        return l;
    }

    std::unique_ptr<Term> factor() {
        if (peek().type == Tok::Number) {
            Token k = take();
            auto t = std::make_unique<Term>();
            t->kind = Term::Kind::Const;
            t->value = k.num;
            t->pos = k.pos;
            return t;
        }
        if (peek().type == Tok::Ident) {
            Token k = take();
            auto t = std::make_unique<Term>();
            t->kind = Term::Kind::Var;
            t->name = k.text;
            t->pos = k.pos;
            return t;
        }
        if (accept(Tok::LParen)) {
            auto t = term_tree();
            expect(Tok::RParen, "')'");
            return t;
        }
        fail(peek().pos, "expected term");
    }
};

// ---- variable analysis ----

void walk_term(const Term& t, const std::vector<std::string>& scope,
               std::set<std::string>& free) {
    switch (t.kind) {
        case Term::Kind::Var:
            if (std::find(scope.begin(), scope.end(), t.name) == scope.end())
                free.insert(t.name);
            break;
        case Term::Kind::Const:
            break;
        default:
            walk_term(*t.lhs, scope, free);
            walk_term(*t.rhs, scope, free);
    }
}

void walk(const Formula& f, std::vector<std::string>& scope,
          std::set<std::string>& free, std::set<std::string>& bound) {
    switch (f.kind) {
        case Formula::Kind::Atom:
            for (const Term& a : f.args) walk_term(a, scope, free);
            break;
        case Formula::Kind::Compare:
            walk_term(*f.tlhs, scope, free);
            walk_term(*f.trhs, scope, free);
            break;
        case Formula::Kind::Not:
            walk(*f.a, scope, free, bound);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            for (const std::string& v : f.bound) {
                if (bound.count(v) ||
                    std::find(scope.begin(), scope.end(), v) != scope.end())
                    throw QueryError("variable '" + v + "' bound more than once");
                bound.insert(v);
                scope.push_back(v);
            }
            walk(*f.a, scope, free, bound);
            for (std::size_t k = 0; k < f.bound.size(); ++k) scope.pop_back();
            break;
        default:
            walk(*f.a, scope, free, bound);
            walk(*f.b, scope, free, bound);
            break;
    }
}

struct VarInfo {
    std::set<std::string> free, bound;
};

VarInfo analyze(const Formula& f) {
    VarInfo vi;
    std::vector<std::string> scope;
    walk(f, scope, vi.free, vi.bound);
    for (const std::string& v : vi.free)
        if (vi.bound.count(v))
            throw QueryError("variable '" + v + "' is both free and bound");
    return vi;
}

// ---- compiler ----

struct Ctx {
    const PredicateRegistry* reg = nullptr;
    std::map<std::string, int> ids;
    int next_fresh = 0;
};

Dfa project_out(const Dfa& d, int var) {
    return minimize(determinize(project(d, var)));
}

struct Lowered {
    int var = -1;
    std::vector<Dfa> cons;
    std::vector<int> fresh;
};

void merge_into(Lowered& into, Lowered&& from) {
    for (auto& c : from.cons) into.cons.push_back(std::move(c));
    for (int z : from.fresh) into.fresh.push_back(z);
}

Lowered lower_term(const Term& t, Ctx& ctx) {
    switch (t.kind) {
        case Term::Kind::Var:
            return {ctx.ids.at(t.name), {}, {}};
        case Term::Kind::Const: {
            Lowered l;
            l.var = ctx.next_fresh++;
            l.cons.push_back(make_const(t.value, l.var));
            l.fresh.push_back(l.var);
            return l;
        }
        default: {
            Lowered out;
            Lowered la = lower_term(*t.lhs, ctx);
            Lowered lb = lower_term(*t.rhs, ctx);
            int x = la.var, y = lb.var;
            merge_into(out, std::move(la));
            merge_into(out, std::move(lb));
            if (x == y) {  // operands share a track, clone through equality
                int c = ctx.next_fresh++;
                out.cons.push_back(make_eq(c, x));
                out.fresh.push_back(c);
                y = c;
            }
            int z = ctx.next_fresh++;
            out.fresh.push_back(z);
            out.var = z;
            if (t.kind == Term::Kind::Add)
                out.cons.push_back(make_add(x, y, z));
            else
                out.cons.push_back(make_add(z, y, x));  // z = x - y as z + y = x
            return out;
        }
    }
}

Dfa conj_and_project(Dfa d, std::vector<Dfa>& cons, std::vector<int>& fresh) {
    for (Dfa& c : cons) d = product(d, c, BoolOp::And);
    for (int z : fresh) d = project_out(d, z);
    return minimize(d);
}

Dfa compile_node(const Formula& f, Ctx& ctx);

Dfa compile_atom(const Formula& f, Ctx& ctx) {
    if (!ctx.reg->has(f.pred))
        fail(f.pos, "unknown predicate '$" + f.pred + "'");
    const Dfa& p = ctx.reg->at(f.pred);
    if (p.width() != static_cast<int>(f.args.size()))
        fail(f.pos, "predicate '$" + f.pred + "' expects " +
                        std::to_string(p.width()) + " argument(s), got " +
                        std::to_string(f.args.size()));
    Lowered all;
    std::vector<int> argv;
    for (const Term& a : f.args) {
        Lowered l = lower_term(a, ctx);
        argv.push_back(l.var);
        merge_into(all, std::move(l));
    }
    // arguments that landed on the same track get cloned apart
    for (std::size_t i = 0; i < argv.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (argv[j] == argv[i]) {
                int c = ctx.next_fresh++;
                all.cons.push_back(make_eq(c, argv[i]));
                all.fresh.push_back(c);
                argv[i] = c;
                break;
            }
        }
    }
    Dfa d = retrack(p, argv);
    return conj_and_project(std::move(d), all.cons, all.fresh);
}

bool rel_true_on_equal(Formula::Rel rel) {
    return rel == Formula::Rel::Eq || rel == Formula::Rel::Le ||
           rel == Formula::Rel::Ge;
}

Dfa rel_dfa(Formula::Rel rel, int x, int y) {
    switch (rel) {
        case Formula::Rel::Eq: return make_eq(x, y);
        case Formula::Rel::Ne: return complement(make_eq(x, y));
        case Formula::Rel::Lt: return make_less_than(x, y);
        case Formula::Rel::Le: return make_less_equal(x, y);
        case Formula::Rel::Gt: return make_less_than(y, x);
        default: return make_less_equal(y, x);
    }
}

Dfa compile_compare(const Formula& f, Ctx& ctx) {
    Lowered all;
    Lowered la = lower_term(*f.tlhs, ctx);
    Lowered lb = lower_term(*f.trhs, ctx);
    int x = la.var, y = lb.var;
    merge_into(all, std::move(la));
    merge_into(all, std::move(lb));
    Dfa d;
    if (x == y) {
        Dfa u = make_universal({x});
        d = rel_true_on_equal(f.rel) ? std::move(u) : complement(u);
    } else {
        d = rel_dfa(f.rel, x, y);
    }
    return conj_and_project(std::move(d), all.cons, all.fresh);
}

Dfa project_bound(Dfa d, const std::vector<std::string>& vars, Ctx& ctx) {
    for (const std::string& v : vars) {
        int id = ctx.ids.at(v);
        if (std::find(d.vars.begin(), d.vars.end(), id) == d.vars.end())
            continue;  // variable unused in the body
        d = project_out(d, id);
    }
    return d;
}

Dfa compile_node(const Formula& f, Ctx& ctx) {
    switch (f.kind) {
        case Formula::Kind::Atom:
            return compile_atom(f, ctx);
        case Formula::Kind::Compare:
            return compile_compare(f, ctx);
        case Formula::Kind::Not:
            return complement(compile_node(*f.a, ctx));
        case Formula::Kind::And:
            return minimize(product(compile_node(*f.a, ctx),
                                    compile_node(*f.b, ctx), BoolOp::And));
        case Formula::Kind::Or:
            return minimize(product(compile_node(*f.a, ctx),
                                    compile_node(*f.b, ctx), BoolOp::Or));
        case Formula::Kind::Implies:
            return minimize(product(compile_node(*f.a, ctx),
                                    compile_node(*f.b, ctx), BoolOp::Implies));
        case Formula::Kind::Iff:
            return complement(minimize(product(compile_node(*f.a, ctx),
                                               compile_node(*f.b, ctx),
                                               BoolOp::Xor)));
        case Formula::Kind::Exists:
            return project_bound(compile_node(*f.a, ctx), f.bound, ctx);
        default: {  // Forall as ~E~
            Dfa d = complement(compile_node(*f.a, ctx));
            return complement(project_bound(std::move(d), f.bound, ctx));
        }
    }
}

}  // namespace

const char* gaps_query_text() {
    return "?lsd_2 $factauto(n) & $factauto(n+r) & "
           "(Aj (j < r-1) => ~$factauto(n+ j + 1))";
}

const char* sgaps_query_text() {
    return "?lsd_2 ~$factauto(n) & ~$factauto(n+r) & "
           " (Aj  (j < r-1) => $factauto(n+ j + 1))";
}

std::unique_ptr<Formula> parse(const std::string& text) {
    return Parser(lex(text)).parse_all();
}

void PredicateRegistry::add(const std::string& name, Dfa d) {
    if (name.empty()) throw QueryError("empty predicate name");
    if (preds_.count(name))
        throw QueryError("duplicate predicate '" + name + "'");
    if (!is_padding_invariant(d))
        throw QueryError("predicate '" + name + "' is not padding-invariant");
    preds_.emplace(name, std::move(d));
}

const Dfa& PredicateRegistry::at(const std::string& name) const {
    auto it = preds_.find(name);
    if (it == preds_.end())
        throw QueryError("unknown predicate '" + name + "'");
    return it->second;
}

bool PredicateRegistry::has(const std::string& name) const {
    return preds_.count(name) != 0;
}

PredicateRegistry standard_registry() {
    PredicateRegistry r;
    r.add("factauto", factauto());
    r.add("gamma", gamma_parity_dfa());
    r.add("a3", window_parity_dfa({{3, 4}}));
    r.add("a5", window_parity_dfa({{5, 6}}));
    return r;
}

std::vector<std::string> free_variables(const Formula& f) {
    VarInfo vi = analyze(f);
    return std::vector<std::string>(vi.free.begin(), vi.free.end());
}

Dfa compile(const Formula& f, const PredicateRegistry& reg) {
    VarInfo vi = analyze(f);
    if (vi.free.empty())
        throw QueryError("formula has no free variables");
    Ctx ctx;
    ctx.reg = &reg;
    std::set<std::string> all = vi.free;
    all.insert(vi.bound.begin(), vi.bound.end());
    int id = 0;
    for (const std::string& name : all) ctx.ids[name] = id++;
    ctx.next_fresh = id;

    Dfa d = compile_node(f, ctx);

    std::vector<int> want;
    for (const std::string& name : vi.free) want.push_back(ctx.ids.at(name));
    if (d.vars != want)
        throw QueryError("internal: compiled tracks do not match free variables");
    d = minimize(d);
    std::map<int, std::string> rev;
    for (auto& [name, i] : ctx.ids) rev[i] = name;
    for (int i = 0; i < d.width(); ++i) d.names[i] = rev.at(d.vars[i]);
    return d;
}

Dfa compile_query(const std::string& text, const PredicateRegistry& reg) {
    return compile(*parse(text), reg);
}

Dfa gaps_dfa(const PredicateRegistry& reg) {
    return compile_query(gaps_query_text(), reg);
}

Dfa sgaps_dfa(const PredicateRegistry& reg) {
    return compile_query(sgaps_query_text(), reg);
}

std::set<std::uint64_t> gap_length_set(const Dfa& d, std::uint64_t bound) {
    if (d.width() != 2)
        throw QueryError("gap_length_set expects a two-track automaton");
    Dfa lengths = minimize(determinize(project(d, d.vars[0])));
    std::set<std::uint64_t> out;
    for (const auto& tup : enumerate_accepted(lengths, bound))
        if (tup[0] != 0) out.insert(tup[0]);  // r = 0 is the vacuous non-gap
    return out;
}

namespace {

std::optional<std::uint64_t> eval_term(
    const Term& t, const std::map<std::string, std::uint64_t>& env) {
    switch (t.kind) {
        case Term::Kind::Var: {
            auto it = env.find(t.name);
            if (it == env.end())
                throw QueryError("unassigned variable '" + t.name + "'");
            return it->second;
        }
        case Term::Kind::Const:
            return t.value;
        default: {
            auto a = eval_term(*t.lhs, env);
            auto b = eval_term(*t.rhs, env);
            if (!a || !b) return std::nullopt;
            if (t.kind == Term::Kind::Add) return *a + *b;
            if (*a < *b) return std::nullopt;  // natural subtraction
            return *a - *b;
        }
    }
}

bool eval_impl(const Formula& f, const PredicateEval& pe,
               std::map<std::string, std::uint64_t>& env, std::uint64_t bound);

bool eval_quant(const Formula& f, std::size_t vi, const PredicateEval& pe,
                std::map<std::string, std::uint64_t>& env, std::uint64_t bound,
                bool forall) {
    if (vi == f.bound.size()) return eval_impl(*f.a, pe, env, bound);
    const std::string& v = f.bound[vi];
    for (std::uint64_t x = 0; x <= bound; ++x) {
        env[v] = x;
        bool r = eval_quant(f, vi + 1, pe, env, bound, forall);
        if (forall ? !r : r) {
            env.erase(v);
            return !forall;
        }
    }
    env.erase(v);
    return forall;
}

bool eval_impl(const Formula& f, const PredicateEval& pe,
               std::map<std::string, std::uint64_t>& env, std::uint64_t bound) {
    switch (f.kind) {
        case Formula::Kind::Atom: {
            std::vector<std::uint64_t> vals;
            for (const Term& a : f.args) {
                auto v = eval_term(a, env);
                if (!v) return false;
                vals.push_back(*v);
            }
            return pe(f.pred, vals);
        }
        case Formula::Kind::Compare: {
            auto a = eval_term(*f.tlhs, env);
            auto b = eval_term(*f.trhs, env);
            if (!a || !b) return false;
            switch (f.rel) {
                case Formula::Rel::Eq: return *a == *b;
                case Formula::Rel::Ne: return *a != *b;
                case Formula::Rel::Lt: return *a < *b;
                case Formula::Rel::Le: return *a <= *b;
                case Formula::Rel::Gt: return *a > *b;
                default: return *a >= *b;
            }
        }
        case Formula::Kind::Not:
            return !eval_impl(*f.a, pe, env, bound);
        case Formula::Kind::And:
            return eval_impl(*f.a, pe, env, bound) &&
                   eval_impl(*f.b, pe, env, bound);
        case Formula::Kind::Or:
            return eval_impl(*f.a, pe, env, bound) ||
                   eval_impl(*f.b, pe, env, bound);
        case Formula::Kind::Implies:
            return !eval_impl(*f.a, pe, env, bound) ||
                   eval_impl(*f.b, pe, env, bound);
        case Formula::Kind::Iff:
            return eval_impl(*f.a, pe, env, bound) ==
                   eval_impl(*f.b, pe, env, bound);
        case Formula::Kind::Exists:
            return eval_quant(f, 0, pe, env, bound, false);
        default:
            return eval_quant(f, 0, pe, env, bound, true);
    }
}

}  // namespace

bool eval_formula(const Formula& f, const PredicateEval& predicates,
                  const std::map<std::string, std::uint64_t>& env,
                  std::uint64_t quantifier_bound) {
    std::map<std::string, std::uint64_t> e = env;
    return eval_impl(f, predicates, e, quantifier_bound);
}

}  // namespace factoromata

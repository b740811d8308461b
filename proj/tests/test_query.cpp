#include <set>

#include "doctest.h"
#include "factoromata/oracle.hpp"
#include "factoromata/query.hpp"
#include "factoromata/seeds.hpp"

using namespace factoromata;

namespace {

std::string parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const QueryError& e) {
        return e.what();
    }
    return "";
}

std::string compile_error(const std::string& text) {
    PredicateRegistry reg = standard_registry();
    try {
        compile_query(text, reg);
    } catch (const QueryError& e) {
        return e.what();
    }
    return "";
}

const std::set<std::uint64_t> kSbarGapLengths = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15, 16, 17,
    18, 19, 20, 21, 22, 23, 25, 26, 28, 30, 31, 33, 34, 35, 37, 38, 42};

}  // namespace

TEST_CASE("parser reports positions") {
    CHECK(parse_error("E").find("position") != std::string::npos);
    CHECK(parse_error("n + ").find("position") != std::string::npos);
    CHECK(parse_error("$f(n").find("position") != std::string::npos);
    CHECK(parse_error("(n = 1").find("position") != std::string::npos);
    CHECK(parse_error("n @ 1").find("position") != std::string::npos);
    CHECK(parse_error("n = 99999999999999999999999").find("position") !=
          std::string::npos);
    CHECK(parse_error("") != "");
}

TEST_CASE("lsd marker") {
    CHECK_NOTHROW(parse("?lsd_2 $factauto(n)"));
    CHECK_THROWS_AS(parse("?msd_2 $factauto(n)"), QueryError);
    PredicateRegistry reg = standard_registry();
    CHECK(is_language_equal(compile_query("?lsd_2 $factauto(n)", reg),
                            compile_query("$factauto(n)", reg)));
}

TEST_CASE("precedence: ~ binds tightest, & over |, => right, <=> loosest") {
    auto f = parse("~$gamma(n) | $a3(n) & $a5(n)");
    REQUIRE(f->kind == Formula::Kind::Or);
    CHECK(f->a->kind == Formula::Kind::Not);
    CHECK(f->b->kind == Formula::Kind::And);

    auto g = parse("$gamma(n) => $a3(n) => $a5(n)");
    REQUIRE(g->kind == Formula::Kind::Implies);
    CHECK(g->b->kind == Formula::Kind::Implies);

    auto h = parse("$gamma(n) <=> $a3(n) => $a5(n)");
    REQUIRE(h->kind == Formula::Kind::Iff);
    CHECK(h->b->kind == Formula::Kind::Implies);
}

TEST_CASE("quantifier scope runs to the end of the enclosing group") {
    auto f = parse("Ej j = n & $factauto(n)");
    REQUIRE(f->kind == Formula::Kind::Exists);
    CHECK(f->bound == std::vector<std::string>{"j"});
    CHECK(f->a->kind == Formula::Kind::And);

    auto g = parse("(Ej j = n) & $factauto(n)");
    REQUIRE(g->kind == Formula::Kind::And);
    CHECK(g->a->kind == Formula::Kind::Exists);

    // Spaced and glued quantified variables, comma lists.
    auto h = parse("E j, k j + k = n");
    REQUIRE(h->kind == Formula::Kind::Exists);
    CHECK(h->bound == std::vector<std::string>{"j", "k"});
    CHECK(free_variables(*h) == std::vector<std::string>{"n"});
}

TEST_CASE("compile: comparisons and terms") {
    PredicateRegistry reg = standard_registry();
    Dfa d = compile_query("n - 5 = 2", reg);
    auto sols = enumerate_accepted(d, 20);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == std::vector<std::uint64_t>{7});

    // Natural subtraction is relational: no n satisfies n - 5 = 2 via
    // wraparound, and n - m is undefined (false) when m > n.
    Dfa e = compile_query("3 - n = 1", reg);
    auto sols2 = enumerate_accepted(e, 20);
    REQUIRE(sols2.size() == 1);
    CHECK(sols2[0] == std::vector<std::uint64_t>{2});

    Dfa cmp = compile_query("n + 2 <= m & m < n + 4", reg);
    for (std::uint64_t m = 0; m <= 12; ++m)
        for (std::uint64_t n = 0; n <= 12; ++n)
            CHECK(accepts(cmp, {m, n}) == (n + 2 <= m && m < n + 4));
}

TEST_CASE("compile: track order is alphabetical over free variables") {
    PredicateRegistry reg = standard_registry();
    Dfa d = compile_query("b + 1 = a", reg);
    CHECK(d.names == std::vector<std::string>{"a", "b"});
    CHECK(accepts(d, {4, 3}));
    CHECK_FALSE(accepts(d, {3, 4}));
}

TEST_CASE("compile errors") {
    CHECK(compile_error("$nope(n)").find("nope") != std::string::npos);
    CHECK(compile_error("$factauto(n, m)").find("expects") !=
          std::string::npos);
    CHECK(compile_error("Ej (Ej j = n)").find("bound") != std::string::npos);
    CHECK(compile_error("j = n & (Ej $factauto(j))").find("free") !=
          std::string::npos);
    // Closed formulas have no tracks to compile onto.
    CHECK(compile_error("Ej $factauto(j)") != "");
}

TEST_CASE("registry rejects duplicates and padding breakers") {
    PredicateRegistry reg = standard_registry();
    CHECK(reg.has("factauto"));
    CHECK(reg.has("gamma"));
    CHECK(reg.has("a3"));
    CHECK(reg.has("a5"));
    CHECK_FALSE(reg.has("gaps"));
    CHECK_THROWS_AS(reg.add("factauto", factauto()), QueryError);

    Dfa broken;
    broken.vars = {0};
    broken.names = {"n"};
    broken.delta = {{1, 2}, {2, 2}, {2, 2}};
    broken.accept = {0, 1, 0};
    CHECK_THROWS_AS(reg.add("broken", broken), QueryError);
}

TEST_CASE("gap automata fixtures") {
    PredicateRegistry reg = standard_registry();
    Dfa gaps = gaps_dfa(reg);
    Dfa sgaps = sgaps_dfa(reg);
    CHECK(state_count_complete(gaps) == 320);
    CHECK(state_count_trimmed(gaps) == 319);
    CHECK(state_count_complete(sgaps) == 204);
    CHECK(state_count_trimmed(sgaps) == 203);

    CHECK(accepts(gaps, {10, 2}));   // members 10 and 12, nothing between
    CHECK(accepts(gaps, {12, 12}));  // members 12 and 24
    CHECK_FALSE(accepts(gaps, {12, 11}));
    CHECK_FALSE(accepts(gaps, {11, 2}));  // 11 is not a member
    CHECK(accepts(sgaps, {0, 1}));
    CHECK(accepts(sgaps, {9, 2}));   // 10, 11 are not in S
    CHECK(accepts(sgaps, {23, 3}));  // 24, 25 missing from S
    CHECK_FALSE(accepts(sgaps, {23, 2}));

    // The formulas accept the degenerate pair (n, 0) for every member n.
    CHECK(accepts(gaps, {10, 0}));
    CHECK_FALSE(accepts(gaps, {11, 0}));
}

TEST_CASE("gap length sets") {
    PredicateRegistry reg = standard_registry();
    Dfa gaps = gaps_dfa(reg);
    Dfa sgaps = sgaps_dfa(reg);
    CHECK(gap_length_set(gaps, 64) == kSbarGapLengths);
    CHECK(gap_length_set(sgaps, 64) == std::set<std::uint64_t>{1, 2, 3, 4});

    // Raw projection differs from the reported set only by the vacuous 0.
    Dfa raw = minimize(determinize(project(gaps, gaps.vars[0])));
    std::set<std::uint64_t> with_zero;
    for (const auto& tup : enumerate_accepted(raw, 64))
        with_zero.insert(tup[0]);
    std::set<std::uint64_t> expect = kSbarGapLengths;
    expect.insert(0);
    CHECK(with_zero == expect);
}

TEST_CASE("gap automaton agrees with the direct oracle scan") {
    PredicateRegistry reg = standard_registry();
    Dfa gaps = gaps_dfa(reg);
    GapScan g = scan_gaps(4000);
    for (const GapRecord& r : g.records)
        if (r.set_id == SetId::Sbar) CHECK(accepts(gaps, {r.start, r.length}));
    // And no false positives among small pairs.
    ScanResult scan = scan_members(300);
    for (std::uint64_t n = 0; n <= 200; ++n)
        for (std::uint64_t r = 1; r <= 50; ++r) {
            bool is_gap = scan.is_member(n) && scan.is_member(n + r);
            for (std::uint64_t m = n + 1; is_gap && m < n + r; ++m)
                if (scan.is_member(m)) is_gap = false;
            CHECK(accepts(gaps, {n, r}) == is_gap);
        }
}

TEST_CASE("forall is the dual of exists") {
    PredicateRegistry reg = standard_registry();
    Dfa a = compile_query("Aj (j <= n) => $gamma(j)", reg);
    Dfa b = compile_query("~(Ej ~((j <= n) => $gamma(j)))", reg);
    CHECK(is_language_equal(a, b));
    CHECK(accepts(a, {1}));        // gamma(0), gamma(1) both even
    CHECK_FALSE(accepts(a, {2}));  // nu2(2!) = 1
}

TEST_CASE("substituting n + 0 changes nothing") {
    PredicateRegistry reg = standard_registry();
    CHECK(is_language_equal(compile_query("$factauto(n + 0)", reg),
                            compile_query("$factauto(n)", reg)));
}

TEST_CASE("interpreter agrees with the compiled gap automaton") {
    PredicateRegistry reg = standard_registry();
    Dfa gaps = gaps_dfa(reg);
    auto f = parse(gaps_query_text());
    PredicateEval eval = [](const std::string& name,
                            const std::vector<std::uint64_t>& args) {
        REQUIRE(name == "factauto");
        return theta_direct(args[0]) == ThetaTriple{0, 0, 1};
    };
    for (std::uint64_t n = 0; n <= 63; ++n)
        for (std::uint64_t r = 0; r <= 63; ++r) {
            std::map<std::string, std::uint64_t> env{{"n", n}, {"r", r}};
            CHECK(eval_formula(*f, eval, env, 128) == accepts(gaps, {n, r}));
        }
}

TEST_CASE("interpreter evaluates partial subtraction") {
    auto f = parse("n - 5 = 2");
    PredicateEval none = [](const std::string&,
                            const std::vector<std::uint64_t>&) {
        return false;
    };
    CHECK(eval_formula(*f, none, {{"n", 7}}, 8));
    CHECK_FALSE(eval_formula(*f, none, {{"n", 3}}, 8));
    auto g = parse("n - 5 >= 0");
    CHECK_FALSE(eval_formula(*g, none, {{"n", 3}}, 8));
    CHECK(eval_formula(*g, none, {{"n", 5}}, 8));
}

TEST_CASE("query text fixtures are exposed") {
    CHECK(std::string(gaps_query_text()).find("factauto") != std::string::npos);
    CHECK(std::string(sgaps_query_text()).find("factauto") !=
          std::string::npos);
    PredicateRegistry reg = standard_registry();
    CHECK(is_language_equal(compile_query(gaps_query_text(), reg),
                            gaps_dfa(reg)));
}

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "factoromata/automata.hpp"

using namespace factoromata;

namespace {

// Accepts exactly the one-digit string "0"; rejects the empty string and
// every padded form, so it is not padding invariant.
Dfa zero_string_only() {
    Dfa d;
    d.vars = {0};
    d.names = {"n"};
    d.initial = 0;
    d.delta = {{1, 2}, {2, 2}, {2, 2}};
    d.accept = {0, 1, 0};
    return d;
}

}  // namespace

TEST_CASE("encoding: canonical length and padding") {
    CHECK(canonical_length({0}) == 0);
    CHECK(canonical_length({1}) == 1);
    CHECK(canonical_length({5}) == 3);
    CHECK(canonical_length({0, 8}) == 4);
    CHECK(canonical_length({6, 1}) == 3);

    // 5 = 101 LSD-first is 1,0,1; a second zero track contributes bit 1.
    auto syms = encode({5, 0}, 4);
    CHECK(syms == std::vector<Symbol>{1, 0, 1, 0});
    CHECK_THROWS_AS(encode({5}, 2), AutomatonError);
}

TEST_CASE("base relations behave like their arithmetic") {
    Dfa add = make_add(0, 1, 2);
    Dfa le = make_less_equal(0, 1);
    Dfa lt = make_less_than(0, 1);
    Dfa eq = make_eq(0, 1);
    CHECK(add.states() == 3);
    CHECK(le.states() == 3);
    CHECK(lt.states() == 3);
    CHECK(eq.states() == 2);
    for (std::uint64_t x = 0; x <= 12; ++x)
        for (std::uint64_t y = 0; y <= 12; ++y) {
            CHECK(accepts(le, {x, y}) == (x <= y));
            CHECK(accepts(lt, {x, y}) == (x < y));
            CHECK(accepts(eq, {x, y}) == (x == y));
            for (std::uint64_t z = 0; z <= 25; ++z)
                CHECK(accepts(add, {x, y, z}) == (x + y == z));
        }

    Dfa c = make_const(13, 7);
    CHECK(c.vars == std::vector<int>{7});
    for (std::uint64_t n = 0; n <= 40; ++n)
        CHECK(accepts(c, {n}) == (n == 13));

    Dfa u = make_universal({2, 5});
    CHECK(accepts(u, {0, 0}));
    CHECK(accepts(u, {17, 4}));
}

TEST_CASE("boolean product against direct truth tables") {
    Dfa le = make_less_equal(0, 1);
    Dfa eq = make_eq(0, 1);
    Dfa lt_via = product(le, complement(eq), BoolOp::And);
    Dfa ge_via = complement(make_less_than(0, 1));
    for (std::uint64_t x = 0; x <= 20; ++x)
        for (std::uint64_t y = 0; y <= 20; ++y) {
            CHECK(accepts(lt_via, {x, y}) == (x < y));
            CHECK(accepts(ge_via, {x, y}) == (x >= y));
            CHECK(accepts(product(le, eq, BoolOp::Or), {x, y}) ==
                  (x <= y || x == y));
            CHECK(accepts(product(le, eq, BoolOp::Xor), {x, y}) == (x < y));
            CHECK(accepts(product(le, eq, BoolOp::Implies), {x, y}) ==
                  (x > y || x == y));
        }
}

TEST_CASE("product aligns mismatched track sets") {
    // x <= y over tracks (0,1) against y <= z over tracks (1,2).
    Dfa chain = product(make_less_equal(0, 1), make_less_equal(1, 2),
                        BoolOp::And);
    CHECK(chain.width() == 3);
    for (std::uint64_t x = 0; x <= 6; ++x)
        for (std::uint64_t y = 0; y <= 6; ++y)
            for (std::uint64_t z = 0; z <= 6; ++z)
                CHECK(accepts(chain, {x, y, z}) == (x <= y && y <= z));
}

TEST_CASE("retrack renames tracks and rejects collisions") {
    Dfa le = make_less_equal(0, 1);
    // Old track 0 (x) becomes 5, old track 1 (y) becomes 2; the sorted
    // track order is (2, 5), so tuples arrive as (y, x).
    Dfa r = retrack(le, {5, 2});
    CHECK(r.vars == std::vector<int>{2, 5});
    CHECK(accepts(r, {3, 2}));
    CHECK_FALSE(accepts(r, {2, 3}));
    CHECK_THROWS_AS(retrack(le, {4, 4}), AutomatonError);
    CHECK_THROWS_AS(retrack(le, {1}), AutomatonError);
}

TEST_CASE("projection of addition is the <= relation") {
    // E y: x + y = z  <=>  x <= z
    Nfa n = project(make_add(0, 1, 2), 1);
    Dfa projected = minimize(determinize(n));
    Dfa le = minimize(make_less_equal(0, 2));
    CHECK(is_language_equal(projected, le));
    // Canonical minimization makes equal languages bit-identical.
    CHECK(projected.delta == le.delta);
    CHECK(projected.accept == le.accept);
    CHECK(projected.initial == le.initial);
}

TEST_CASE("projection keeps witnesses longer than the kept tracks") {
    // E y: x + y = 8. Witness y = 8 - x needs 4 digits even when x has 1.
    Dfa sum8 = product(make_add(0, 1, 2), make_const(8, 2), BoolOp::And);
    Dfa no_z = determinize(project(sum8, 2));
    Dfa d = minimize(determinize(project(no_z, 1)));
    for (std::uint64_t x = 0; x <= 20; ++x)
        CHECK(accepts(d, {x}) == (x <= 8));
}

TEST_CASE("determinization budget honors FACTOROMATA_MAX_STATES") {
    Nfa n = project(make_add(0, 1, 2), 1);
    setenv("FACTOROMATA_MAX_STATES", "2", 1);
    CHECK(max_subset_states() == 2);
    CHECK_THROWS_AS(determinize(n), AutomatonError);
    unsetenv("FACTOROMATA_MAX_STATES");
    CHECK(max_subset_states() == 1000000);
    CHECK_NOTHROW(determinize(n));
}

TEST_CASE("padding invariance detection") {
    CHECK(is_padding_invariant(make_add(0, 1, 2)));
    CHECK(is_padding_invariant(make_less_equal(0, 1)));
    CHECK(is_padding_invariant(make_const(9, 0)));
    CHECK_FALSE(is_padding_invariant(zero_string_only()));
}

TEST_CASE("state count conventions on a known automaton") {
    Dfa c = make_const(13, 0);
    // 13 = 1011 LSD-first: four digit states plus accept-done plus sink.
    CHECK(c.states() == 6);
    CHECK(state_count_complete(c) == 6);
    CHECK(state_count_trimmed(c) == 5);  // the reject sink is dead
    CHECK(display_state_count(c) >= 1);
}

TEST_CASE("enumerate_accepted lists tuples in order") {
    auto single = enumerate_accepted(make_const(5, 0), 10);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<std::uint64_t>{5});

    auto pairs = enumerate_accepted(make_less_equal(0, 1), 3);
    std::vector<std::vector<std::uint64_t>> want;
    for (std::uint64_t x = 0; x <= 3; ++x)
        for (std::uint64_t y = x; y <= 3; ++y) want.push_back({x, y});
    CHECK(pairs == want);
}

TEST_CASE("zero is the empty string") {
    Dfa add = make_add(0, 1, 2);
    CHECK(accepts(add, {0, 0, 0}));
    CHECK(run(add, {}) == add.initial);
    CHECK(add.accept[add.initial]);
}

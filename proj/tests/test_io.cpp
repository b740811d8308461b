#include <sstream>

#include "doctest.h"
#include "factoromata/io.hpp"
#include "factoromata/seeds.hpp"

using namespace factoromata;

namespace {

std::string dump(const Dfa& d) {
    std::ostringstream os;
    save_dfa(d, os);
    return os.str();
}

Dfa parse_dfa(const std::string& text) {
    std::istringstream is(text);
    return load_dfa(is);
}

std::string what_of(const std::string& text) {
    try {
        parse_dfa(text);
    } catch (const IoError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("dfa round-trip is byte identical") {
    Dfa f = factauto();
    std::string once = dump(f);
    Dfa back = parse_dfa(once);
    CHECK(dump(back) == once);
    CHECK(is_language_equal(minimize(back), minimize(f)));
    CHECK(back.names == f.names);
    CHECK(back.delta == f.delta);
    CHECK(back.accept == f.accept);
    CHECK(back.initial == f.initial);
}

TEST_CASE("multi-track dfa round-trip") {
    Dfa add = make_add(0, 1, 2);
    Dfa back = parse_dfa(dump(add));
    CHECK(back.width() == 3);
    for (std::uint64_t x = 0; x <= 9; ++x)
        for (std::uint64_t y = 0; y <= 9; ++y)
            CHECK(accepts(back, {x, y, x + y}));
    CHECK(dump(back) == dump(add));
}

TEST_CASE("loader assigns track ids from file order") {
    Dfa rel = count_relation();
    Dfa back = parse_dfa(dump(rel));
    CHECK(back.vars == std::vector<int>{0, 1});
    CHECK(back.names == std::vector<std::string>{"n", "j"});
    CHECK(accepts(back, {12, 10}));
    CHECK_FALSE(accepts(back, {12, 11}));
}

TEST_CASE("dfa file format essentials") {
    std::string text = dump(make_eq(0, 1));
    CHECK(text.rfind("automaton/1\n", 0) == 0);
    CHECK(text.find("tracks:") != std::string::npos);
    CHECK(text.find("states:") != std::string::npos);
    CHECK(text.find("initial:") != std::string::npos);
    CHECK(text.find("accepting:") != std::string::npos);
}

TEST_CASE("malformed automaton files throw with line positions") {
    CHECK(what_of("bogus/9\n").find("line 1") != std::string::npos);
    std::string good = dump(make_eq(0, 1));

    SUBCASE("missing edge leaves the dfa incomplete") {
        std::string cut = good.substr(0, good.rfind('\n', good.size() - 2) + 1);
        CHECK_THROWS_AS(parse_dfa(cut), IoError);
    }
    SUBCASE("duplicate edge") {
        std::string last = good.substr(good.rfind('\n', good.size() - 2) + 1);
        CHECK_THROWS_AS(parse_dfa(good + last), IoError);
    }
    SUBCASE("multiplicity rejected on dfa load") {
        std::string mult = good;
        mult.replace(mult.size() - 1, 1, " 2\n");
        CHECK_THROWS_AS(parse_dfa(mult), IoError);
    }
    SUBCASE("state id out of range") {
        CHECK_THROWS_AS(
            parse_dfa("automaton/1\ntracks: n\nstates: 1\ninitial: 0\n"
                      "accepting: 0\n0 0 5\n0 1 0\n"),
            IoError);
    }
    SUBCASE("truncated header") {
        CHECK_THROWS_AS(parse_dfa("automaton/1\ntracks: n\n"), IoError);
    }
}

TEST_CASE("zero-track automata cannot be saved") {
    Dfa d;
    d.delta = {{0}};
    d.accept = {1};
    std::ostringstream os;
    CHECK_THROWS_AS(save_dfa(d, os), IoError);
}

TEST_CASE("nfa save requires one initial state") {
    Nfa n = project(make_add(0, 1, 2), 1);
    std::ostringstream os;
    CHECK_NOTHROW(save_nfa(n, os));
    CHECK(os.str().rfind("automaton/1\n", 0) == 0);

    n.initial.assign(n.initial.size(), 1);
    std::ostringstream os2;
    CHECK_THROWS_AS(save_nfa(n, os2), IoError);
}

TEST_CASE("linrep round-trip is byte identical") {
    LinRep r;
    r.dim = 2;
    r.v = {BigInt(1), BigInt(0)};
    r.m0 = {{BigInt(1), BigInt(0)}, {BigInt(2), BigInt(3)}};
    r.m1 = {{BigInt(0), BigInt(1)}, {BigInt(-4), BigInt(5)}};
    r.w = {BigInt(0), BigInt(7)};
    std::ostringstream os;
    save_linrep(r, os);
    std::string once = os.str();
    CHECK(once.rfind("linrep/1\n", 0) == 0);

    std::istringstream is(once);
    LinRep back = load_linrep(is);
    CHECK(back.dim == 2);
    CHECK(back.v == r.v);
    CHECK(back.m0 == r.m0);
    CHECK(back.m1 == r.m1);
    CHECK(back.w == r.w);
    std::ostringstream os2;
    save_linrep(back, os2);
    CHECK(os2.str() == once);
}

TEST_CASE("malformed linrep files throw") {
    CHECK_THROWS_AS(
        [] {
            std::istringstream is("linrep/2\n");
            return load_linrep(is);
        }(),
        IoError);
    CHECK_THROWS_AS(
        [] {
            std::istringstream is("linrep/1\ndim: 2\nv: 1\n");
            return load_linrep(is);
        }(),
        IoError);
}

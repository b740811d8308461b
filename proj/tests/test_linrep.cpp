#include <cstdint>
#include <fstream>
#include <string>

#include "doctest.h"
#include "factoromata/algebra.hpp"
#include "factoromata/linrep.hpp"
#include "factoromata/oracle.hpp"
#include "factoromata/seeds.hpp"
#include "factoromata/verify.hpp"

using namespace factoromata;

namespace {

const std::uint64_t kPow2Values[] = {
    0,    0,    0,     0,     2,     4,      8,      16,     32,
    64,   128,  248,   512,   1024,  2080,   4096,   8256,   16512,
    32896, 65536, 131072, 262144, 523776, 1047040, 2096128, 4192256};

const std::uint64_t k3Pow2Values[] = {
    0,     0,     2,     3,      5,      11,     23,     49,
    93,    193,   369,   761,    1521,   3073,   6177,   12417,
    24769, 49281, 98305, 196609, 392449, 785409, 1571329, 3145217};

const LinRep& main_rep() {
    static LinRep L = counting_linrep(count_relation());
    return L;
}

}  // namespace

TEST_CASE("counting representation dimensions") {
    const LinRep& L = main_rep();
    CHECK(L.dim == 68);
    CHECK(L.v.size() == 68);
    CHECK(L.w.size() == 68);
    CHECK(L.m0.size() == 68);
    CHECK(L.m1.size() == 68);
}

TEST_CASE("eval matches the direct scan") {
    const LinRep& L = main_rep();
    ScanResult scan = scan_members(1024);
    for (std::uint64_t n = 0; n <= 300; ++n)
        CHECK(eval_linrep(L, n) == BigInt(scan.count(n)));
    CHECK(eval_linrep(L, 0) == 0);
    CHECK(eval_linrep(L, 16) == 2);
    CHECK(eval_linrep(L, 50) == 6);
    CHECK(eval_linrep(L, 1000) == 123);
    CHECK(eval_linrep(L, 100000) == 12642);
    CHECK(eval_linrep(L, 1000000) == 125032);
}

TEST_CASE("values at powers of two") {
    const LinRep& L = main_rep();
    for (unsigned k = 0; k <= 25; ++k)
        CHECK(value_pow2(L, k) == BigInt(kPow2Values[k]));
    auto seq = pow2_value_sequence(L, 25);
    REQUIRE(seq.size() == 26);
    for (unsigned k = 0; k <= 25; ++k)
        CHECK(seq[k] == BigInt(kPow2Values[k]));

    CHECK(value_pow2(L, 27) == 16773120);
    CHECK(value_pow2(L, 51) == BigInt(281474959933440));
}

TEST_CASE("values at three times powers of two") {
    const LinRep& L = main_rep();
    for (unsigned k = 0; k <= 23; ++k)
        CHECK(value_3pow2(L, k) == BigInt(k3Pow2Values[k]));
    CHECK(value_3pow2(L, 27) == 50327553);
    CHECK(value_3pow2(L, 51) == BigInt(844424913354753));
}

TEST_CASE("reduction to minimal dimension") {
    const LinRep& L = main_rep();
    RationalRep R = reduce(L);
    CHECK(R.dim == 39);
    // Same series.
    for (std::uint64_t n = 0; n <= 120; ++n)
        CHECK(eval_linrep(R, n) == BigRat(eval_linrep(L, n)));
    for (unsigned k : {10u, 20u, 51u})
        CHECK(eval_linrep(R, std::uint64_t{1} << k) ==
              BigRat(value_pow2(L, k)));
    // Already-minimal input keeps its dimension.
    CHECK(reduce(R).dim == 39);
}

TEST_CASE("minimal polynomial of the reduced digit-0 matrix") {
    RationalRep R = reduce(main_rep());
    IntPolynomial mp = minimal_polynomial(R.m0);
    CHECK(mp.degree() == 18);
    // The recorded degree-20 annihilator is exactly x^2 times it.
    IntPolynomial h = h_polynomial();
    CHECK(h.degree() == 20);
    CHECK(poly_mul(make_poly({0, 0, 1}), mp).c == h.c);
    CHECK(poly_divides(mp, h));
    // Spectrum: mp divides x^2 (x-1)(x-2)(x^24 - 4096).
    std::vector<BigInt> x24(25, BigInt(0));
    x24[0] = -4096;
    x24[24] = 1;
    IntPolynomial spectral =
        poly_mul(poly_mul(make_poly({-1, 1}), make_poly({-2, 1})),
                 make_poly(std::move(x24)));
    CHECK(poly_divides(mp, poly_mul(make_poly({0, 0, 1}), spectral)));
}

TEST_CASE("the recurrence annihilates the power-of-two sequence") {
    const LinRep& L = main_rep();
    IntPolynomial h = h_polynomial();
    auto seq = pow2_value_sequence(L, 80);
    auto u = [&](unsigned k) { return seq[k]; };
    CHECK(recurrence_check(u, h, 80).ok());

    // It annihilates every theta class the same way.
    LinRep L2 = counting_linrep(count_relation(theta_dfa(1, 0, 0)));
    auto seq2 = pow2_value_sequence(L2, 60);
    auto u2 = [&](unsigned k) { return seq2[k]; };
    CHECK(recurrence_check(u2, h, 60).ok());
}

TEST_CASE("case formulas match the representation") {
    const LinRep& L = main_rep();
    CHECK(check_pow2_cases(L, 80).ok());
    CHECK(check_3pow2_cases(L, 80).ok());
    for (unsigned k = 2; k <= 40; ++k)
        CHECK(pow2_case_formula(k) == BigRat(value_pow2(L, k)));
    for (unsigned k = 5; k <= 40; ++k)
        CHECK(pow2_3case_formula(k) == BigRat(value_3pow2(L, k)));
}

TEST_CASE("scaling identity violations are confined to s in {0, 1}") {
    const LinRep& L = main_rep();
    PropertyReport r = scaling_identity_check(L, 3, 10);
    CHECK_FALSE(r.ok());
    // k = 1..3 each fail at s = 0 and s = 1; every other cell passes.
    CHECK(r.violations.size() == 6);
    for (const std::string& v : r.violations)
        CHECK((v.find(" s=0:") != std::string::npos ||
               v.find(" s=1:") != std::string::npos));
}

TEST_CASE("counting a different membership automaton") {
    LinRep L = counting_linrep(count_relation(gamma_parity_dfa()));
    for (std::uint64_t n : {0, 1, 10, 64, 200}) {
        std::uint64_t want = 0;
        for (std::uint64_t j = 1; j <= n; ++j)
            want += theta_direct(j).t1 == 0;
        CHECK(eval_linrep(L, n) == BigInt(want));
    }
}

TEST_CASE("golden power-of-two values match the representation") {
    std::ifstream f(std::string(FACTOROMATA_GOLDEN_DIR) + "/sbar_pow2.tsv");
    REQUIRE(f.good());
    auto seq = pow2_value_sequence(main_rep(), 60);
    unsigned k;
    std::string value;
    unsigned rows = 0;
    while (f >> k >> value) {
        REQUIRE(k <= 60);
        CHECK(seq[k] == BigInt(value));
        ++rows;
    }
    CHECK(rows == 61);
}

TEST_CASE("theta class representations head counts") {
    for (int idx : {0, 6}) {
        Dfa d = theta_dfa(idx >> 2 & 1, idx >> 1 & 1, idx & 1);
        LinRep L = counting_linrep(count_relation(d));
        for (std::uint64_t n : {100, 256}) {
            std::uint64_t want = 0;
            for (std::uint64_t j = 1; j <= n; ++j) {
                ThetaTriple t = theta_direct(j);
                want += 4 * t.t1 + 2 * t.t2 + t.t3 == idx;
            }
            CHECK(eval_linrep(L, n) == BigInt(want));
        }
    }
}

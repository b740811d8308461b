#pragma once
#include <cstdint>
#include <vector>

#include "factoromata/automata.hpp"
#include "factoromata/bignum.hpp"
#include "factoromata/report.hpp"

// Counting linear representations: value(n) = v * M_{n_0} * ... * M_{n_L} * w
// over the LSD digits of n, counting accepted witnesses exactly.
namespace factoromata {

struct LinRep {
    int dim = 0;
    std::vector<BigInt> v;                // row vector
    std::vector<std::vector<BigInt>> m0;  // digit-0 transition matrix
    std::vector<std::vector<BigInt>> m1;  // digit-1 transition matrix
    std::vector<BigInt> w;                // column vector
};

// reduce() output: same series, rational entries, minimal dimension.
struct RationalRep {
    int dim = 0;
    std::vector<BigRat> v;
    std::vector<std::vector<BigRat>> m0;
    std::vector<std::vector<BigRat>> m1;
    std::vector<BigRat> w;
};

// Builds the counting representation from a two-track relation DFA by
// projecting the witness track with multiplicities kept: v = initial
// indicator, M_b[q][q'] = number of witness digits d with
// delta(q, (b, d)) = q', w = accepting indicator. The relation must pin
// witness <= n so every witness fits in n's digit length. witness_var -1
// selects the higher track id.
LinRep counting_linrep(const Dfa& relation, int witness_var = -1);

// Exact product along the digits of n; n = 0 is the empty product v*w.
BigInt eval_linrep(const LinRep& L, std::uint64_t n);
BigRat eval_linrep(const RationalRep& L, std::uint64_t n);

// v * M0^k * M1 * w via repeated squaring of M0.
BigInt value_pow2(const LinRep& L, unsigned k);
// v * M0^k * M1 * M1 * w.
BigInt value_3pow2(const LinRep& L, unsigned k);
// value(2^k) for k = 0..k_max in one incremental row-vector sweep.
std::vector<BigInt> pow2_value_sequence(const LinRep& L, unsigned k_max);

RationalRep to_rational(const LinRep& L);

// Schuetzenberger reduction: forward-reachability span, then
// backward-observability span, both in exact rationals. The result is a
// minimal-dimension representation of the same series.
RationalRep reduce(const RationalRep& L);
RationalRep reduce(const LinRep& L);

// Case-table checks for value(2^k) (valid from k = 2) and value(3*2^k)
// (valid from k = 5): every k up to k_max must match the closed form for
// its residue class mod 24, evaluated in exact rationals.
PropertyReport check_pow2_cases(const LinRep& L, unsigned k_max);
PropertyReport check_3pow2_cases(const LinRep& L, unsigned k_max);

// The closed forms themselves (exact rationals; integral on valid k).
BigRat pow2_case_formula(unsigned k);
BigRat pow2_3case_formula(unsigned k);

// Verifies 8*value(2^{24k+s}) - 2^{24k+s} = 2^{12k} * (8*value(2^s) - 2^s)
// for 0 <= k <= k_max, 0 <= s <= s_max, 24k+s >= 2.
PropertyReport scaling_identity_check(const LinRep& L, unsigned k_max,
                                      unsigned s_max);

}  // namespace factoromata

#pragma once
#include <set>

#include "factoromata/automata.hpp"

// Seed predicates on one track named "n": parity of gamma = nu_2(n!),
// parity of the 3-bit-window counts alpha_3 and alpha_5, the eight
// Theta-triple automata, and factauto (n! not a sum of three squares).
namespace factoromata {

struct ThetaTriple {
    int t1 = 0;  // gamma mod 2
    int t2 = 0;  // alpha_3 mod 2
    int t3 = 0;  // alpha_5 mod 2
    bool operator==(const ThetaTriple&) const = default;
};

// Which 3-bit window values get counted: {3,4} for alpha_3, {5,6} for
// alpha_5. Must be a nonempty subset of {0..7}; sets containing 0 would
// count the all-zero tail windows and are rejected.
struct WindowSpec {
    std::set<int> target_set;
};

// Accepts n iff nu_2(n!) is even. Via Legendre, nu_2(n!) = n - s_2(n),
// whose parity is the parity of the 1-bits of n above the lowest position.
Dfa gamma_parity_dfa();

// Accepts n iff #{k >= 0 : (a_k + 2a_{k+1} + 4a_{k+2}) in target_set} is
// even, where a_i are the binary digits of n and digits past the most
// significant read as zero.
Dfa window_parity_dfa(const WindowSpec& spec);

// Accepts {n : Theta(n) = (x,y,z)}; minimized triple product.
Dfa theta_dfa(int x, int y, int z);

// theta_dfa(0,0,1): accepts n iff n! is not a sum of three squares.
Dfa factauto();

// Two-track counting relation over (n, j): 1 <= j <= n and membership
// accepts j. Feeding it to counting_linrep with witness track j yields
// value(n) = #{1 <= j <= n : j accepted}. Default membership: factauto.
Dfa count_relation(const Dfa& membership);
Dfa count_relation();

}  // namespace factoromata

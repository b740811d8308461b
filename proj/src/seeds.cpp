#include "factoromata/seeds.hpp"

namespace factoromata {

Dfa gamma_parity_dfa() {
    Dfa d;
    d.vars = {0};
    d.names = {"n"};
    d.initial = 0;
    // 0: nothing read (bit 0 of n never counts); 1: even parity so far;
    // 2: odd parity.
    d.delta = {{1, 1}, {1, 2}, {2, 1}};
    d.accept = {1, 1, 0};
    return d;
}

Dfa window_parity_dfa(const WindowSpec& spec) {
    if (spec.target_set.empty())
        throw AutomatonError("window_parity_dfa: empty target set");
    for (int v : spec.target_set)
        if (v < 0 || v > 7)
            throw AutomatonError("window_parity_dfa: target outside 0..7");
    if (spec.target_set.count(0))
        throw AutomatonError(
            "window_parity_dfa: target 0 makes the window count diverge");
    auto hit = [&](int w) { return spec.target_set.count(w) ? 1 : 0; };

    // State layout: 0 = no digits read; 1+y = one digit y read;
    // 3 + 4p + 2y + z = two or more digits read, (y,z) the last two,
    // p the parity of windows completed so far. Acceptance virtually
    // appends two zero digits to close the pending windows.
    Dfa d;
    d.vars = {0};
    d.names = {"n"};
    d.initial = 0;
    d.delta.assign(11, std::vector<int>(2, 0));
    d.accept.assign(11, 0);
    d.accept[0] = 1;
    for (int dgt = 0; dgt <= 1; ++dgt) d.delta[0][dgt] = 1 + dgt;
    for (int y = 0; y <= 1; ++y) {
        d.accept[1 + y] = hit(y) == 0 ? 1 : 0;
        for (int dgt = 0; dgt <= 1; ++dgt)
            d.delta[1 + y][dgt] = 3 + 2 * y + dgt;
    }
    for (int p = 0; p <= 1; ++p)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) {
                int q = 3 + 4 * p + 2 * y + z;
                d.accept[q] = ((p ^ hit(y + 2 * z) ^ hit(z)) == 0) ? 1 : 0;
                for (int dgt = 0; dgt <= 1; ++dgt) {
                    int np = p ^ hit(y + 2 * z + 4 * dgt);
                    d.delta[q][dgt] = 3 + 4 * np + 2 * z + dgt;
                }
            }
    return d;
}

Dfa theta_dfa(int x, int y, int z) {
    Dfa g = gamma_parity_dfa();
    Dfa a3 = window_parity_dfa({{3, 4}});
    Dfa a5 = window_parity_dfa({{5, 6}});
    if (x) g = complement(g);
    if (y) a3 = complement(a3);
    if (z) a5 = complement(a5);
    return minimize(product(product(g, a3, BoolOp::And), a5, BoolOp::And));
}

Dfa factauto() { return theta_dfa(0, 0, 1); }

Dfa count_relation(const Dfa& membership) {
    if (membership.width() != 1)
        throw AutomatonError("count_relation needs a one-track membership");
    Dfa mem = retrack(membership, {1});
    Dfa ge1 = complement(make_const(0, 1));
    Dfa le = make_less_equal(1, 0);
    Dfa d = minimize(
        product(product(ge1, le, BoolOp::And), mem, BoolOp::And));
    d.names = {"n", "j"};
    return d;
}

Dfa count_relation() { return count_relation(factauto()); }

}  // namespace factoromata

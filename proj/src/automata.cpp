#include "factoromata/automata.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

namespace factoromata {

std::size_t max_subset_states() {
    if (const char* s = std::getenv("FACTOROMATA_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

std::size_t canonical_length(const std::vector<std::uint64_t>& values) {
    std::size_t len = 0;
    for (std::uint64_t v : values) {
        std::size_t bits = 0;
        while (v) { ++bits; v >>= 1; }
        len = std::max(len, bits);
    }
    return len;
}

std::vector<Symbol> encode(const std::vector<std::uint64_t>& values,
                           std::size_t length) {
    if (length < canonical_length(values))
        throw AutomatonError("encode: length below canonical length");
    std::vector<Symbol> out(length, 0);
    for (std::size_t t = 0; t < values.size(); ++t)
        for (std::size_t i = 0; i < length; ++i)
            if (i < 64 && ((values[t] >> i) & 1)) out[i] |= 1u << t;
    return out;
}

int run(const Dfa& d, const std::vector<Symbol>& input) {
    int q = d.initial;
    for (Symbol s : input) q = d.delta[q][s];
    return q;
}

bool accepts(const Dfa& d, const std::vector<std::uint64_t>& values) {
    if (values.size() != d.vars.size())
        throw AutomatonError("accepts: track arity mismatch");
    return d.accept[run(d, encode(values, canonical_length(values)))] != 0;
}

namespace {

std::vector<std::string> default_names(const std::vector<int>& vars) {
    std::vector<std::string> out;
    out.reserve(vars.size());
    for (int v : vars) out.push_back("t" + std::to_string(v));
    return out;
}

int bit_of(Symbol s, int pos) { return (s >> pos) & 1; }

// Position of var within the sorted track list.
int track_pos(const std::vector<int>& vars, int var) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == var) return static_cast<int>(i);
    throw AutomatonError("unknown track id " + std::to_string(var));
}

// States from which an accepting state is reachable using only symbols in
// `allowed`; used for zero-tail saturation and for trimming.
template <class Edges>
std::vector<std::uint8_t> backward_reach(int n,
                                         const std::vector<std::uint8_t>& acc,
                                         const Edges& edges_into) {
    std::vector<std::uint8_t> good(acc.begin(), acc.end());
    std::queue<int> bfs;
    for (int q = 0; q < n; ++q)
        if (good[q]) bfs.push(q);
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        for (int p : edges_into(q))
            if (!good[p]) {
                good[p] = 1;
                bfs.push(p);
            }
    }
    return good;
}

}  // namespace

Dfa make_add(int x, int y, int z) {
    Dfa d;
    d.vars = {x, y, z};
    std::sort(d.vars.begin(), d.vars.end());
    if (d.vars[0] == d.vars[1] || d.vars[1] == d.vars[2])
        throw AutomatonError("make_add: tracks must be distinct");
    d.names = default_names(d.vars);
    int px = track_pos(d.vars, x), py = track_pos(d.vars, y),
        pz = track_pos(d.vars, z);
    // 0 = no carry (accepting), 1 = carry pending, 2 = mismatch sink
    d.delta.assign(3, std::vector<int>(8, 2));
    d.accept = {1, 0, 0};
    for (int carry = 0; carry <= 1; ++carry)
        for (Symbol s = 0; s < 8; ++s) {
            int sum = bit_of(s, px) + bit_of(s, py) + carry;
            d.delta[carry][s] = ((sum & 1) == bit_of(s, pz)) ? (sum >> 1) : 2;
        }
    return d;
}

namespace {

// 0 = equal so far, 1 = first < second, 2 = first > second; the most
// recently seen differing digit is the most significant, so it decides.
Dfa make_compare(int x, int y, std::vector<std::uint8_t> accept) {
    Dfa d;
    d.vars = {x, y};
    std::sort(d.vars.begin(), d.vars.end());
    if (d.vars[0] == d.vars[1])
        throw AutomatonError("compare: tracks must be distinct");
    d.names = default_names(d.vars);
    int px = track_pos(d.vars, x), py = track_pos(d.vars, y);
    d.delta.assign(3, std::vector<int>(4, 0));
    d.accept = std::move(accept);
    for (int q = 0; q < 3; ++q)
        for (Symbol s = 0; s < 4; ++s) {
            int a = bit_of(s, px), b = bit_of(s, py);
            d.delta[q][s] = (a == b) ? q : (a < b ? 1 : 2);
        }
    return d;
}

}  // namespace

Dfa make_less_equal(int x, int y) { return make_compare(x, y, {1, 1, 0}); }
Dfa make_less_than(int x, int y) { return make_compare(x, y, {0, 1, 0}); }

Dfa make_eq(int x, int y) {
    Dfa d;
    d.vars = {x, y};
    std::sort(d.vars.begin(), d.vars.end());
    if (d.vars[0] == d.vars[1])
        throw AutomatonError("make_eq: tracks must be distinct");
    d.names = default_names(d.vars);
    d.delta.assign(2, std::vector<int>(4, 1));
    d.accept = {1, 0};
    d.delta[0][0b00] = 0;
    d.delta[0][0b11] = 0;
    return d;
}

Dfa make_const(std::uint64_t c, int var) {
    std::size_t len = canonical_length({c});
    Dfa d;
    d.vars = {var};
    d.names = default_names(d.vars);
    int final_state = static_cast<int>(len);
    int sink = final_state + 1;
    d.delta.assign(len + 2, std::vector<int>(2, sink));
    d.accept.assign(len + 2, 0);
    d.accept[final_state] = 1;
    for (std::size_t i = 0; i < len; ++i)
        d.delta[i][(c >> i) & 1] = static_cast<int>(i) + 1;
    d.delta[final_state][0] = final_state;
    d.delta[sink][0] = sink;
    d.delta[sink][1] = sink;
    return d;
}

Dfa make_universal(const std::vector<int>& vars) {
    Dfa d;
    d.vars = vars;
    std::sort(d.vars.begin(), d.vars.end());
    d.names = default_names(d.vars);
    d.delta.assign(1, std::vector<int>(d.alphabet(), 0));
    d.accept = {1};
    return d;
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (auto& a : out.accept) a = a ? 0 : 1;
    return out;
}

Dfa align_tracks(const Dfa& d, const std::vector<int>& full) {
    std::vector<int> sorted(full);
    std::sort(sorted.begin(), sorted.end());
    if (sorted == d.vars) return d;
    Dfa out;
    out.vars = sorted;
    out.names.resize(sorted.size());
    std::vector<int> pos(d.vars.size());
    for (std::size_t i = 0; i < d.vars.size(); ++i)
        pos[i] = track_pos(sorted, d.vars[i]);
    for (std::size_t j = 0; j < sorted.size(); ++j) out.names[j] = "t" + std::to_string(sorted[j]);
    for (std::size_t i = 0; i < d.vars.size(); ++i) out.names[pos[i]] = d.names[i];
    out.initial = d.initial;
    out.accept = d.accept;
    unsigned big = 1u << sorted.size();
    out.delta.assign(d.states(), std::vector<int>(big, 0));
    for (int q = 0; q < d.states(); ++q)
        for (Symbol s = 0; s < big; ++s) {
            Symbol sub = 0;
            for (std::size_t i = 0; i < d.vars.size(); ++i)
                sub |= static_cast<Symbol>(bit_of(s, pos[i])) << i;
            out.delta[q][s] = d.delta[q][sub];
        }
    return out;
}

Dfa retrack(const Dfa& d, const std::vector<int>& to) {
    if (to.size() != d.vars.size())
        throw AutomatonError("retrack: track count mismatch");
    std::vector<std::pair<int, int>> order;  // (new id, old position)
    for (std::size_t i = 0; i < to.size(); ++i)
        order.emplace_back(to[i], static_cast<int>(i));
    std::sort(order.begin(), order.end());
    for (std::size_t i = 1; i < order.size(); ++i)
        if (order[i].first == order[i - 1].first)
            throw AutomatonError("retrack: duplicate track id");
    Dfa out;
    out.initial = d.initial;
    out.accept = d.accept;
    int w = d.width();
    for (auto& [id, opos] : order) {
        out.vars.push_back(id);
        out.names.push_back(d.names[opos]);
    }
    out.delta.assign(d.states(), std::vector<int>(std::size_t{1} << w, 0));
    for (int q = 0; q < d.states(); ++q)
        for (unsigned s = 0; s < (1u << w); ++s) {
            unsigned olds = 0;
            for (int k = 0; k < w; ++k)
                if (s >> k & 1) olds |= 1u << order[k].second;
            out.delta[q][s] = d.delta[q][olds];
        }
    return out;
}

Dfa product(const Dfa& d1, const Dfa& d2, BoolOp op) {
    std::vector<int> full;
    std::set_union(d1.vars.begin(), d1.vars.end(), d2.vars.begin(),
                   d2.vars.end(), std::back_inserter(full));
    Dfa a = align_tracks(d1, full);
    Dfa b = align_tracks(d2, full);
    for (std::size_t i = 0; i < a.vars.size(); ++i)
        if (a.names[i] == "t" + std::to_string(a.vars[i]) &&
            b.names[i] != a.names[i])
            a.names[i] = b.names[i];
    unsigned alpha = a.alphabet();
    Dfa out;
    out.vars = a.vars;
    out.names = a.names;
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::pair<int, int>> order;
    auto get = [&](int qa, int qb) {
        auto it = idx.find({qa, qb});
        if (it != idx.end()) return it->second;
        int id = static_cast<int>(order.size());
        idx.emplace(std::make_pair(qa, qb), id);
        order.emplace_back(qa, qb);
        return id;
    };
    auto verdict = [op](bool va, bool vb) {
        switch (op) {
            case BoolOp::And: return va && vb;
            case BoolOp::Or: return va || vb;
            case BoolOp::Xor: return va != vb;
            case BoolOp::Implies: return !va || vb;
        }
        return false;
    };
    get(a.initial, b.initial);
    out.initial = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [qa, qb] = order[i];
        out.delta.emplace_back(alpha, 0);
        for (Symbol s = 0; s < alpha; ++s)
            out.delta[i][s] = get(a.delta[qa][s], b.delta[qb][s]);
        out.accept.push_back(verdict(a.accept[qa] != 0, b.accept[qb] != 0) ? 1
                                                                           : 0);
    }
    return out;
}

Nfa project(const Dfa& d, int var) {
    int pos = track_pos(d.vars, var);
    // Saturate first: acceptance must survive the dropped witness having
    // more significant digits than every kept track.
    std::vector<std::vector<int>> into(d.states());
    for (int q = 0; q < d.states(); ++q)
        for (int digit = 0; digit <= 1; ++digit)
            into[d.delta[q][static_cast<Symbol>(digit) << pos]].push_back(q);
    auto saturated = backward_reach(
        d.states(), d.accept, [&](int q) -> const std::vector<int>& {
            return into[q];
        });
    Nfa out;
    out.vars = d.vars;
    out.vars.erase(out.vars.begin() + pos);
    out.names = d.names;
    out.names.erase(out.names.begin() + pos);
    out.initial.assign(d.states(), 0);
    out.initial[d.initial] = 1;
    out.accept = saturated;
    unsigned alpha = 1u << out.vars.size();
    out.trans.assign(d.states(), {});
    Symbol low_mask = (1u << pos) - 1;
    for (int q = 0; q < d.states(); ++q) {
        out.trans[q].resize(alpha);
        for (Symbol s = 0; s < alpha; ++s) {
            Symbol base = ((s & ~low_mask) << 1) | (s & low_mask);
            int t0 = d.delta[q][base];
            int t1 = d.delta[q][base | (1u << pos)];
            if (t0 == t1) {
                out.trans[q][s].emplace_back(t0, 2);
            } else {
                out.trans[q][s].emplace_back(t0, 1);
                out.trans[q][s].emplace_back(t1, 1);
            }
        }
    }
    return out;
}

Dfa determinize(const Nfa& a) {
    int n = a.states();
    // Re-saturate (harmless when already saturated).
    std::vector<std::vector<int>> into(n);
    for (int q = 0; q < n; ++q)
        for (auto [t, w] : a.trans[q][0])
            if (w > 0) into[t].push_back(q);
    auto acc = backward_reach(n, a.accept,
                              [&](int q) -> const std::vector<int>& {
                                  return into[q];
                              });

    int blocks = (n + 63) / 64;
    using Key = std::vector<std::uint64_t>;
    auto set_bit = [](Key& k, int i) { k[i / 64] |= 1ull << (i % 64); };
    Key start(blocks, 0);
    for (int q = 0; q < n; ++q)
        if (a.initial[q] > 0) set_bit(start, q);

    std::map<Key, int> idx;
    std::vector<Key> order;
    std::size_t cap = max_subset_states();
    auto get = [&](const Key& k) {
        auto it = idx.find(k);
        if (it != idx.end()) return it->second;
        if (order.size() >= cap)
            throw AutomatonError("determinize: subset budget exceeded (" +
                                 std::to_string(cap) + " states)");
        int id = static_cast<int>(order.size());
        idx.emplace(k, id);
        order.push_back(k);
        return id;
    };
    get(start);

    unsigned alpha = a.alphabet();
    Dfa out;
    out.vars = a.vars;
    out.names = a.names;
    out.initial = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Key cur = order[i];
        out.delta.emplace_back(alpha, 0);
        std::uint8_t any_acc = 0;
        for (int q = 0; q < n; ++q)
            if ((cur[q / 64] >> (q % 64)) & 1)
                if (acc[q]) any_acc = 1;
        out.accept.push_back(any_acc);
        for (Symbol s = 0; s < alpha; ++s) {
            Key next(blocks, 0);
            for (int q = 0; q < n; ++q)
                if ((cur[q / 64] >> (q % 64)) & 1)
                    for (auto [t, w] : a.trans[q][s])
                        if (w > 0) set_bit(next, t);
            out.delta[i][s] = get(next);
        }
    }
    return out;
}

Dfa minimize(const Dfa& d) {
    unsigned alpha = d.alphabet();
    // Reachable restriction.
    std::vector<int> id(d.states(), -1);
    std::vector<int> order;
    order.push_back(d.initial);
    id[d.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Symbol s = 0; s < alpha; ++s) {
            int t = d.delta[order[i]][s];
            if (id[t] < 0) {
                id[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    int n = static_cast<int>(order.size());
    std::vector<std::vector<int>> delta(n, std::vector<int>(alpha));
    std::vector<std::uint8_t> accept(n);
    for (int i = 0; i < n; ++i) {
        accept[i] = d.accept[order[i]];
        for (Symbol s = 0; s < alpha; ++s)
            delta[i][s] = id[d.delta[order[i]][s]];
    }
    // Moore refinement.
    std::vector<int> part(accept.begin(), accept.end());
    int parts = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(n);
        for (int q = 0; q < n; ++q) {
            std::vector<int> key;
            key.reserve(alpha + 1);
            key.push_back(part[q]);
            for (Symbol s = 0; s < alpha; ++s) key.push_back(part[delta[q][s]]);
            auto [it, fresh] =
                sig.emplace(std::move(key), static_cast<int>(sig.size()));
            next[q] = it->second;
            (void)fresh;
        }
        int count = static_cast<int>(sig.size());
        part.swap(next);
        if (count == parts) break;
        parts = count;
    }
    // Canonical BFS renumber of classes.
    std::vector<int> rep(parts, -1);
    for (int q = n - 1; q >= 0; --q) rep[part[q]] = q;
    std::vector<int> canon(parts, -1);
    std::vector<int> bfs;
    canon[part[0]] = 0;
    bfs.push_back(part[0]);
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (Symbol s = 0; s < alpha; ++s) {
            int t = part[delta[rep[bfs[i]]][s]];
            if (canon[t] < 0) {
                canon[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    Dfa out;
    out.vars = d.vars;
    out.names = d.names;
    out.initial = 0;
    out.delta.assign(parts, std::vector<int>(alpha));
    out.accept.assign(parts, 0);
    for (int c = 0; c < parts; ++c) {
        int q = rep[bfs[c]];
        out.accept[c] = accept[q];
        for (Symbol s = 0; s < alpha; ++s)
            out.delta[c][s] = canon[part[delta[q][s]]];
    }
    return out;
}

bool is_language_equal(const Dfa& d1, const Dfa& d2) {
    if (d1.vars.size() != d2.vars.size())
        throw AutomatonError("is_language_equal: arity mismatch");
    Dfa a = minimize(d1), b = minimize(d2);
    return a.delta == b.delta && a.accept == b.accept;
}

bool is_padding_invariant(const Dfa& d) {
    std::vector<std::uint8_t> seen(d.states(), 0);
    std::vector<int> bfs{d.initial};
    seen[d.initial] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        int q = bfs[i];
        if ((d.accept[q] != 0) != (d.accept[d.delta[q][0]] != 0)) return false;
        for (Symbol s = 0; s < d.alphabet(); ++s)
            if (!seen[d.delta[q][s]]) {
                seen[d.delta[q][s]] = 1;
                bfs.push_back(d.delta[q][s]);
            }
    }
    return true;
}

int state_count_complete(const Dfa& d) { return minimize(d).states(); }

int state_count_trimmed(const Dfa& d) {
    Dfa m = minimize(d);
    std::vector<std::vector<int>> into(m.states());
    for (int q = 0; q < m.states(); ++q)
        for (Symbol s = 0; s < m.alphabet(); ++s) into[m.delta[q][s]].push_back(q);
    auto live = backward_reach(m.states(), m.accept,
                               [&](int q) -> const std::vector<int>& {
                                   return into[q];
                               });
    int count = 0;
    for (auto b : live) count += b ? 1 : 0;
    return count;
}

int display_state_count(const Dfa& d) {
    Dfa m = minimize(d);
    int n = m.states();
    unsigned alpha = m.alphabet();
    int blocks = (n + 63) / 64;
    using Key = std::vector<std::uint64_t>;
    // Reverse-reading subset construction, with a stage flag enforcing
    // canonical input (no leading all-zero symbol; empty string allowed).
    Key start(blocks, 0);
    for (int q = 0; q < n; ++q)
        if (m.accept[q]) start[q / 64] |= 1ull << (q % 64);
    enum Stage { Fresh = 0, Ok = 1, Bad = 2 };
    std::map<std::pair<Key, int>, int> idx;
    std::vector<std::pair<Key, int>> order;
    auto get = [&](const Key& k, int st) {
        auto it = idx.find({k, st});
        if (it != idx.end()) return it->second;
        int id = static_cast<int>(order.size());
        idx.emplace(std::make_pair(k, st), id);
        order.emplace_back(k, st);
        return id;
    };
    get(start, Fresh);
    Dfa rev;
    rev.vars = m.vars;
    rev.names = m.names;
    rev.initial = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [cur, st] = order[i];
        rev.delta.emplace_back(alpha, 0);
        bool has_init = (cur[m.initial / 64] >> (m.initial % 64)) & 1;
        rev.accept.push_back(has_init && st != Bad ? 1 : 0);
        for (Symbol s = 0; s < alpha; ++s) {
            Key next(blocks, 0);
            for (int q = 0; q < n; ++q)
                if ((cur[m.delta[q][s] / 64] >> (m.delta[q][s] % 64)) & 1)
                    next[q / 64] |= 1ull << (q % 64);
            int nst = (st == Fresh) ? (s == 0 ? Bad : Ok) : st;
            rev.delta[i][s] = get(next, nst);
        }
    }
    return state_count_trimmed(rev);
}

std::vector<std::vector<std::uint64_t>> enumerate_accepted(
    const Dfa& d, std::uint64_t bound) {
    std::vector<std::vector<std::uint64_t>> out;
    if (d.width() == 1) {
        for (std::uint64_t n = 0; n <= bound; ++n)
            if (accepts(d, {n})) out.push_back({n});
    } else if (d.width() == 2) {
        for (std::uint64_t a = 0; a <= bound; ++a)
            for (std::uint64_t b = 0; b <= bound; ++b)
                if (accepts(d, {a, b})) out.push_back({a, b});
    } else {
        throw AutomatonError("enumerate_accepted: supports 1 or 2 tracks");
    }
    return out;
}

}  // namespace factoromata

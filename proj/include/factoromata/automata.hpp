#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Multi-track DFA/NFA engine over base-2 digit tuples, read least
// significant digit first. Zero is the empty string; every automaton keeps
// acceptance invariant under appended all-zero symbols so it recognizes
// numbers rather than particular digit strings.
namespace factoromata {

// A symbol packs one binary digit per track: bit t = digit of track t,
// where tracks follow the automaton's `vars` order.
using Symbol = unsigned;

enum class BoolOp { And, Or, Xor, Implies };

struct Dfa {
    std::vector<int> vars;          // sorted, distinct track ids
    std::vector<std::string> names; // parallel to vars (display only)
    int initial = 0;
    std::vector<std::vector<int>> delta;  // [state][symbol] -> state
    std::vector<std::uint8_t> accept;

    int states() const { return static_cast<int>(delta.size()); }
    int width() const { return static_cast<int>(vars.size()); }
    unsigned alphabet() const { return 1u << vars.size(); }
};

// Weighted NFA: carrier for projection. Transition multiplicities count
// how many dropped-track digit choices realize an edge; path counts stay
// finite because inputs are finite strings.
struct Nfa {
    std::vector<int> vars;
    std::vector<std::string> names;
    std::vector<long long> initial;  // weight per state
    // trans[state][symbol] = list of (target, multiplicity)
    std::vector<std::vector<std::vector<std::pair<int, long long>>>> trans;
    std::vector<std::uint8_t> accept;

    int states() const { return static_cast<int>(trans.size()); }
    int width() const { return static_cast<int>(vars.size()); }
    unsigned alphabet() const { return 1u << vars.size(); }
};

struct AutomatonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Determinization subset budget; FACTOROMATA_MAX_STATES overrides.
std::size_t max_subset_states();

// --- encoding -------------------------------------------------------------

std::size_t canonical_length(const std::vector<std::uint64_t>& values);
// LSD-first digit strings, zero padded to `length`, zipped into symbols.
// Throws AutomatonError if length < canonical_length.
std::vector<Symbol> encode(const std::vector<std::uint64_t>& values,
                           std::size_t length);

int run(const Dfa& d, const std::vector<Symbol>& input);
bool accepts(const Dfa& d, const std::vector<std::uint64_t>& values);

// --- base relations -------------------------------------------------------

// x + y = z over tracks (x, y, z): two carry states plus a mismatch sink.
Dfa make_add(int x, int y, int z);
Dfa make_less_equal(int x, int y);
Dfa make_less_than(int x, int y);
Dfa make_eq(int x, int y);
// Accepts exactly c on track `var`.
Dfa make_const(std::uint64_t c, int var);
// Accepts everything over the given tracks (used for vacuous formulas).
Dfa make_universal(const std::vector<int>& vars);

// --- boolean algebra ------------------------------------------------------

Dfa complement(const Dfa& d);
// Aligns both operands to the union of their tracks first.
Dfa product(const Dfa& d1, const Dfa& d2, BoolOp op);
// Extends d to `full` (a superset of d.vars, sorted); new tracks ignored.
Dfa align_tracks(const Dfa& d, const std::vector<int>& full);
// Renames tracks: the track at sorted position i gets id to[i]. The new
// ids must be distinct; symbols are re-wired to the new sorted order.
Dfa retrack(const Dfa& d, const std::vector<int>& to);

// --- projection / determinization / minimization ---------------------------

// Drops `var`, summing multiplicities over the two dropped digits. The
// accepting set is zero-tail saturated: a state accepts iff an accepting
// state is reachable along symbols that are all-zero on every kept track
// (the dropped track free), so longer witnesses are not lost.
Nfa project(const Dfa& d, int var);
// Subset construction to a complete DFA; re-saturates first. Throws
// AutomatonError when the subset count exceeds max_subset_states().
Dfa determinize(const Nfa& a);
// Canonical minimal complete DFA: Moore refinement, then states renumbered
// in BFS order with symbols tried in increasing numeric order, so equal
// languages yield bit-identical encodings.
Dfa minimize(const Dfa& d);
bool is_language_equal(const Dfa& d1, const Dfa& d2);

bool is_padding_invariant(const Dfa& d);

// --- state-count conventions ----------------------------------------------

// Convention "sink": states of the minimal complete DFA.
int state_count_complete(const Dfa& d);
// Convention "trim": minimal complete DFA minus dead states (states from
// which acceptance is unreachable).
int state_count_trimmed(const Dfa& d);
// Display convention used by drawn diagrams: the automaton re-read most
// significant digit first, restricted to canonical inputs (no leading
// zero symbol), minimized, dead states trimmed.
int display_state_count(const Dfa& d);

// --- enumeration ----------------------------------------------------------

// All accepted tuples with every component <= bound, ascending
// (lexicographic for 2 tracks). Supports 1- and 2-track automata.
std::vector<std::vector<std::uint64_t>> enumerate_accepted(
    const Dfa& d, std::uint64_t bound);

}  // namespace factoromata

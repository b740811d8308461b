#pragma once
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "factoromata/automata.hpp"
#include "factoromata/linrep.hpp"

// Plain-text serialization.
//
// Automaton files ("automaton/1"):
//   automaton/1
//   tracks: <name...>          (track order; loader assigns ids 0,1,...)
//   states: <m>
//   initial: <id>
//   accepting: <id...>         (possibly empty)
//   <from> <bits> <to> [mult]  (one line per edge; bits[t] = digit of track t)
// DFA files carry every (state, symbol) pair exactly once with no
// multiplicities; NFA files may repeat (from, bits) and annotate weights.
//
// Linear representation files ("linrep/1"):
//   linrep/1
//   dim: <d>
//   v: <d integers>
//   M0:                        (then d rows of d integers)
//   M1:                        (then d rows of d integers)
//   w: <d integers>
namespace factoromata {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void save_dfa(const Dfa& d, std::ostream& os);
void save_dfa(const Dfa& d, const std::string& path);
Dfa load_dfa(std::istream& is);
Dfa load_dfa(const std::string& path);

// Requires exactly one initial state.
void save_nfa(const Nfa& n, std::ostream& os);
void save_nfa(const Nfa& n, const std::string& path);

void save_linrep(const LinRep& rep, std::ostream& os);
void save_linrep(const LinRep& rep, const std::string& path);
LinRep load_linrep(std::istream& is);
LinRep load_linrep(const std::string& path);

}  // namespace factoromata

#include "factoromata/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace factoromata {
namespace {

[[noreturn]] void bad(int line, const std::string& msg) {
    throw IoError("line " + std::to_string(line) + ": " + msg);
}

std::string bits_of(unsigned sym, int width) {
    std::string b(static_cast<std::size_t>(width), '0');
    for (int t = 0; t < width; ++t)
        if (sym >> t & 1) b[t] = '1';
    return b;
}

struct LineReader {
    std::istream& is;
    int line_no = 0;

    // next nonblank line, \r stripped
    bool next(std::string& out) {
        while (std::getline(is, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (out.find_first_not_of(" \t") != std::string::npos) return true;
        }
        return false;
    }

    std::string require(const char* what) {
        std::string s;
        if (!next(s)) bad(line_no + 1, std::string("expected ") + what);
        return s;
    }
};

std::vector<std::string> split(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

// strips "key:" and returns the remaining tokens
std::vector<std::string> keyed(LineReader& r, const std::string& line,
                               const std::string& key) {
    std::vector<std::string> toks = split(line);
    if (toks.empty() || toks[0] != key + ":")
        bad(r.line_no, "expected '" + key + ":'");
    toks.erase(toks.begin());
    return toks;
}

long parse_int(LineReader& r, const std::string& tok, long lo, long hi) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        bad(r.line_no, "bad integer '" + tok + "'");
    }
    if (used != tok.size() || v < lo || v > hi)
        bad(r.line_no, "integer '" + tok + "' out of range");
    return v;
}

struct Header {
    std::vector<std::string> names;
    int states = 0;
    int initial = 0;
    std::vector<int> accepting;
};

Header read_header(LineReader& r) {
    std::string line = r.require("automaton/1 header");
    if (split(line) != std::vector<std::string>{"automaton/1"})
        bad(r.line_no, "not an automaton/1 file");
    Header h;
    h.names = keyed(r, r.require("tracks"), "tracks");
    if (h.names.empty() || h.names.size() > 16)
        bad(r.line_no, "track count must be 1..16");
    auto st = keyed(r, r.require("states"), "states");
    if (st.size() != 1) bad(r.line_no, "expected one state count");
    h.states = static_cast<int>(parse_int(r, st[0], 1, 1 << 24));
    auto in = keyed(r, r.require("initial"), "initial");
    if (in.size() != 1) bad(r.line_no, "expected one initial state");
    h.initial = static_cast<int>(parse_int(r, in[0], 0, h.states - 1));
    for (auto& t : keyed(r, r.require("accepting"), "accepting"))
        h.accepting.push_back(
            static_cast<int>(parse_int(r, t, 0, h.states - 1)));
    return h;
}

void write_header(std::ostream& os, const std::vector<std::string>& names,
                  std::size_t states, int initial,
                  const std::vector<std::uint8_t>& accept) {
    os << "automaton/1\n";
    os << "tracks:";
    for (const std::string& n : names) os << ' ' << n;
    os << '\n';
    os << "states: " << states << '\n';
    os << "initial: " << initial << '\n';
    os << "accepting:";
    for (std::size_t q = 0; q < accept.size(); ++q)
        if (accept[q]) os << ' ' << q;
    os << '\n';
}

}  // namespace

void save_dfa(const Dfa& d, std::ostream& os) {
    if (d.width() < 1) throw IoError("cannot save a zero-track automaton");
    write_header(os, d.names, d.states(), d.initial, d.accept);
    for (int q = 0; q < d.states(); ++q)
        for (unsigned s = 0; s < d.alphabet(); ++s)
            os << q << ' ' << bits_of(s, d.width()) << ' ' << d.delta[q][s]
               << '\n';
    if (!os) throw IoError("write failed");
}

void save_dfa(const Dfa& d, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    save_dfa(d, os);
}

Dfa load_dfa(std::istream& is) {
    LineReader r{is};
    Header h = read_header(r);
    int w = static_cast<int>(h.names.size());
    Dfa d;
    d.names = h.names;
    for (int t = 0; t < w; ++t) d.vars.push_back(t);
    d.initial = h.initial;
    d.accept.assign(h.states, 0);
    for (int q : h.accepting) d.accept[q] = 1;
    d.delta.assign(h.states, std::vector<int>(std::size_t{1} << w, -1));

    std::string line;
    while (r.next(line)) {
        auto toks = split(line);
        if (toks.size() < 3 || toks.size() > 4)
            bad(r.line_no, "expected 'from bits to [mult]'");
        int from = static_cast<int>(parse_int(r, toks[0], 0, h.states - 1));
        if (static_cast<int>(toks[1].size()) != w)
            bad(r.line_no, "bit string width mismatch");
        unsigned sym = 0;
        for (int t = 0; t < w; ++t) {
            char c = toks[1][t];
            if (c != '0' && c != '1') bad(r.line_no, "bad bit string");
            if (c == '1') sym |= 1u << t;
        }
        int to = static_cast<int>(parse_int(r, toks[2], 0, h.states - 1));
        if (toks.size() == 4 && parse_int(r, toks[3], 1, 1) != 1)
            bad(r.line_no, "dfa edges cannot carry multiplicities");
        if (d.delta[from][sym] != -1)
            bad(r.line_no, "duplicate edge");
        d.delta[from][sym] = to;
    }
    for (int q = 0; q < h.states; ++q)
        for (unsigned s = 0; s < d.alphabet(); ++s)
            if (d.delta[q][s] == -1)
                throw IoError("incomplete dfa: state " + std::to_string(q) +
                              " lacks symbol " + bits_of(s, w));
    return d;
}

Dfa load_dfa(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    return load_dfa(is);
}

void save_nfa(const Nfa& n, std::ostream& os) {
    if (n.vars.empty()) throw IoError("cannot save a zero-track automaton");
    int start = -1;
    for (std::size_t q = 0; q < n.initial.size(); ++q) {
        if (n.initial[q] == 0) continue;
        if (start >= 0 || n.initial[q] != 1)
            throw IoError("nfa save requires exactly one initial state");
        start = static_cast<int>(q);
    }
    if (start < 0)
        throw IoError("nfa save requires exactly one initial state");
    int w = static_cast<int>(n.vars.size());
    write_header(os, n.names, n.trans.size(), start, n.accept);
    for (std::size_t q = 0; q < n.trans.size(); ++q) {
        for (unsigned s = 0; s < n.trans[q].size(); ++s) {
            for (const auto& [to, mult] : n.trans[q][s]) {
                os << q << ' ' << bits_of(s, w) << ' ' << to;
                if (mult != 1) os << ' ' << mult;
                os << '\n';
            }
        }
    }
    if (!os) throw IoError("write failed");
}

void save_nfa(const Nfa& n, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    save_nfa(n, os);
}

namespace {

std::vector<BigInt> big_row(LineReader& r, const std::vector<std::string>& toks,
                            int dim) {
    if (static_cast<int>(toks.size()) != dim)
        bad(r.line_no, "expected " + std::to_string(dim) + " entries");
    std::vector<BigInt> out;
    out.reserve(toks.size());
    for (const std::string& t : toks) {
        try {
            out.emplace_back(t);
        } catch (const std::exception&) {
            bad(r.line_no, "bad integer '" + t + "'");
        }
    }
    return out;
}

std::vector<std::vector<BigInt>> big_matrix(LineReader& r, int dim) {
    std::vector<std::vector<BigInt>> m;
    for (int i = 0; i < dim; ++i)
        m.push_back(big_row(r, split(r.require("matrix row")), dim));
    return m;
}

void write_vec(std::ostream& os, const char* key,
               const std::vector<BigInt>& v) {
    os << key << ':';
    for (const BigInt& x : v) os << ' ' << x;
    os << '\n';
}

}  // namespace

void save_linrep(const LinRep& rep, std::ostream& os) {
    os << "linrep/1\n";
    os << "dim: " << rep.dim << '\n';
    write_vec(os, "v", rep.v);
    os << "M0:\n";
    for (const auto& row : rep.m0) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    os << "M1:\n";
    for (const auto& row : rep.m1) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    write_vec(os, "w", rep.w);
    if (!os) throw IoError("write failed");
}

void save_linrep(const LinRep& rep, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    save_linrep(rep, os);
}

LinRep load_linrep(std::istream& is) {
    LineReader r{is};
    std::string line = r.require("linrep/1 header");
    if (split(line) != std::vector<std::string>{"linrep/1"})
        bad(r.line_no, "not a linrep/1 file");
    auto dt = keyed(r, r.require("dim"), "dim");
    if (dt.size() != 1) bad(r.line_no, "expected one dimension");
    int dim = static_cast<int>(parse_int(r, dt[0], 1, 1 << 20));
    LinRep rep;
    rep.dim = dim;
    rep.v = big_row(r, keyed(r, r.require("v"), "v"), dim);
    if (split(r.require("M0")) != std::vector<std::string>{"M0:"})
        bad(r.line_no, "expected 'M0:'");
    rep.m0 = big_matrix(r, dim);
    std::string m1line = r.require("M1");
    if (split(m1line) != std::vector<std::string>{"M1:"})
        bad(r.line_no, "expected 'M1:'");
    rep.m1 = big_matrix(r, dim);
    rep.w = big_row(r, keyed(r, r.require("w"), "w"), dim);
    return rep;
}

LinRep load_linrep(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    return load_linrep(is);
}

}  // namespace factoromata

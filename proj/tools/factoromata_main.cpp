// factoromata: build the automata, evaluate and count, compile queries,
// and run the verification suite. All numbers are decimal; automata and
// linear representations are written as plain-text files.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "factoromata/algebra.hpp"
#include "factoromata/io.hpp"
#include "factoromata/linrep.hpp"
#include "factoromata/oracle.hpp"
#include "factoromata/query.hpp"
#include "factoromata/seeds.hpp"
#include "factoromata/verify.hpp"

using namespace factoromata;

namespace {

int count_by_convention(const Dfa& d, const std::string& convention) {
    return convention == "trim" ? state_count_trimmed(d)
                                : state_count_complete(d);
}

void print_counts(const std::string& name, const Dfa& d) {
    std::printf("%-14s states: %d complete, %d trimmed, %d display\n",
                name.c_str(), state_count_complete(d), state_count_trimmed(d),
                display_state_count(d));
}

std::uint64_t parse_u64(const std::string& s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used, 10);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a decimal number, got '" + s +
                                   "'");
    }
    if (used != s.size())
        throw CLI::ValidationError("expected a decimal number, got '" + s +
                                   "'");
    return v;
}

std::vector<std::uint64_t> parse_tuple(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_u64(part));
    if (out.empty()) throw CLI::ValidationError("empty value tuple");
    return out;
}

int cmd_seed(const std::string& outdir) {
    auto emit = [&](const std::string& name, const Dfa& raw) {
        Dfa d = minimize(raw);
        save_dfa(d, outdir + "/" + name + ".aut");
        print_counts(name, d);
    };
    emit("gamma", gamma_parity_dfa());
    emit("a3", window_parity_dfa({{3, 4}}));
    emit("a5", window_parity_dfa({{5, 6}}));
    emit("factauto", factauto());
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) {
                std::string name = "theta_" + std::to_string(x) +
                                   std::to_string(y) + std::to_string(z);
                Dfa d = theta_dfa(x, y, z);
                emit(name, d);
                save_linrep(counting_linrep(count_relation(d)),
                            outdir + "/" + name + "_count.lr");
            }
    save_linrep(counting_linrep(count_relation()),
                outdir + "/factauto_count.lr");
    std::printf("wrote 12 automata and 9 linear representations to %s\n",
                outdir.c_str());
    return 0;
}

int cmd_eval(const std::string& file,
             const std::vector<std::string>& tuples) {
    Dfa d = load_dfa(file);
    for (const std::string& t : tuples) {
        std::vector<std::uint64_t> values = parse_tuple(t);
        if (static_cast<int>(values.size()) != d.width())
            throw CLI::ValidationError(
                "automaton has " + std::to_string(d.width()) +
                " tracks, got " + std::to_string(values.size()) + " values");
        std::printf("%s %s\n", t.c_str(),
                    accepts(d, values) ? "accept" : "reject");
    }
    return 0;
}

int cmd_count(const std::string& n_text) {
    std::uint64_t n = parse_u64(n_text);
    LinRep L = counting_linrep(count_relation());
    std::printf("%s\n", eval_linrep(L, n).str().c_str());
    return 0;
}

void print_lengths(const std::set<std::uint64_t>& lengths) {
    std::string line;
    for (std::uint64_t v : lengths) {
        if (!line.empty()) line += " ";
        line += std::to_string(v);
    }
    std::printf("%s\n", line.c_str());
}

int cmd_gaps(const std::string& set_name, std::uint64_t limit,
             const std::string& out, const std::string& convention) {
    PredicateRegistry reg = standard_registry();
    Dfa d = set_name == "S" ? sgaps_dfa(reg) : gaps_dfa(reg);
    std::printf("%s gap automaton: %d states (%s)\n", set_name.c_str(),
                count_by_convention(d, convention), convention.c_str());
    std::printf("gap lengths up to %llu:\n",
                static_cast<unsigned long long>(limit));
    print_lengths(gap_length_set(d, limit));
    if (!out.empty()) {
        save_dfa(d, out);
        std::printf("automaton written to %s\n", out.c_str());
    }
    return 0;
}

int cmd_query(const std::string& text, std::uint64_t limit,
              const std::string& out, const std::string& convention) {
    PredicateRegistry reg = standard_registry();
    reg.add("gaps", gaps_dfa(reg));
    reg.add("sgaps", sgaps_dfa(reg));
    Dfa d = compile_query(text, reg);
    std::string tracks;
    for (const std::string& name : d.names) {
        if (!tracks.empty()) tracks += ", ";
        tracks += name;
    }
    std::printf("tracks: %s\n", tracks.c_str());
    std::printf("states: %d (%s)\n", count_by_convention(d, convention),
                convention.c_str());
    if (d.width() <= 2) {
        auto sols = enumerate_accepted(d, limit);
        std::printf("accepted up to %llu: %zu\n",
                    static_cast<unsigned long long>(limit), sols.size());
        for (const auto& tup : sols) {
            std::string line;
            for (std::uint64_t v : tup) {
                if (!line.empty()) line += ",";
                line += std::to_string(v);
            }
            std::printf("%s\n", line.c_str());
        }
    } else {
        std::printf("enumeration skipped: %d tracks (supported up to 2)\n",
                    d.width());
    }
    if (!out.empty()) {
        save_dfa(d, out);
        std::printf("automaton written to %s\n", out.c_str());
    }
    return 0;
}

int cmd_minpoly() {
    LinRep L = counting_linrep(count_relation());
    RationalRep R = reduce(L);
    IntPolynomial mp = minimal_polynomial(R.m0);
    std::printf("reduced dimension: %d\n", R.dim);
    std::printf("minimal polynomial of the digit-0 matrix, degree %d,\n"
                "coefficients constant term first:\n",
                mp.degree());
    std::string line;
    for (const BigInt& c : mp.c) {
        if (!line.empty()) line += " ";
        line += c.str();
    }
    std::printf("%s\n", line.c_str());
    IntPolynomial h = h_polynomial();
    bool shifted = poly_mul(make_poly({0, 0, 1}), mp).c == h.c;
    std::printf("x^2 * minpoly == recorded degree-20 annihilator: %s\n",
                shifted ? "yes" : "no");
    return shifted ? 0 : 1;
}

int cmd_verify(const std::string& level, const std::string& golden_dir) {
    VerifyOptions opt = level == "full" ? full_options() : quick_options();
    if (!golden_dir.empty()) opt.golden_dir = golden_dir;
    int fails = 0, passes = 0, infos = 0;
    for (int c = 1; c <= 13; ++c) {
        for (const CheckResult& r : run_criterion(c, opt)) {
            std::puts(format_result(r).c_str());
            if (r.status == CheckStatus::Fail) ++fails;
            if (r.status == CheckStatus::Pass) ++passes;
            if (r.status == CheckStatus::Info) ++infos;
        }
    }
    std::printf("verify (%s): %d passed, %d failed, %d info\n", level.c_str(),
                passes, fails, infos);
    return fails == 0 ? 0 : 1;
}

int cmd_scan_density(std::uint64_t limit, const std::string& out) {
    std::uint64_t floor_n = std::uint64_t{1} << 10;
    DensityProfile base = density_profile(std::uint64_t{1} << 15, floor_n);
    DensityProfile top = density_profile(limit, floor_n);
    int log2_limit = 0;
    while ((std::uint64_t{1} << (log2_limit + 1)) <= limit) ++log2_limit;
    std::string suffix = (std::uint64_t{1} << log2_limit) == limit
                             ? std::to_string(log2_limit)
                             : "limit";
    std::ostringstream os;
    os << "argmax_15 " << base.argmax << "\n"
       << "dev8_15 " << base.dev8_at_argmax << "\n"
       << "sbar_15 " << base.sbar_at_argmax << "\n"
       << "argmax_" << suffix << " " << top.argmax << "\n"
       << "dev8_" << suffix << " " << top.dev8_at_argmax << "\n"
       << "sbar_" << suffix << " " << top.sbar_at_argmax << "\n"
       << "pos_" << suffix << " " << top.pos_count << "\n"
       << "neg_" << suffix << " " << top.neg_count << "\n";
    if (out.empty()) {
        std::fputs(os.str().c_str(), stdout);
    } else {
        std::ofstream f(out);
        if (!f) throw CLI::ValidationError("cannot open " + out);
        f << os.str();
        std::printf("density record written to %s\n", out.c_str());
    }
    std::fprintf(stderr, "sup deviation at n=%llu: %.6f\n",
                 static_cast<unsigned long long>(top.argmax), top.d_value);
    return 0;
}

int cmd_theta(const std::string& n_text) {
    std::uint64_t n = parse_u64(n_text);
    ThetaTriple t = theta_direct(n);
    std::printf("theta(%llu) = (%d, %d, %d)%s\n",
                static_cast<unsigned long long>(n), t.t1, t.t2, t.t3,
                t == ThetaTriple{0, 0, 1}
                    ? "  [n! is not a sum of three squares]"
                    : "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorials that are not sums of three squares: automata, "
                 "counting, and verification"};
    app.require_subcommand(1);

    std::string outdir = ".";
    auto* seed = app.add_subcommand(
        "seed", "write the seed automata and counting representations");
    seed->add_option("--out", outdir, "output directory")
        ->capture_default_str();

    std::string eval_file;
    std::vector<std::string> eval_values;
    auto* eval = app.add_subcommand("eval", "run an automaton file on values");
    eval->add_option("file", eval_file, "automaton file")->required();
    eval->add_option("values", eval_values,
                     "decimal values; comma-separated tuple per track")
        ->required();

    std::string count_n;
    auto* count = app.add_subcommand(
        "count", "exact number of members up to n");
    count->add_option("n", count_n, "upper bound")->required();

    std::string gaps_set = "Sbar";
    std::uint64_t limit = 64;
    std::string out_file;
    std::string convention = "sink";
    auto* gaps = app.add_subcommand("gaps", "compile a gap automaton");
    gaps->add_option("set", gaps_set, "S or Sbar")
        ->check(CLI::IsMember({"S", "Sbar"}))
        ->required();
    gaps->add_option("--limit", limit, "largest length to report")
        ->capture_default_str();
    gaps->add_option("--out", out_file, "write the automaton here");
    gaps->add_option("--convention", convention,
                     "state count convention")
        ->check(CLI::IsMember({"sink", "trim"}));

    std::string query_text;
    auto* query = app.add_subcommand("query", "compile a first-order query");
    query->add_option("text", query_text, "query text")->required();
    query->add_option("--limit", limit, "enumeration bound")
        ->capture_default_str();
    query->add_option("--out", out_file, "write the automaton here");
    query->add_option("--convention", convention,
                      "state count convention")
        ->check(CLI::IsMember({"sink", "trim"}));

    auto* minpoly = app.add_subcommand(
        "minpoly", "minimal polynomial of the reduced counting matrix");
    (void)minpoly;

    std::string level = "quick";
    std::string golden_dir;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    verify->add_option("--golden", golden_dir, "override golden data dir");

    std::uint64_t density_limit = std::uint64_t{1} << 20;
    auto* density = app.add_subcommand(
        "scan-density", "record the member-density profile");
    density->add_option("--limit", density_limit, "scan bound")
        ->capture_default_str();
    density->add_option("--out", out_file, "write the record here");

    std::string theta_n;
    auto* theta = app.add_subcommand("theta", "the parity triple of n");
    theta->add_option("n", theta_n, "argument")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (seed->parsed()) return cmd_seed(outdir);
        if (eval->parsed()) return cmd_eval(eval_file, eval_values);
        if (count->parsed()) return cmd_count(count_n);
        if (gaps->parsed())
            return cmd_gaps(gaps_set, limit, out_file, convention);
        if (query->parsed())
            return cmd_query(query_text, limit, out_file, convention);
        if (minpoly->parsed()) return cmd_minpoly();
        if (verify->parsed()) return cmd_verify(level, golden_dir);
        if (density->parsed()) return cmd_scan_density(density_limit, out_file);
        if (theta->parsed()) return cmd_theta(theta_n);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

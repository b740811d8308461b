#include "factoromata/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "factoromata/linrep.hpp"
#include "factoromata/oracle.hpp"
#include "factoromata/query.hpp"
#include "factoromata/seeds.hpp"

#ifndef FACTOROMATA_GOLDEN_DIR
#define FACTOROMATA_GOLDEN_DIR ""
#endif

namespace factoromata {

VerifyOptions quick_options() {
    VerifyOptions o;
    o.scan_limit = std::uint64_t{1} << 16;
    o.case_k_max = 60;
    o.recurrence_k_max = 60;
    o.deep = false;
    return o;
}

VerifyOptions full_options() {
    VerifyOptions o;
    o.scan_limit = std::uint64_t{1} << 20;
    o.case_k_max = 120;
    o.recurrence_k_max = 200;
    o.deep = true;
    return o;
}

IntPolynomial h_polynomial() {
    return make_poly({0,   0,    0,     0,   -256, 896, -1280,
                      960, -384, 0,     160, -128, 0,   64,
                      -40, 0,    24,    -30, 20,   -7,  1});
}

namespace {

using Results = std::vector<CheckResult>;

template <typename T>
std::string str(const T& x) {
    std::ostringstream ss;
    ss << x;
    return ss.str();
}

std::string dstr(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

CheckResult mk(std::string id, bool ok, std::string expected,
               std::string observed, const char* provenance) {
    return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail,
            std::move(expected), std::move(observed), provenance};
}

CheckResult note(std::string id, std::string expected, std::string observed,
                 const char* provenance) {
    return {std::move(id), CheckStatus::Info, std::move(expected),
            std::move(observed), provenance};
}

const std::set<std::uint64_t>& sbar_gap_lengths() {
    static const std::set<std::uint64_t> s = [] {
        std::set<std::uint64_t> t;
        for (std::uint64_t r = 1; r <= 23; ++r) t.insert(r);
        for (int r : {25, 26, 28, 30, 31, 33, 34, 35, 37, 38, 42})
            t.insert(static_cast<std::uint64_t>(r));
        return t;
    }();
    return s;
}

const std::set<std::uint64_t>& s_gap_lengths() {
    static const std::set<std::uint64_t> s = {1, 2, 3, 4};
    return s;
}

std::string set_str(const std::set<std::uint64_t>& s) {
    std::string out = "{";
    for (std::uint64_t v : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(v);
    }
    return out + "}";
}

bool load_golden(const VerifyOptions& o, const char* name,
                 std::map<std::string, std::string>& kv) {
    std::string dir =
        o.golden_dir.empty() ? std::string(FACTOROMATA_GOLDEN_DIR) : o.golden_dir;
    std::ifstream is(dir + "/" + name);
    if (!is) return false;
    std::string k, v;
    while (is >> k >> v) kv[k] = v;
    return true;
}

IntPolynomial monomial(int d) {
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, BigInt(0));
    c[d] = 1;
    return make_poly(std::move(c));
}

IntPolynomial spectral_base() {
    IntPolynomial base = poly_mul(make_poly({-1, 1}), make_poly({-2, 1}));
    std::vector<BigInt> x24(25, BigInt(0));
    x24[0] = -4096;
    x24[24] = 1;
    return poly_mul(base, make_poly(std::move(x24)));
}

void crit1(const VerifyOptions& o, Results& out) {
    Dfa f = factauto();
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= o.scan_limit; ++n) {
        if (accepts(f, {n}) != (theta_direct(n) == ThetaTriple{0, 0, 1})) {
            bad = n;
            break;
        }
    }
    out.push_back(mk("c01.theta-oracle-agreement", bad == 0,
                     "agreement on [1, " + std::to_string(o.scan_limit) + "]",
                     bad ? "mismatch at n=" + std::to_string(bad) : "agreement",
                     "derived"));
    std::uint64_t bad2 = 0;
    for (unsigned n = 1; n <= 25; ++n) {
        bool member = accepts(f, {n});
        bool fails3sq = !three_square_test(factorial_exact(n));
        if (member != fails3sq) {
            bad2 = n;
            break;
        }
    }
    out.push_back(
        mk("c01.exact-three-square-agreement", bad2 == 0,
           "agreement with the 4^a(8b+7) test on [1, 25]",
           bad2 ? "mismatch at n=" + std::to_string(bad2) : "agreement",
           "derived"));
}

void crit2(const VerifyOptions&, Results& out) {
    const std::uint64_t limit = 100000;
    static const int table[2][2] = {{1, 7}, {3, 5}};
    std::uint64_t violations = 0, first_bad = 0;
    int res = 1;
    std::uint64_t nu2 = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        std::uint64_t m = n;
        while ((m & 1) == 0) {
            m >>= 1;
            ++nu2;
        }
        res = static_cast<int>((static_cast<std::uint64_t>(res) * (m & 7)) & 7);
        ThetaTriple t = theta_direct(n);
        bool ok = res == table[t.t2][t.t3] &&
                  (nu2 & 1) == static_cast<std::uint64_t>(t.t1);
        if (!ok && violations++ == 0) first_bad = n;
    }
    out.push_back(mk(
        "c02.odd-residue-identity", violations == 0,
        "odd part of n! is 3^a3 * (-1)^a5 mod 8 for n <= 100000",
        violations == 0 ? "holds for all n"
                        : "first violation at n=" + std::to_string(first_bad),
        "published"));
    FactorialResidue fr = factorial_residue(10);
    out.push_back(mk("c02.residue-oracle-spot", fr.nu2 == 8 && fr.odd_mod8 == 7,
                     "10! = 2^8 * odd, odd mod 8 = 7",
                     "nu2=" + std::to_string(fr.nu2) +
                         ", odd_mod8=" + std::to_string(fr.odd_mod8),
                     "derived"));
}

void crit3(const VerifyOptions& o, Results& out) {
    Dfa f = factauto();
    int disp = display_state_count(f);
    out.push_back(mk("c03.factauto-display-count", disp == 33, "33",
                     std::to_string(disp), "published"));
    int complete = state_count_complete(f);
    int trimmed = state_count_trimmed(f);
    out.push_back(mk("c03.factauto-complete-count", complete == 35, "35",
                     std::to_string(complete), "derived"));
    out.push_back(mk("c03.factauto-trimmed-count", trimmed == 35, "35",
                     std::to_string(trimmed), "derived"));
    if (o.deep) {
        PredicateRegistry reg = standard_registry();
        Dfa g = gaps_dfa(reg), sg = sgaps_dfa(reg);
        out.push_back(note("c03.gaps-state-count", "319",
                           std::to_string(state_count_trimmed(g)) +
                               " trimmed (" + std::to_string(g.states()) +
                               " complete)",
                           "published"));
        out.push_back(note("c03.sgaps-state-count", "203",
                           std::to_string(state_count_trimmed(sg)) +
                               " trimmed (" + std::to_string(sg.states()) +
                               " complete)",
                           "published"));
    }
}

void crit4(const VerifyOptions& o, Results& out) {
    PredicateRegistry reg = standard_registry();
    std::set<std::uint64_t> gs = gap_length_set(gaps_dfa(reg), 64);
    std::set<std::uint64_t> ss = gap_length_set(sgaps_dfa(reg), 64);
    out.push_back(mk("c04.sbar-gap-set-automaton", gs == sbar_gap_lengths(),
                     set_str(sbar_gap_lengths()), set_str(gs), "published"));
    out.push_back(mk("c04.s-gap-set-automaton", ss == s_gap_lengths(),
                     set_str(s_gap_lengths()), set_str(ss), "published"));
    GapScan sc = scan_gaps(o.scan_limit);
    if (o.scan_limit >= (std::uint64_t{1} << 20)) {
        out.push_back(mk("c04.sbar-gap-set-scan",
                         sc.lengths_sbar == sbar_gap_lengths(),
                         set_str(sbar_gap_lengths()), set_str(sc.lengths_sbar),
                         "derived"));
        out.push_back(mk("c04.s-gap-set-scan", sc.lengths_s == s_gap_lengths(),
                         set_str(s_gap_lengths()), set_str(sc.lengths_s),
                         "derived"));
        auto i42 = sc.first_occ_sbar.find(42);
        bool ok42 = i42 != sc.first_occ_sbar.end() && i42->second == 23268;
        out.push_back(mk("c04.first-occurrence-42", ok42, "23268",
                         i42 == sc.first_occ_sbar.end()
                             ? "absent"
                             : std::to_string(i42->second),
                         "published"));
        auto i33 = sc.first_occ_sbar.find(33);
        bool ok33 = i33 != sc.first_occ_sbar.end() && i33->second == 153828;
        out.push_back(mk("c04.first-occurrence-33", ok33, "153828",
                         i33 == sc.first_occ_sbar.end()
                             ? "absent"
                             : std::to_string(i33->second),
                         "published"));
    } else {
        bool sub1 = std::includes(sbar_gap_lengths().begin(),
                                  sbar_gap_lengths().end(),
                                  sc.lengths_sbar.begin(),
                                  sc.lengths_sbar.end());
        bool sub2 = std::includes(s_gap_lengths().begin(), s_gap_lengths().end(),
                                  sc.lengths_s.begin(), sc.lengths_s.end());
        out.push_back(mk("c04.gap-scan-subset", sub1 && sub2,
                         "no lengths outside the stated sets",
                         sub1 && sub2 ? "scan is consistent"
                                      : "unexpected gap length seen",
                         "derived"));
        out.push_back(note("c04.gap-scan-coverage",
                           "full witness coverage needs the full level",
                           "scanned to " + std::to_string(o.scan_limit),
                           "trivial"));
    }
}

void crit5(const VerifyOptions&, Results& out) {
    LinRep L = counting_linrep(count_relation());
    struct Case {
        unsigned k;
        const char* want;
        bool three;
    };
    static const Case cases[] = {
        {3, "0", false},  {27, "16773120", false},
        {51, "281474959933440", false},
        {3, "3", true},   {27, "50327553", true},
        {51, "844424913354753", true},
    };
    for (const Case& c : cases) {
        BigInt got = c.three ? value_3pow2(L, c.k) : value_pow2(L, c.k);
        std::string id = std::string("c05.value-") + (c.three ? "3x2^" : "2^") +
                         std::to_string(c.k);
        out.push_back(mk(id, str(got) == c.want, c.want, str(got), "published"));
    }
}

void crit6(const VerifyOptions& o, Results& out) {
    LinRep L = counting_linrep(count_relation());
    PropertyReport a = check_pow2_cases(L, o.case_k_max);
    out.push_back(
        mk("c06.pow2-case-table", a.ok(),
           "closed forms hold for 2 <= k <= " + std::to_string(o.case_k_max),
           a.ok() ? "all " + std::to_string(a.cases) + " cases match"
                  : a.violations.front(),
           "published"));
    PropertyReport b = check_3pow2_cases(L, o.case_k_max);
    out.push_back(
        mk("c06.3pow2-case-table", b.ok(),
           "closed forms hold for 5 <= k <= " + std::to_string(o.case_k_max),
           b.ok() ? "all " + std::to_string(b.cases) + " cases match"
                  : b.violations.front(),
           "published"));
    int cov[24] = {0};
    for (unsigned k = 5; k <= o.case_k_max; ++k) ++cov[k % 24];
    int cov_min = *std::min_element(cov, cov + 24);
    std::string obs = "minimum coverage " + std::to_string(cov_min) +
                      " per residue class mod 24";
    if (o.deep)
        out.push_back(mk("c06.residue-coverage", cov_min >= 4,
                         "every class covered at least 4 times", obs,
                         "trivial"));
    else
        out.push_back(note("c06.residue-coverage",
                           "every class covered at least 4 times (full level)",
                           obs, "trivial"));
}

void crit7(const VerifyOptions&, Results& out) {
    RatMatrix A = {
        {BigRat(8), BigRat(1), BigRat(1)},
        {BigRat(BigInt(1) << 27), BigRat(1), BigRat(BigInt(1) << 12)},
        {BigRat(BigInt(1) << 51), BigRat(1), BigRat(BigInt(1) << 24)},
    };
    auto tuple_str = [](const RatVector& x) {
        return "(" + str(x[0]) + ", " + str(x[1]) + ", " + str(x[2]) + ")";
    };
    RatVector b1 = {BigRat(0), BigRat(16773120), BigRat(281474959933440LL)};
    RatVector x1 = solve_exact(A, b1);
    RatVector want1 = {BigRat(1, 8), BigRat(0), BigRat(-1)};
    out.push_back(mk("c07.pow2-constants", x1 == want1, "(1/8, 0, -1)",
                     tuple_str(x1), "published"));
    RatVector b2 = {BigRat(3), BigRat(50327553), BigRat(844424913354753LL)};
    RatVector x2 = solve_exact(A, b2);
    RatVector want2 = {BigRat(3, 8), BigRat(0), BigRat(-1)};
    out.push_back(mk("c07.3pow2-constants", x2 == want2, "(3/8, 0, -1)",
                     tuple_str(x2), "published"));
}

void crit8(const VerifyOptions& o, Results& out) {
    IntPolynomial h = h_polynomial();
    unsigned kmax = o.recurrence_k_max;
    LinRep L = counting_linrep(count_relation());
    std::vector<BigInt> u = pow2_value_sequence(L, kmax);
    PropertyReport pr = recurrence_check(
        [&](unsigned k) { return u[k]; }, h, kmax);
    out.push_back(
        mk("c08.recurrence-sbar", pr.ok(),
           "h annihilates value(2^k) up to k=" + std::to_string(kmax),
           pr.ok() ? std::to_string(pr.cases) + " windows hold"
                   : pr.violations.front(),
           "published"));
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int z = 0; z < 2; ++z) {
                LinRep T = counting_linrep(count_relation(theta_dfa(x, y, z)));
                std::vector<BigInt> s = pow2_value_sequence(T, kmax);
                PropertyReport q = recurrence_check(
                    [&](unsigned k) { return s[k]; }, h, kmax);
                std::string id = "c08.recurrence-triple-" + std::to_string(x) +
                                 std::to_string(y) + std::to_string(z);
                out.push_back(mk(id, q.ok(),
                                 "same recurrence as the main sequence",
                                 q.ok() ? std::to_string(q.cases) +
                                              " windows hold"
                                        : q.violations.front(),
                                 "published"));
            }
        }
    }
}

void crit9(const VerifyOptions&, Results& out) {
    IntPolynomial h = h_polynomial();
    IntPolynomial base = spectral_base();
    bool hdiv = poly_divides(h, poly_mul(monomial(4), base));
    out.push_back(mk("c09.h-divides-certificate", hdiv,
                     "h divides x^4 (x-1)(x-2)(x^24-4096)",
                     hdiv ? "divides" : "does not divide", "published"));
    LinRep L = counting_linrep(count_relation());
    RationalRep R = reduce(L);
    IntPolynomial mp = minimal_polynomial(R.m0);
    int found = -1;
    for (int d = 0; d <= R.dim; ++d) {
        if (poly_divides(mp, poly_mul(monomial(d), base))) {
            found = d;
            break;
        }
    }
    out.push_back(mk("c09.minpoly-divides", found >= 0,
                     "minpoly divides x^d (x-1)(x-2)(x^24-4096) for some d <= " +
                         std::to_string(R.dim),
                     found >= 0 ? "divides with d=" + std::to_string(found)
                                : "no such d",
                     "derived"));
    out.push_back(note("c09.reduced-dimension", "",
                       "dim=" + std::to_string(R.dim) + ", minpoly degree " +
                           std::to_string(mp.degree()),
                       "derived"));
}

void crit10(const VerifyOptions&, Results& out) {
    LinRep L = counting_linrep(count_relation());
    PropertyReport p = scaling_identity_check(L, 6, 23);
    std::string obs =
        p.ok() ? "identity holds for " + std::to_string(p.cases) + " pairs"
               : std::to_string(p.violations.size()) +
                     " violations; first: " + p.violations.front();
    out.push_back(
        mk("c10.scaling-identity", p.ok(),
           "8*value(2^(24k+s)) - 2^(24k+s) = 2^(12k)*(8*value(2^s) - 2^s) "
           "for k <= 6, s < 24",
           obs, "published"));
}

void crit11(const VerifyOptions& o, Results& out) {
    DensityProfile p20 =
        density_profile(std::uint64_t{1} << 20, std::uint64_t{1} << 10);
    DensityProfile p15 =
        density_profile(std::uint64_t{1} << 15, std::uint64_t{1} << 10);
    out.push_back(mk("c11.sup-attained", p20.argmax != 0,
                     "sup of |value(n) - n/8| / sqrt(n) attained on "
                     "[2^10, 2^20]",
                     "n=" + std::to_string(p20.argmax) +
                         ", dev8=" + std::to_string(p20.dev8_at_argmax) +
                         ", value=" + dstr(p20.d_value),
                     "derived"));
    BigInt d20 = p20.dev8_at_argmax, d15 = p15.dev8_at_argmax;
    BigInt lhs = 4 * d20 * d20 * BigInt(p15.argmax);
    BigInt rhs = 9 * d15 * d15 * BigInt(p20.argmax);
    out.push_back(mk("c11.sup-growth-factor", lhs <= rhs,
                     "sup[2^10,2^20] / sup[2^10,2^15] at most 1.5",
                     "ratio=" + dstr(p20.d_value / p15.d_value), "derived"));
    std::map<std::string, std::string> gold;
    if (!load_golden(o, "density.tsv", gold)) {
        out.push_back(mk("c11.golden-density", false, "golden density record",
                         "density.tsv not found", "golden"));
        return;
    }
    std::map<std::string, std::string> now = {
        {"argmax_15", std::to_string(p15.argmax)},
        {"dev8_15", std::to_string(p15.dev8_at_argmax)},
        {"sbar_15", std::to_string(p15.sbar_at_argmax)},
        {"argmax_20", std::to_string(p20.argmax)},
        {"dev8_20", std::to_string(p20.dev8_at_argmax)},
        {"sbar_20", std::to_string(p20.sbar_at_argmax)},
        {"pos_20", std::to_string(p20.pos_count)},
        {"neg_20", std::to_string(p20.neg_count)},
    };
    std::string mismatch;
    for (const auto& [k, v] : now) {
        auto it = gold.find(k);
        if (it == gold.end() || it->second != v) {
            mismatch = k + ": golden " +
                       (it == gold.end() ? std::string("<missing>") : it->second) +
                       ", computed " + v;
            break;
        }
    }
    out.push_back(mk("c11.golden-density", mismatch.empty(),
                     "matches recorded density profile",
                     mismatch.empty() ? "all 8 recorded quantities match"
                                      : mismatch,
                     "golden"));
}

void crit12(const VerifyOptions&, Results& out) {
    PropertyReport a = check_gamma_additivity(10, 63);
    out.push_back(mk("c12.gamma-additivity-sweep", a.ok(),
                     "0 violations for k <= 10, t <= 63",
                     std::to_string(a.violations.size()) + " violations in " +
                         std::to_string(a.cases) + " cases",
                     "published"));
    std::uint64_t cases = 0;
    std::vector<std::string> viols;
    for (int s = 2; s <= 12; ++s) {
        PropertyReport q = check_quadrant_constants(s, 31);
        cases += q.cases;
        viols.insert(viols.end(), q.violations.begin(), q.violations.end());
    }
    out.push_back(mk("c12.quadrant-constant-sweep", viols.empty(),
                     "0 violations for s <= 12, odd t <= 31",
                     std::to_string(viols.size()) + " violations in " +
                         std::to_string(cases) + " cases",
                     "published"));
}

void crit13(const VerifyOptions&, Results& out) {
    Dfa add = make_add(0, 1, 2);
    Dfa proj = minimize(determinize(project(add, 1)));
    bool ok1 = is_language_equal(proj, make_less_equal(0, 2));
    out.push_back(mk("c13.projection-of-addition", ok1,
                     "projecting y from x+y=z gives x<=z",
                     ok1 ? "languages equal" : "languages differ", "trivial"));
    PredicateRegistry reg = standard_registry();
    Dfa f1 = compile_query("Aj (j < r-1) => ~$factauto(n+ j + 1)", reg);
    Dfa f2 = compile_query("~(Ej ~((j < r-1) => ~$factauto(n+ j + 1)))", reg);
    bool ok2 = is_language_equal(f1, f2);
    out.push_back(mk("c13.quantifier-duality", ok2,
                     "A-form and ~E~-form compile to the same language",
                     ok2 ? "languages equal" : "languages differ", "trivial"));
    Dfa g = gaps_dfa(reg);
    auto ast = parse(gaps_query_text());
    PredicateEval pe = [](const std::string& name,
                          const std::vector<std::uint64_t>& vals) {
        if (name == "factauto")
            return theta_direct(vals[0]) == ThetaTriple{0, 0, 1};
        throw QueryError("interpreter has no predicate '" + name + "'");
    };
    std::uint64_t mismatches = 0;
    std::string first;
    for (std::uint64_t n = 0; n < 1024; ++n) {
        for (std::uint64_t r = 0; r < 1024; ++r) {
            bool a = accepts(g, {n, r});
            bool b = eval_formula(*ast, pe, {{"n", n}, {"r", r}}, 1024);
            if (a != b && mismatches++ == 0)
                first = "(n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + ")";
        }
    }
    out.push_back(mk("c13.interpreter-agreement", mismatches == 0,
                     "agreement on all 2^20 assignments below 2^10",
                     mismatches == 0
                         ? "agreement on 1048576 assignments"
                         : std::to_string(mismatches) + " mismatches, first " +
                               first,
                     "derived"));
}

}  // namespace

std::vector<CheckResult> run_criterion(int criterion,
                                       const VerifyOptions& opt) {
    Results out;
    switch (criterion) {
        case 1: crit1(opt, out); break;
        case 2: crit2(opt, out); break;
        case 3: crit3(opt, out); break;
        case 4: crit4(opt, out); break;
        case 5: crit5(opt, out); break;
        case 6: crit6(opt, out); break;
        case 7: crit7(opt, out); break;
        case 8: crit8(opt, out); break;
        case 9: crit9(opt, out); break;
        case 10: crit10(opt, out); break;
        case 11: crit11(opt, out); break;
        case 12: crit12(opt, out); break;
        case 13: crit13(opt, out); break;
        default:
            throw std::invalid_argument("criterion must be 1..13");
    }
    return out;
}

std::vector<CheckResult> run_all(const VerifyOptions& opt) {
    Results all;
    for (int c = 1; c <= 13; ++c) {
        Results r = run_criterion(c, opt);
        all.insert(all.end(), std::make_move_iterator(r.begin()),
                   std::make_move_iterator(r.end()));
    }
    return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

std::string format_result(const CheckResult& r) {
    const char* st = r.status == CheckStatus::Pass
                         ? "PASS"
                         : r.status == CheckStatus::Fail ? "FAIL" : "INFO";
    std::string s = std::string("[") + st + "] " + r.id;
    if (!r.expected.empty()) s += "  expected: " + r.expected;
    if (!r.observed.empty()) s += "  observed: " + r.observed;
    s += "  [" + r.provenance + "]";
    return s;
}

}  // namespace factoromata

#include "factoromata/linrep.hpp"

#include <stdexcept>
#include <utility>

#include "factoromata/algebra.hpp"

namespace factoromata {

namespace {

using Mat = std::vector<std::vector<BigInt>>;

std::vector<BigInt> row_times(const std::vector<BigInt>& x, const Mat& m) {
    std::vector<BigInt> out(m[0].size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * m[i][j];
    }
    return out;
}

std::vector<BigInt> times_col(const Mat& m, const std::vector<BigInt>& y) {
    std::vector<BigInt> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (m[i][j] == 0 || y[j] == 0) continue;
            out[i] += m[i][j] * y[j];
        }
    return out;
}

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), p = b[0].size(), mid = b.size();
    Mat c(n, std::vector<BigInt>(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Mat mat_identity(std::size_t n) {
    Mat m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_pow(Mat base, unsigned k) {
    Mat result = mat_identity(base.size());
    while (k) {
        if (k & 1) result = mat_mul(result, base);
        k >>= 1;
        if (k) base = mat_mul(base, base);
    }
    return result;
}

// 2^e for possibly negative e.
BigRat rat_pow2(int e) {
    if (e >= 0) return BigRat(BigInt(1) << e);
    return BigRat(1, BigInt(1) << (-e));
}

}  // namespace

LinRep counting_linrep(const Dfa& relation, int witness_var) {
    if (relation.width() != 2)
        throw AutomatonError("counting_linrep: relation must have two tracks");
    if (!is_padding_invariant(relation))
        throw AutomatonError("counting_linrep: relation not padding-invariant");
    Dfa m = minimize(relation);
    int wv = witness_var < 0 ? m.vars[1] : witness_var;
    int pw;
    if (m.vars[0] == wv)
        pw = 0;
    else if (m.vars[1] == wv)
        pw = 1;
    else
        throw AutomatonError("counting_linrep: unknown witness track");
    int pn = 1 - pw;

    LinRep L;
    L.dim = m.states();
    L.v.assign(L.dim, 0);
    L.v[m.initial] = 1;
    L.w.assign(L.dim, 0);
    for (int q = 0; q < L.dim; ++q) L.w[q] = m.accept[q] ? 1 : 0;
    L.m0.assign(L.dim, std::vector<BigInt>(L.dim, 0));
    L.m1.assign(L.dim, std::vector<BigInt>(L.dim, 0));
    for (int q = 0; q < L.dim; ++q)
        for (int b = 0; b <= 1; ++b)
            for (int d = 0; d <= 1; ++d) {
                Symbol s = (static_cast<Symbol>(b) << pn) |
                           (static_cast<Symbol>(d) << pw);
                auto& mat = b ? L.m1 : L.m0;
                mat[q][m.delta[q][s]] += 1;
            }
    return L;
}

BigInt eval_linrep(const LinRep& L, std::uint64_t n) {
    std::vector<BigInt> x = L.v;
    for (std::uint64_t rest = n; rest != 0; rest >>= 1)
        x = row_times(x, (rest & 1) ? L.m1 : L.m0);
    return dot(x, L.w);
}

BigRat eval_linrep(const RationalRep& L, std::uint64_t n) {
    if (L.dim == 0) return 0;
    RatVector x = L.v;
    for (std::uint64_t rest = n; rest != 0; rest >>= 1) {
        const auto& m = (rest & 1) ? L.m1 : L.m0;
        RatVector next(L.dim, 0);
        for (int i = 0; i < L.dim; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < L.dim; ++j) next[j] += x[i] * m[i][j];
        }
        x = std::move(next);
    }
    BigRat s = 0;
    for (int i = 0; i < L.dim; ++i) s += x[i] * L.w[i];
    return s;
}

BigInt value_pow2(const LinRep& L, unsigned k) {
    Mat p = mat_pow(L.m0, k);
    return dot(row_times(L.v, p), times_col(L.m1, L.w));
}

BigInt value_3pow2(const LinRep& L, unsigned k) {
    Mat p = mat_pow(L.m0, k);
    return dot(row_times(L.v, p), times_col(L.m1, times_col(L.m1, L.w)));
}

std::vector<BigInt> pow2_value_sequence(const LinRep& L, unsigned k_max) {
    std::vector<BigInt> tail = times_col(L.m1, L.w);
    std::vector<BigInt> out;
    out.reserve(k_max + 1);
    std::vector<BigInt> x = L.v;
    for (unsigned k = 0; k <= k_max; ++k) {
        out.push_back(dot(x, tail));
        if (k < k_max) x = row_times(x, L.m0);
    }
    return out;
}

RationalRep to_rational(const LinRep& L) {
    RationalRep R;
    R.dim = L.dim;
    R.v.assign(L.v.begin(), L.v.end());
    R.w.assign(L.w.begin(), L.w.end());
    R.m0.resize(L.dim);
    R.m1.resize(L.dim);
    for (int i = 0; i < L.dim; ++i) {
        R.m0[i].assign(L.m0[i].begin(), L.m0[i].end());
        R.m1[i].assign(L.m1[i].begin(), L.m1[i].end());
    }
    return R;
}

namespace {

RationalRep transpose_rep(const RationalRep& L) {
    RationalRep R;
    R.dim = L.dim;
    R.v = L.w;
    R.w = L.v;
    R.m0.assign(L.dim, RatVector(L.dim, 0));
    R.m1.assign(L.dim, RatVector(L.dim, 0));
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j) {
            R.m0[j][i] = L.m0[i][j];
            R.m1[j][i] = L.m1[i][j];
        }
    return R;
}

RatVector row_times_rat(const RatVector& x, const RatMatrix& m) {
    RatVector out(m.empty() ? 0 : m[0].size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * m[i][j];
    }
    return out;
}

// Restricts the representation to the span of {v * M_w}: the reachability
// half of the reduction. Applying it to the transpose gives observability.
RationalRep forward_reduce(const RationalRep& L) {
    RationalRep R;
    if (L.dim == 0) return R;
    RationalSpan span;
    if (!span.insert(L.v)) return R;  // v = 0: the zero series
    for (int i = 0; i < span.size(); ++i)
        for (const auto* m : {&L.m0, &L.m1})
            span.insert(row_times_rat(span.generator(i), *m));
    int r = span.size();
    R.dim = r;
    R.v.assign(r, 0);
    R.v[0] = 1;
    R.m0.resize(r);
    R.m1.resize(r);
    R.w.resize(r);
    for (int i = 0; i < r; ++i) {
        R.m0[i] = span.express(row_times_rat(span.generator(i), L.m0));
        R.m1[i] = span.express(row_times_rat(span.generator(i), L.m1));
        R.m0[i].resize(r, BigRat(0));
        R.m1[i].resize(r, BigRat(0));
        BigRat acc = 0;
        for (int j = 0; j < L.dim; ++j) acc += span.generator(i)[j] * L.w[j];
        R.w[i] = acc;
    }
    return R;
}

}  // namespace

RationalRep reduce(const RationalRep& L) {
    return transpose_rep(forward_reduce(transpose_rep(forward_reduce(L))));
}

RationalRep reduce(const LinRep& L) { return reduce(to_rational(L)); }

BigRat pow2_case_formula(unsigned k) {
    if (k < 2) throw std::invalid_argument("pow2_case_formula: k >= 2");
    int ik = static_cast<int>(k);
    unsigned r = k % 24;
    BigRat val = rat_pow2(ik - 3);
    auto in = [r](std::initializer_list<unsigned> set) {
        for (unsigned s : set)
            if (r == s) return true;
        return false;
    };
    if (in({0, 2, 22}))
        val -= rat_pow2((ik - 4) / 2);
    else if (in({1, 3}))
        val -= rat_pow2((ik - 3) / 2);
    else if (r == 11)
        val -= rat_pow2((ik - 5) / 2);
    else if (in({14, 16, 18}))
        val += rat_pow2((ik - 4) / 2);
    else if (r == 17)
        val += rat_pow2((ik - 3) / 2);
    else if (r == 23)
        val -= 3 * rat_pow2((ik - 5) / 2);
    return val;
}

BigRat pow2_3case_formula(unsigned k) {
    if (k < 5) throw std::invalid_argument("pow2_3case_formula: k >= 5");
    int ik = static_cast<int>(k);
    unsigned r = k % 24;
    BigRat val = 3 * rat_pow2(ik - 3) + 1;
    auto in = [r](std::initializer_list<unsigned> set) {
        for (unsigned s : set)
            if (r == s) return true;
        return false;
    };
    if (in({7, 9, 13, 18, 19}))
        ;  // no correction
    else if (in({1, 3, 5}))
        val -= rat_pow2((ik - 3) / 2);
    else if (in({0, 4, 10}))
        val -= rat_pow2((ik - 2) / 2);
    else if (in({2, 6, 8, 12}))
        val -= rat_pow2((ik - 4) / 2);
    else if (in({11, 23}))
        val -= rat_pow2((ik - 5) / 2);
    else if (r == 14)
        val += rat_pow2((ik - 4) / 2);
    else if (r == 15)
        val += rat_pow2((ik - 1) / 2);
    else if (r == 16)
        val += 3 * rat_pow2((ik - 4) / 2);
    else if (r == 17)
        val += rat_pow2((ik - 3) / 2);
    else if (in({20, 22}))
        val -= 3 * rat_pow2((ik - 4) / 2);
    else if (r == 21)
        val -= rat_pow2((ik - 1) / 2);
    return val;
}

namespace {

PropertyReport case_sweep(const LinRep& L, unsigned k_max, unsigned k_min,
                          const std::vector<BigInt>& tail,
                          BigRat (*formula)(unsigned), const char* label) {
    PropertyReport rep;
    std::vector<BigInt> x = L.v;
    for (unsigned k = 0; k <= k_max; ++k) {
        if (k >= k_min) {
            ++rep.cases;
            BigInt got = dot(x, tail);
            BigRat want = formula(k);
            if (BigRat(got) != want)
                rep.violations.push_back(
                    std::string(label) + " mismatch at k=" + std::to_string(k) +
                    " (residue " + std::to_string(k % 24) + "): expected " +
                    want.str() + ", got " + got.str());
        }
        x = row_times(x, L.m0);
    }
    return rep;
}

}  // namespace

PropertyReport check_pow2_cases(const LinRep& L, unsigned k_max) {
    return case_sweep(L, k_max, 2, times_col(L.m1, L.w), pow2_case_formula,
                      "value(2^k)");
}

PropertyReport check_3pow2_cases(const LinRep& L, unsigned k_max) {
    return case_sweep(L, k_max, 5, times_col(L.m1, times_col(L.m1, L.w)),
                      pow2_3case_formula, "value(3*2^k)");
}

PropertyReport scaling_identity_check(const LinRep& L, unsigned k_max,
                                      unsigned s_max) {
    PropertyReport rep;
    unsigned top = 24 * k_max + s_max;
    // dev[e] = 8*value(2^e) - 2^e, computed by one incremental sweep.
    std::vector<BigInt> dev(top + 1);
    std::vector<BigInt> x = L.v;
    std::vector<BigInt> tail = times_col(L.m1, L.w);
    for (unsigned e = 0; e <= top; ++e) {
        dev[e] = 8 * dot(x, tail) - (BigInt(1) << e);
        x = row_times(x, L.m0);
    }
    for (unsigned k = 0; k <= k_max; ++k)
        for (unsigned s = 0; s <= s_max; ++s) {
            if (24 * k + s < 2) continue;
            ++rep.cases;
            BigInt lhs = dev[24 * k + s];
            BigInt rhs = (BigInt(1) << (12 * k)) * dev[s];
            if (lhs != rhs)
                rep.violations.push_back(
                    "scaling identity fails at k=" + std::to_string(k) +
                    " s=" + std::to_string(s) + ": lhs " + lhs.str() +
                    ", rhs " + rhs.str());
        }
    return rep;
}

}  // namespace factoromata

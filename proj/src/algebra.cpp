#include "factoromata/algebra.hpp"

#include <utility>

namespace factoromata {

IntPolynomial make_poly(std::vector<BigInt> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return {std::move(coeffs)};
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> out(p.c.size() + q.c.size() - 1, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (std::size_t j = 0; j < q.c.size(); ++j)
            out[i + j] += p.c[i] * q.c[j];
    return make_poly(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<BigInt> out(std::max(p.c.size(), q.c.size()), 0);
    for (std::size_t i = 0; i < p.c.size(); ++i) out[i] += p.c[i];
    for (std::size_t i = 0; i < q.c.size(); ++i) out[i] -= q.c[i];
    return make_poly(std::move(out));
}

bool poly_divides(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero()) throw AlgebraError("poly_divides: zero divisor");
    if (q.is_zero()) return true;
    if (q.degree() < p.degree()) return false;
    std::vector<BigRat> rem(q.c.begin(), q.c.end());
    BigRat lead = BigRat(p.c.back());
    for (int k = static_cast<int>(rem.size()) - 1; k >= p.degree(); --k) {
        if (rem[k] == 0) continue;
        BigRat f = rem[k] / lead;
        int shift = k - p.degree();
        for (std::size_t i = 0; i < p.c.size(); ++i)
            rem[shift + i] -= f * BigRat(p.c[i]);
    }
    for (const BigRat& r : rem)
        if (r != 0) return false;
    return true;
}

IntMatrix bareiss_eliminate(IntMatrix m) {
    std::size_t rows = m.size();
    if (rows == 0) return m;
    std::size_t cols = m[0].size();
    BigInt prev = 1;
    std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k + 1 < rows && k < steps; ++k) {
        if (m[k][k] == 0) {
            std::size_t pick = k;
            while (pick < rows && m[pick][k] == 0) ++pick;
            if (pick == rows) return m;  // singular; diagonal stays zero
            std::swap(m[k], m[pick]);
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                BigInt quo = num / prev;
                if (quo * prev != num)
                    throw AlgebraError("bareiss: inexact division");
                m[i][j] = quo;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return m;
}

RatVector solve_exact(const RatMatrix& a, const RatVector& b) {
    std::size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw AlgebraError("solve_exact: shape mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw AlgebraError("solve_exact: not square");

    // Scale each augmented row to integers; solutions are unchanged.
    IntMatrix aug(n, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt scale = 1;
        for (std::size_t j = 0; j < n; ++j)
            scale = lcm(scale, denominator(a[i][j]));
        scale = lcm(scale, denominator(b[i]));
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = numerator(a[i][j]) * (scale / denominator(a[i][j]));
        aug[i][n] = numerator(b[i]) * (scale / denominator(b[i]));
    }
    IntMatrix tri = bareiss_eliminate(std::move(aug));
    for (std::size_t i = 0; i < n; ++i)
        if (tri[i][i] == 0) throw AlgebraError("solve_exact: singular matrix");

    RatVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        BigRat acc = BigRat(tri[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= BigRat(tri[i][j]) * x[j];
        x[i] = acc / BigRat(tri[i][i]);
    }
    return x;
}

bool RationalSpan::insert(const RatVector& x) {
    RatVector r = x;
    RatVector c(origs_.size(), 0);
    for (std::size_t i = 0; i < red_.size(); ++i) {
        const BigRat& entry = r[pivots_[i]];
        if (entry == 0) continue;
        BigRat mu = entry / red_[i][pivots_[i]];
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] -= mu * red_[i][j];
        for (std::size_t j = 0; j < coords_[i].size(); ++j)
            c[j] += mu * coords_[i][j];
    }
    int pivot = -1;
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) {
            pivot = static_cast<int>(j);
            break;
        }
    if (pivot < 0) return false;
    // r = x - sum c_j f_j, so record those coordinates negated plus x itself.
    RatVector t(origs_.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) t[j] = -c[j];
    t.back() = 1;
    origs_.push_back(x);
    red_.push_back(std::move(r));
    coords_.push_back(std::move(t));
    pivots_.push_back(pivot);
    // Earlier coordinate rows stay valid: pad them lazily in express().
    return true;
}

RatVector RationalSpan::express(const RatVector& x) const {
    RatVector r = x;
    RatVector c(origs_.size(), 0);
    for (std::size_t i = 0; i < red_.size(); ++i) {
        const BigRat& entry = r[pivots_[i]];
        if (entry == 0) continue;
        BigRat mu = entry / red_[i][pivots_[i]];
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] -= mu * red_[i][j];
        for (std::size_t j = 0; j < coords_[i].size(); ++j)
            c[j] += mu * coords_[i][j];
    }
    for (const BigRat& v : r)
        if (v != 0) throw AlgebraError("express: vector outside span");
    return c;
}

namespace {

RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, RatVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size(), p = b[0].size(), mid = b.size();
    RatMatrix c(n, RatVector(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RatVector vectorize(const RatMatrix& m) {
    RatVector out;
    out.reserve(m.size() * m.size());
    for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

IntPolynomial minimal_polynomial(const RatMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw AlgebraError("minimal_polynomial: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw AlgebraError("minimal_polynomial: not square");
    RationalSpan span;
    RatMatrix power = rat_identity(n);
    for (;;) {
        RatVector flat = vectorize(power);
        if (!span.insert(flat)) {
            RatVector coef = span.express(flat);
            // Monic: x^d - sum coef_i x^i, cleared to integers.
            BigInt den = 1;
            for (const BigRat& q : coef) den = lcm(den, denominator(q));
            std::vector<BigInt> out(coef.size() + 1);
            for (std::size_t i = 0; i < coef.size(); ++i)
                out[i] = -numerator(coef[i]) * (den / denominator(coef[i]));
            out.back() = den;
            return make_poly(std::move(out));
        }
        power = rat_mul(power, m);
    }
}

PropertyReport recurrence_check(const std::function<BigInt(unsigned)>& u,
                                const IntPolynomial& p, unsigned k_max) {
    if (p.is_zero()) throw AlgebraError("recurrence_check: zero polynomial");
    PropertyReport rep;
    unsigned deg = static_cast<unsigned>(p.degree());
    if (deg > k_max) return rep;
    std::vector<BigInt> vals(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) vals[k] = u(k);
    for (unsigned k = 0; k + deg <= k_max; ++k) {
        ++rep.cases;
        BigInt acc = 0;
        for (unsigned i = 0; i <= deg; ++i) acc += p.c[i] * vals[k + i];
        if (acc != 0)
            rep.violations.push_back("recurrence fails at offset k=" +
                                     std::to_string(k));
    }
    return rep;
}

}  // namespace factoromata

#pragma once
#include <functional>
#include <stdexcept>
#include <vector>

#include "factoromata/bignum.hpp"
#include "factoromata/report.hpp"

// Exact rational linear algebra: Bareiss solving, Krylov minimal
// polynomials, polynomial arithmetic, linear-recurrence verification.
// No floating point anywhere.
namespace factoromata {

using RatVector = std::vector<BigRat>;
using RatMatrix = std::vector<std::vector<BigRat>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficients constant term first; trailing (leading-coefficient) zeros
// stripped, so the zero polynomial is the empty list.
struct IntPolynomial {
    std::vector<BigInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

IntPolynomial make_poly(std::vector<BigInt> coeffs);  // normalizes
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q);
// True iff p divides q exactly over the rationals; p must be nonzero.
bool poly_divides(const IntPolynomial& p, const IntPolynomial& q);

// Fraction-free (Bareiss) elimination to upper-triangular form, row swaps
// allowed. Every internal division is exact; a failed exactness check
// throws AlgebraError. A zero diagonal in the result signals singularity.
IntMatrix bareiss_eliminate(IntMatrix m);

// Exact solution of A x = b via Bareiss on the scaled integer system.
// Throws AlgebraError when A is not square or is singular.
RatVector solve_exact(const RatMatrix& a, const RatVector& b);

// Least-degree monic annihilator of M, by Krylov search for the first
// linear dependency among vec(I), vec(M), vec(M^2), ... If the monic
// rational coefficients are not integral they are scaled by the common
// denominator (never the case for the matrices this project builds).
IntPolynomial minimal_polynomial(const RatMatrix& m);

// Verifies sum_i p_i * u(k+i) = 0 for 0 <= k <= k_max - deg(p).
PropertyReport recurrence_check(const std::function<BigInt(unsigned)>& u,
                                const IntPolynomial& p, unsigned k_max);

// Incrementally built basis of a rational vector space, with exact
// coordinates of any member over the accepted generators.
class RationalSpan {
  public:
    // Adds x as a generator when independent of the span; returns whether
    // it was added.
    bool insert(const RatVector& x);
    // Coordinates of x over the generators, in insertion order. Throws
    // AlgebraError when x lies outside the span.
    RatVector express(const RatVector& x) const;
    int size() const { return static_cast<int>(origs_.size()); }
    const RatVector& generator(int i) const { return origs_[i]; }

  private:
    std::vector<RatVector> origs_;  // accepted generators f_i
    std::vector<RatVector> red_;    // echelon forms, red_[i] pivot-free
                                    // at all earlier pivots
    std::vector<RatVector> coords_; // red_[i] = sum coords_[i][j] * f_j
    std::vector<int> pivots_;
};

}  // namespace factoromata

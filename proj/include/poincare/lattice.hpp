#ifndef POINCARE_LATTICE_HPP
#define POINCARE_LATTICE_HPP

// Per-term machinery of the lattice sum: enumeration of the coprime index
// set {(c,d)}, canonical unimodular completion, term values sigma_{c,d}(z)
// and their derivatives in log-polar form, per-term dominance geometry
// (w, I(w), log r, phase-per-weight), and a certified truncation tail bound.

#include "poincare/logcx.hpp"
#include "poincare/real.hpp"

#include <cstdint>
#include <vector>

namespace poincare {

// A point x + iy in the upper half-plane, held at working precision.
struct ZPoint {
    Real x;
    Real y;

    ZPoint() : x(0), y(1) {}
    ZPoint(Real xx, Real yy) : x(std::move(xx)), y(std::move(yy)) {}
};

// One coprime pair (c,d) completed to a unimodular matrix [[a,b],[c,d]],
// ad - bc = 1.  Either c > 0 or (c,d) = (0,1).  The completion is canonical:
// a is the representative of d^{-1} mod c in [0, c), b = (a d - 1)/c.
struct TermIndex {
    std::int64_t c = 0;
    std::int64_t d = 1;
    std::int64_t a = 1;
    std::int64_t b = 0;

    bool operator==(const TermIndex&) const = default;
};

// Canonical Bezout completion.  Throws std::invalid_argument unless
// gcd(c,d) = 1 and (c > 0 or (c,d) = (0,1)).
std::pair<std::int64_t, std::int64_t> bezout_complete(std::int64_t c, std::int64_t d);

TermIndex make_term_index(std::int64_t c, std::int64_t d);

// All valid TermIndex with |cz + d| <= radius, sorted by (|cz+d| ascending,
// then c, then d).  This order is the mandated summation order.
std::vector<TermIndex> enumerate_pairs(const ZPoint& z, const Real& radius);

// sigma_{c,d}(z) = exp(2 pi i m gamma z) / (cz + d)^k in log-polar form:
//   logmag = -2 pi m y/|cz+d|^2 - k log|cz+d|
//   phase  = 2 pi m Re(gamma z) - k arg(cz+d)   (mod 2 pi)
LogComplex term_sigma(const ZPoint& z, int k, int m, const TermIndex& idx);

// d/dz sigma_{c,d}(z), via the exact logarithmic derivative
// sigma'/sigma = 2 pi i m/(cz+d)^2 - k c/(cz+d).
LogComplex term_sigma_deriv(const ZPoint& z, int k, int m, const TermIndex& idx);

// Dominance geometry of one term at z for the weight ratio alpha:
//   w       = y / |cz+d|^2
//   I       = -2 pi alpha w + (1/2) log w
//   log_r   = I - (1/2) log y            (log of the dominance radius)
//   theta   = 2 pi alpha Re(gamma z) - arg(cz+d)  (phase per unit weight)
//   theta_tilde = same with alpha replaced by m/k
struct TermGeometry {
    Real w;
    Real I;
    Real log_r;
    Real theta;
    Real theta_tilde;
};

TermGeometry term_geometry(const ZPoint& z, const Real& alpha, const TermIndex& idx,
                           int k = 0, int m = 0);

// log of a certified upper bound on sum_{|cz+d| > radius} |sigma_{c,d}(z)|.
// Uses |sigma_{c,d}| <= |cz+d|^{-k} together with the annulus count
// #{(c,d): R <= |cz+d| < R+1} <= C(z) (R+1), C(z) = 8 (1+1/y)(1+|z|)/y,
// summed in closed form.  Requires radius >= 2, k >= 6.
Real tail_bound(const ZPoint& z, int k, const Real& radius);

// Same bound for the derivative series: |sigma'| <= (2 pi m + k/y) |cz+d|^{-k}.
Real tail_bound_deriv(const ZPoint& z, int k, int m, const Real& radius);

// |cz+d|^2 at working precision.
Real pair_norm_sq(const ZPoint& z, std::int64_t c, std::int64_t d);

}  // namespace poincare

#endif

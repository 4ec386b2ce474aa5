#ifndef POINCARE_PREDICT_HPP
#define POINCARE_PREDICT_HPP

// Closed-form predictions: the dominance threshold F and its inverse, the
// proportion of zeros on the segment Re z = 1/2, the competitor threshold T,
// the oscillation phase and its total variation, the tie curve Gamma_alpha,
// the dominance window on the imaginary axis, pointwise dominance maps, and
// the assembled expected-count report with its closure identity.

#include "poincare/lattice.hpp"
#include "poincare/real.hpp"
#include "poincare/series.hpp"

#include <optional>
#include <vector>

namespace poincare {

// Domain thresholds for alpha = m/k (all at working precision).
Real alpha_lrho_branch();  // 1/(2 pi sqrt 3): branch point of the proportion formula
Real alpha_lrho_max();     // sqrt(3) log(3)/(4 pi): end of the explicit formula
Real alpha_li_min();       // log(2)/(2 pi): least alpha with an axis window
Real alpha_li_t0_min();    // 1/(2 pi): least alpha with an interior peak t0
Real alpha_gamma_max();    // 1/(4 pi): largest alpha with a connected tie curve

// F(t) = (1/4pi) (1/4+t^2) log(1/4+t^2) / (t (t^2-3/4)) for t >= sqrt(3)/2.
// Decreasing; the removable 0/0 at sqrt(3)/2 evaluates to 1/(2 pi sqrt 3).
Real dominance_F(const Real& t);

// The unique t >= sqrt(3)/2 with F(t) = alpha, bisected to 1e-14 relative.
// Domain: 0 < alpha <= 1/(2 pi sqrt 3).
Real dominance_F_inv(const Real& alpha);

// Proportion of the k/12 zeros lying on Re z = 1/2 (explicit two-branch
// formula; domain 0 < alpha <= sqrt(3) log(3)/(4 pi)).
Real line_rho_proportion(const Real& alpha);

// t_min = 2 pi alpha + sqrt(4 pi^2 alpha^2 - 1/4): the phase minimum on
// Re z = 1/2 (real for alpha >= 1/(4 pi)).
Real lrho_phase_minimum(const Real& alpha);

// The largest t at which a competitor pair can still match the dominant pair
// on Re z = 1/2 (domain alpha > sqrt(3) log(3)/(4 pi)).
Real competitor_threshold(const Real& alpha);

// Oscillation phase per unit weight and its total variation.
//   lrho: pi alpha/(1/4+t^2) + arctan(2t)
//   li:   2 pi alpha t^2/(t^2+1) - arctan(t)
Real vartheta(const Real& t, const Real& alpha, Segment segment);
Real total_variation(const Real& a, const Real& b, const Real& alpha, Segment segment);

// The y > 1 on the tie curve 2 pi alpha y = log|z| / (1 - |z|^-2) above x.
// Domain: |x| <= 1/2, 0 < alpha < 1/(4 pi).
Real gamma_curve_y(const Real& x, const Real& alpha);

// Certified dominance window on the imaginary axis: the widest [A, B] with
// 1 < A on which log r_{1,+-1}(it) exceeds every competitor with
// |c(it)+d| <= 6 by `margin` on a fine grid.  t0 present for alpha > 1/(2 pi).
struct LiWindow {
    Real a;
    Real b;
    std::optional<Real> t0;
};

LiWindow li_window(const Real& alpha, double margin = 1e-3);

// Axis-aligned rectangle in the upper half-plane with a contour-sampling
// step for the winding machinery.
struct RectSpec {
    Real x_lo, x_hi, y_lo, y_hi;
    Real max_step;
};

struct DominanceCell {
    ZPoint center;
    TermIndex best;
    Real margin;  // log_r gap to the runner-up, >= 0
    bool tie;     // margin below tie_tol
};

std::vector<DominanceCell> dominance_map(const RectSpec& grid, int nx, int ny,
                                         const Real& alpha, double tie_tol = 1e-9);

struct PredictionReport {
    Real alpha;
    Real arc_lower;                      // max(0, 1/12 - alpha), multiplies k
    std::optional<Real> f_inv_alpha;     // alpha <= 1/(2 pi sqrt 3)
    std::optional<Real> p_rho;           // alpha <= sqrt(3) log(3)/(4 pi)
    std::optional<Real> gamma_count;     // alpha < 1/(4 pi), multiplies k
    std::optional<Real> closure_defect;  // p_rho/12 + arc_lower + gamma_count - 1/12
    std::optional<LiWindow> li;          // alpha > log(2)/(2 pi), when certified
};

PredictionReport expected_counts(int k, int m);
PredictionReport expected_counts_alpha(const Real& alpha);

}  // namespace poincare

#endif

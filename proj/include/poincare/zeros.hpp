#ifndef POINCARE_ZEROS_HPP
#define POINCARE_ZEROS_HPP

// Zero location and counting: sign-change scanning with bisection on the
// three real segments, argument-principle winding counts on rectangles with
// adaptive phase tracking, recursive localization of the non-real zeros,
// the tie-curve deviation metric, and catalog assembly with valence
// accounting.

#include "poincare/predict.hpp"
#include "poincare/real.hpp"
#include "poincare/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace poincare {

enum class ZoneTag { lrho, li, arc, gamma, interior };
enum class Method { bisection, winding };

std::string zone_tag_name(ZoneTag tag);
std::string method_name(Method method);

struct ZeroRecord {
    Real re, im;
    ZoneTag segment = ZoneTag::interior;
    Method method = Method::bisection;
    Real residual_log;             // log |P| at the reported point, relative to
                                   // the local dominant term magnitude
    std::optional<Real> deviation; // tie-curve metric, gamma records only
    Real half_width;               // position uncertainty per coordinate
    Real weight = Real(1);         // 1/2 at i, 1/3 at rho (valence weights)
};

struct Bracket {
    Real lo, hi;
    int sign_lo = 0, sign_hi = 0;
};

struct ScanOptions {
    EvalOptions eval;
    int max_refine_depth = 28;
};

// Adaptive sign-change scan of a real segment restriction.  Starts from
// n_init uniform samples and splits every interval across which the
// predicted phase k*vartheta advances by more than pi/4.
std::vector<Bracket> scan_segment(Segment segment, const Real& a, const Real& b, int k, int m,
                                  int n_init, const ScanOptions& opts = {});

// Bisect a certified sign change down to half-width <= tol.
ZeroRecord refine_bisect(const Bracket& bracket, Segment segment, int k, int m, const Real& tol,
                         const ScanOptions& opts = {});

struct WindOptions {
    EvalOptions eval;
    double min_step_frac = 1e-9;  // of the edge length; below it -> boundary zero
};

// Winding number of P around the rectangle boundary: adaptive phase tracking
// keeps consecutive increments below pi/2, unwraps, divides by 2 pi.
// Throws boundary_zero_error when refinement stalls against the contour.
int wind_count(const RectSpec& rect, int k, int m, const WindOptions& opts = {});

// Cross-check: numerically integrate P'/P along the boundary (same adaptive
// sample set, trapezoid rule) and return the resulting winding estimate.
Real wind_count_quadrature(const RectSpec& rect, int k, int m, const WindOptions& opts = {});

struct LocalizeOptions {
    WindOptions wind;
    ZoneTag tag = ZoneTag::interior;
    std::optional<Real> alpha_for_deviation;  // fill `deviation` when set and |z| > 1
    int max_jitters = 5;
};

// Recursive quadrisection of a rectangle with positive winding count down to
// cells of the target half-width; one record per unit of winding.  Splits
// landing on a zero are re-jittered; a zero on the outer boundary nudges
// that edge inward slightly.
std::vector<ZeroRecord> localize_in_rect(const RectSpec& rect, int k, int m,
                                         const Real& target_half_width,
                                         const LocalizeOptions& opts = {});

// 2 pi alpha y - log|z| (1 - |z|^-2)^{-1}; signed distance from the tie curve
// in the defining equation's units.  Domain |z| > 1.
Real deviation_metric(const ZPoint& z, const Real& alpha);

struct CatalogOptions {
    EvalOptions eval;
    double bisect_tol = 1e-12;
    double gamma_target_half_width = 1e-4;
    double lrho_start_offset = 0.01;   // above F^{-1}(alpha) (or the branch start)
    // Scan ceiling on Re z = 1/2.  Far up the line the lattice terms cancel
    // down to the Fourier-expansion scale, which sinks below the 106-bit
    // noise floor near t ~ 120 at k ~ 1200; deeper ceilings need more bits.
    double lrho_t_max = 100;
    double tube_half_width = 0.05;     // vertical tube radius around the tie curve
    int tube_strips = 37;
    int n_init = 32;
};

struct CatalogAccounting {
    int arc_count = 0;
    int lrho_count = 0;
    int li_count = 0;
    int gamma_count = 0;
    int interior_count = 0;
    Real weighted_total;   // corner records weighted 1/2, 1/3
    Real k_over_12;
    Real residue;          // k/12 - weighted_total (unscanned regions + cusp order)
};

struct Catalog {
    std::vector<ZeroRecord> records;
    CatalogAccounting accounting;
};

// Scans the arc, the line Re z = 1/2, the axis window (when it exists), and
// a tube around the tie curve (when it exists); deduplicates and reports the
// valence accounting.
Catalog assemble_catalog(int k, int m, const CatalogOptions& opts = {});

}  // namespace poincare

#endif

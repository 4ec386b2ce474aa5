#include "poincare/predict.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace poincare {

namespace {

constexpr double kDomainTol = 1e-12;

// Bracketed bisection on a sign change: f(lo) and f(hi) must differ in sign.
// Robustness over speed; every function handled here is monotone on its
// bracket.
Real bisect(const std::function<Real(const Real&)>& f, Real lo, Real hi, double rel_tol) {
    Real flo = f(lo);
    Real fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw std::logic_error("bisect: endpoints do not bracket");
    for (int i = 0; i < 4000; ++i) {
        Real mid = (lo + hi) / 2;
        if (hi - lo <= abs(mid) * Real(rel_tol)) return mid;
        Real fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

Real sqrt3_over_2() { return sqrt(Real(3)) / 2; }

// log1p(q)/q, stable through q = 0.
Real log1p_over_q(const Real& q) {
    if (abs(q) > Real("1e-6")) return log1p(q) / q;
    Real sum(0), power(1);
    const Real cutoff = exp(-Real(precision_bits() + 8) * log(Real(2)));
    for (int j = 0; j < 256; ++j) {
        Real term = power / (j + 1);
        sum += (j % 2 == 0) ? term : -term;
        power *= q;
        if (power < cutoff && -power < cutoff) break;
    }
    return sum;
}

Real dominance_gap_on_axis(double t, double alpha) {
    // log r_{1,1}(it) minus the best competitor with |c(it)+d| <= 6, in
    // double precision: the certified margins are ~1e-3, far above double
    // rounding.
    auto log_r = [&](int c, int d) {
        double n2 = double(c) * c * t * t + double(d) * d;
        double w = t / n2;
        return -2 * 3.14159265358979323846 * alpha * w + 0.5 * std::log(w) - 0.5 * std::log(t);
    };
    double own = log_r(1, 1);
    double best = -1e300;
    for (int c = 0; c <= 6; ++c) {
        for (int d = -8; d <= 8; ++d) {
            if (c == 0 && d != 1) continue;
            if (c > 0 && std::gcd(c, std::abs(d)) != 1) continue;
            if (c == 1 && (d == 1 || d == -1)) continue;
            double n2 = double(c) * c * t * t + double(d) * d;
            if (n2 > 36.0) continue;
            best = std::max(best, log_r(c, d));
        }
    }
    return Real(own - best);
}

Real deviation_at(const Real& x, const Real& y, const Real& alpha) {
    Real z2 = x * x + y * y;
    return const_two_pi() * alpha * y - (log(z2) / 2) / (1 - 1 / z2);
}

}  // namespace

Real alpha_lrho_branch() { return 1 / (const_two_pi() * sqrt(Real(3))); }
Real alpha_lrho_max() { return sqrt(Real(3)) * log(Real(3)) / (2 * const_two_pi()); }
Real alpha_li_min() { return log(Real(2)) / const_two_pi(); }
Real alpha_li_t0_min() { return 1 / const_two_pi(); }
Real alpha_gamma_max() { return 1 / (2 * const_two_pi()); }

Real dominance_F(const Real& t) {
    Real q = t * t - Real(3) / 4;
    if (q < -Real(kDomainTol)) throw std::domain_error("dominance_F: need t >= sqrt(3)/2");
    if (q < 0) q = Real(0);
    return (1 + q) * log1p_over_q(q) / (2 * const_two_pi() * t);
}

Real dominance_F_inv(const Real& alpha) {
    Real limit = alpha_lrho_branch();
    if (alpha <= 0 || alpha > limit * (1 + Real(kDomainTol)))
        throw std::domain_error("dominance_F_inv: need 0 < alpha <= 1/(2 pi sqrt 3)");
    if (alpha >= limit) return sqrt3_over_2();
    Real lo = sqrt3_over_2();
    Real hi = 2;
    while (dominance_F(hi) > alpha) hi *= 2;
    return bisect([&](const Real& t) { return dominance_F(t) - alpha; }, lo, hi, 1e-14);
}

Real lrho_phase_minimum(const Real& alpha) {
    Real piA = const_pi() * alpha;
    Real disc = 4 * piA * piA - Real(1) / 4;
    if (disc < 0) throw std::domain_error("lrho_phase_minimum: need alpha >= 1/(4 pi)");
    return 2 * piA + sqrt(disc);
}

Real line_rho_proportion(const Real& alpha) {
    if (alpha <= 0 || alpha > alpha_lrho_max() * (1 + Real(kDomainTol)))
        throw std::domain_error("line_rho_proportion: need 0 < alpha <= sqrt(3) log(3)/(4 pi)");
    if (alpha < alpha_lrho_branch()) {
        Real tau = dominance_F_inv(alpha);
        return 12 * (Real(1) / 2 - alpha / (Real(1) / 4 + tau * tau) - atan(2 * tau) / const_pi());
    }
    Real tmin = lrho_phase_minimum(alpha);
    return 12 * (Real(5) / 6 + alpha - 2 * alpha / (Real(1) / 4 + tmin * tmin) -
                 2 * atan(2 * tmin) / const_pi());
}

Real competitor_threshold(const Real& alpha) {
    if (alpha <= alpha_lrho_max() * (1 - Real(kDomainTol)))
        throw std::domain_error("competitor_threshold: need alpha > sqrt(3) log(3)/(4 pi)");
    auto g = [&](const Real& t) {
        Real q = Real(1) / 4 + t * t;
        return const_two_pi() * alpha * 2 * t / (q * (q + 2)) - log1p(2 / q) / 2;
    };
    Real hi = 8 * const_two_pi() * alpha + 10;
    while (g(hi) >= 0) hi *= 2;
    // scan down from the all-negative region to the last sign change
    Real step = hi / 400;
    if (step < Real("0.02")) step = Real("0.02");
    Real t = hi;
    Real lo_limit = sqrt3_over_2();
    while (t - step > lo_limit) {
        Real next = t - step;
        if (g(next) > 0) return bisect(g, next, t, 1e-13);
        t = next;
    }
    if (g(lo_limit) > 0) return bisect(g, lo_limit, t, 1e-13);
    throw std::domain_error("competitor_threshold: no root above sqrt(3)/2");
}

Real vartheta(const Real& t, const Real& alpha, Segment segment) {
    if (segment == Segment::lrho) {
        if (t < sqrt3_over_2() - Real(kDomainTol))
            throw std::domain_error("vartheta: need t >= sqrt(3)/2 on lrho");
        return const_pi() * alpha / (Real(1) / 4 + t * t) + atan(2 * t);
    }
    if (segment == Segment::li) {
        if (t < 1 - Real(kDomainTol)) throw std::domain_error("vartheta: need t >= 1 on li");
        return const_two_pi() * alpha * t * t / (t * t + 1) - atan(t);
    }
    throw std::invalid_argument("vartheta: segment must be lrho or li");
}

Real total_variation(const Real& a, const Real& b, const Real& alpha, Segment segment) {
    if (a > b) throw std::invalid_argument("total_variation: need a <= b");
    std::vector<Real> knots{a};
    // critical points: roots of t^2 - 4 pi alpha t + c0 = 0 with c0 = 1/4 on
    // lrho and c0 = 1 on the axis
    Real two_pi_a = const_two_pi() * alpha;
    Real c0 = (segment == Segment::lrho) ? Real(1) / 4 : Real(1);
    Real disc = two_pi_a * two_pi_a - c0;
    if (disc >= 0) {
        Real root = sqrt(disc);
        for (Real crit : {two_pi_a - root, two_pi_a + root})
            if (crit > a && crit < b) knots.push_back(crit);
    }
    knots.push_back(b);
    std::sort(knots.begin(), knots.end());
    Real v(0);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        v += abs(vartheta(knots[i + 1], alpha, segment) - vartheta(knots[i], alpha, segment));
    return v;
}

Real gamma_curve_y(const Real& x, const Real& alpha) {
    if (abs(x) > Real(1) / 2 + Real(kDomainTol))
        throw std::domain_error("gamma_curve_y: need |x| <= 1/2");
    if (alpha <= 0 || alpha >= alpha_gamma_max())
        throw std::domain_error("gamma_curve_y: need 0 < alpha < 1/(4 pi)");
    Real y0 = sqrt(std::max(Real(0), 1 - x * x));
    Real lo = y0 * (1 + Real("1e-9")) + Real("1e-9");
    auto h = [&](const Real& y) { return deviation_at(x, y, alpha); };
    if (h(lo) >= 0) throw std::logic_error("gamma_curve_y: bracket failed near |z| = 1");
    Real hi = 2;
    while (h(hi) <= 0) hi *= 2;
    return bisect(h, lo, hi, 1e-14);
}

LiWindow li_window(const Real& alpha, double margin) {
    if (alpha <= alpha_li_min() * (1 + Real(kDomainTol)))
        throw std::domain_error("li_window: need alpha > log(2)/(2 pi)");
    double a = alpha.convert_to<double>();

    std::optional<Real> t0;
    double t0d = 0;
    if (alpha > alpha_li_t0_min()) {
        Real two_pi_a = const_two_pi() * alpha;
        t0 = two_pi_a + sqrt(two_pi_a * two_pi_a - 1);
        t0d = t0->convert_to<double>();
    }

    const double h = 1e-4;
    const double t_cap = std::max(4.0, 2 * t0d + 2);
    // contiguous run of margin-certified grid points, containing t0 when the
    // peak exists, otherwise the first run above t = 1
    int n = static_cast<int>((t_cap - 1.0) / h);
    int run_begin = -1;
    int best_begin = -1, best_end = -1;
    for (int i = 1; i <= n; ++i) {
        double t = 1.0 + i * h;
        bool ok = dominance_gap_on_axis(t, a) > Real(margin);
        if (ok && run_begin < 0) run_begin = i;
        if ((!ok || i == n) && run_begin >= 0) {
            int run_end = ok ? i : i - 1;
            bool contains_t0 = !t0 || (1.0 + run_begin * h <= t0d && t0d <= 1.0 + run_end * h);
            if (best_begin < 0 && contains_t0) {
                best_begin = run_begin;
                best_end = run_end;
            }
            run_begin = -1;
        }
    }
    if (best_begin < 0 || best_end - best_begin < 2)
        throw certification_error("li_window: no certified dominance window on the axis");
    // shrink one grid step so every interior point is within h of a certified one
    return LiWindow{Real(1.0 + (best_begin + 1) * h), Real(1.0 + (best_end - 1) * h), t0};
}

std::vector<DominanceCell> dominance_map(const RectSpec& grid, int nx, int ny,
                                         const Real& alpha, double tie_tol) {
    if (grid.y_lo <= 0) throw std::invalid_argument("dominance_map: grid must lie in Im z > 0");
    if (nx < 1 || ny < 1) throw std::invalid_argument("dominance_map: need nx, ny >= 1");
    std::vector<DominanceCell> cells;
    cells.reserve(static_cast<std::size_t>(nx) * ny);
    Real dx = (grid.x_hi - grid.x_lo) / nx;
    Real dy = (grid.y_hi - grid.y_lo) / ny;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            ZPoint z(grid.x_lo + dx * (2 * ix + 1) / 2, grid.y_lo + dy * (2 * iy + 1) / 2);
            std::vector<TermIndex> cand = enumerate_pairs(z, Real(6));
            TermIndex best;
            Real best_lr, second_lr;
            bool have_best = false, have_second = false;
            for (const TermIndex& idx : cand) {
                Real lr = term_geometry(z, alpha, idx).log_r;
                if (!have_best || lr > best_lr) {
                    if (have_best) {
                        second_lr = best_lr;
                        have_second = true;
                    }
                    best = idx;
                    best_lr = lr;
                    have_best = true;
                } else if (!have_second || lr > second_lr) {
                    second_lr = lr;
                    have_second = true;
                }
            }
            Real margin = have_second ? best_lr - second_lr : Real(0);
            cells.push_back(DominanceCell{z, best, margin, margin < Real(tie_tol)});
        }
    }
    return cells;
}

PredictionReport expected_counts_alpha(const Real& alpha) {
    if (alpha <= 0) throw std::invalid_argument("expected_counts: need alpha > 0");
    PredictionReport rep;
    rep.alpha = alpha;
    rep.arc_lower = std::max(Real(0), Real(1) / 12 - alpha);
    if (alpha <= alpha_lrho_branch()) rep.f_inv_alpha = dominance_F_inv(alpha);
    if (alpha <= alpha_lrho_max()) rep.p_rho = line_rho_proportion(alpha);
    if (alpha < alpha_gamma_max()) {
        Real tau = *rep.f_inv_alpha;
        rep.gamma_count =
            alpha + alpha / (Real(1) / 4 + tau * tau) + atan(2 * tau) / const_pi() - Real(1) / 2;
        rep.closure_defect = *rep.p_rho / 12 + rep.arc_lower + *rep.gamma_count - Real(1) / 12;
    }
    if (alpha > alpha_li_min()) {
        try {
            rep.li = li_window(alpha);
        } catch (const certification_error&) {
            // window too thin to certify; report stays partial
        }
    }
    return rep;
}

PredictionReport expected_counts(int k, int m) {
    if (m < 1) throw std::invalid_argument("expected_counts: need m >= 1");
    if (k < 12 || k % 2 != 0) throw std::invalid_argument("expected_counts: need even k >= 12");
    return expected_counts_alpha(Real(m) / k);
}

}  // namespace poincare

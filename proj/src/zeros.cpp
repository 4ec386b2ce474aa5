#include "poincare/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace poincare {

namespace {

ZPoint segment_point(Segment segment, const Real& t) {
    switch (segment) {
        case Segment::lrho: return ZPoint(Real(1) / 2, t);
        case Segment::li: return ZPoint(Real(0), t);
        case Segment::arc: return ZPoint(cos(t), sin(t));
    }
    throw std::invalid_argument("segment_point: bad segment");
}

ZoneTag segment_tag(Segment segment) {
    switch (segment) {
        case Segment::lrho: return ZoneTag::lrho;
        case Segment::li: return ZoneTag::li;
        case Segment::arc: return ZoneTag::arc;
    }
    return ZoneTag::interior;
}

SignedLogReal eval_segment(Segment segment, const Real& t, int k, int m,
                           const EvalOptions& opts, EvalDiag* diag = nullptr) {
    switch (segment) {
        case Segment::lrho: return eval_real_lrho(t, k, m, opts, diag);
        case Segment::li: return eval_real_li(t, k, m, opts, diag);
        case Segment::arc: return eval_real_arc(t, k, m, opts, diag);
    }
    throw std::invalid_argument("eval_segment: bad segment");
}

// Phase-per-unit-weight model driving adaptive scan refinement.  On the arc
// the dominant tied pair gives theta/2 + 2 pi alpha cos(theta).
Real predicted_phase(Segment segment, const Real& t, const Real& alpha) {
    if (segment == Segment::arc) return t / 2 + const_two_pi() * alpha * cos(t);
    return vartheta(t, alpha, segment);
}

int eval_sign(Segment segment, const Real& t, int k, int m, const EvalOptions& opts) {
    return eval_segment(segment, t, k, m, opts).sign;
}

}  // namespace

std::string zone_tag_name(ZoneTag tag) {
    switch (tag) {
        case ZoneTag::lrho: return "lrho";
        case ZoneTag::li: return "li";
        case ZoneTag::arc: return "arc";
        case ZoneTag::gamma: return "gamma";
        case ZoneTag::interior: return "interior";
    }
    return "?";
}

std::string method_name(Method method) {
    return method == Method::bisection ? "bisection" : "winding";
}

std::vector<Bracket> scan_segment(Segment segment, const Real& a, const Real& b, int k, int m,
                                  int n_init, const ScanOptions& opts) {
    if (!(a < b)) throw std::invalid_argument("scan_segment: need a < b");
    if (n_init < 2) throw std::invalid_argument("scan_segment: need n_init >= 2");
    const Real alpha = Real(m) / k;
    const Real phase_budget = const_pi() / 4;

    std::vector<Bracket> brackets;
    auto emit = [&](const Real& lo, int slo, const Real& hi, int shi) {
        if (slo != 0 && shi != 0 && slo != shi) brackets.push_back(Bracket{lo, hi, slo, shi});
    };

    std::function<void(const Real&, int, const Real&, int, int)> walk =
        [&](const Real& t1, int s1, const Real& t2, int s2, int depth) {
            Real advance = Real(k) * abs(predicted_phase(segment, t2, alpha) -
                                         predicted_phase(segment, t1, alpha));
            if (depth <= 0 || advance <= phase_budget) {
                emit(t1, s1, t2, s2);
                return;
            }
            Real tm = (t1 + t2) / 2;
            int sm = eval_sign(segment, tm, k, m, opts.eval);
            if (sm == 0) {
                // landed on a zero; nudge off it so bracketing stays clean
                tm += (t2 - t1) / 1024;
                sm = eval_sign(segment, tm, k, m, opts.eval);
            }
            walk(t1, s1, tm, sm, depth - 1);
            walk(tm, sm, t2, s2, depth - 1);
        };

    Real step = (b - a) / n_init;
    Real t_prev = a;
    int s_prev = eval_sign(segment, a, k, m, opts.eval);
    for (int i = 1; i <= n_init; ++i) {
        Real t = (i == n_init) ? b : a + step * i;
        int s = eval_sign(segment, t, k, m, opts.eval);
        walk(t_prev, s_prev, t, s, opts.max_refine_depth);
        t_prev = t;
        s_prev = s;
    }
    return brackets;
}

ZeroRecord refine_bisect(const Bracket& bracket, Segment segment, int k, int m, const Real& tol,
                         const ScanOptions& opts) {
    Real lo = bracket.lo, hi = bracket.hi;
    int slo = bracket.sign_lo, shi = bracket.sign_hi;
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("refine_bisect: endpoints do not bracket a sign change");

    // Midpoints land arbitrarily close to the zero, where |P| honestly dips
    // toward the rounding floor; the leak certificate is a statement about
    // generic points, so it is not enforced inside the bisection loop.
    ScanOptions inner = opts;
    inner.eval.reality_margin_nats = 0;

    while ((hi - lo) / 2 > tol) {
        Real mid = (lo + hi) / 2;
        int sm = eval_sign(segment, mid, k, m, inner.eval);
        if (sm == 0) {
            // evaluator cancelled exactly: report the midpoint
            lo = mid;
            hi = mid;
            break;
        }
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    Real pos = (lo + hi) / 2;
    EvalDiag diag;
    SignedLogReal v = eval_segment(segment, pos, k, m, inner.eval, &diag);
    ZPoint z = segment_point(segment, pos);
    ZeroRecord rec;
    rec.re = z.x;
    rec.im = z.y;
    rec.segment = segment_tag(segment);
    rec.method = Method::bisection;
    rec.residual_log = v.logabs - diag.max_term_logmag;
    rec.half_width = (hi - lo) / 2;
    if (rec.half_width == 0) rec.half_width = tol;
    return rec;
}

namespace {

struct EdgeWalker {
    const RectSpec& rect;
    int k, m;
    const WindOptions& opts;
    Real total{0};

    // quadrature cross-check state
    bool with_quadrature = false;
    Real quad_re{0}, quad_im{0};

    struct Node {
        ZPoint z;
        Real phase;
        Real fre, fim;  // P'/P, quadrature mode only
    };

    Node make_node(const ZPoint& z, int edge) const {
        EvalResult r = eval_P(z, k, m, opts.eval);
        if (r.value.is_zero) {
            boundary_zero_error err("wind_count: P vanished on the contour");
            throw err;
        }
        Node n{z, r.value.phase, Real(0), Real(0)};
        if (with_quadrature) {
            EvalResult d = eval_P_deriv(z, k, m, opts.eval);
            auto [fre, fim] = lc_to_cartesian(lc_div(d.value, r.value));
            n.fre = fre;
            n.fim = fim;
        }
        return n;
    }

    void accumulate(const Node& a, const Node& b) {
        total += normalize_phase(b.phase - a.phase);
        if (with_quadrature) {
            Real dre = b.z.x - a.z.x;
            Real dim = b.z.y - a.z.y;
            Real fre = (a.fre + b.fre) / 2;
            Real fim = (a.fim + b.fim) / 2;
            quad_re += fre * dre - fim * dim;
            quad_im += fre * dim + fim * dre;
        }
    }

    void refine(const Node& a, const Node& b, int edge, int depth) {
        Real delta = normalize_phase(b.phase - a.phase);
        if (abs(delta) <= const_pi() / 2) {
            accumulate(a, b);
            return;
        }
        if (depth <= 0) throw boundary_zero_error("wind_count: phase step would not settle");
        Real span = abs(b.z.x - a.z.x) + abs(b.z.y - a.z.y);
        Real edge_len = (edge % 2 == 0) ? rect.x_hi - rect.x_lo : rect.y_hi - rect.y_lo;
        if (span < edge_len * Real(opts.min_step_frac))
            throw boundary_zero_error("wind_count: zero suspected on the contour");
        Node mid = make_node(ZPoint((a.z.x + b.z.x) / 2, (a.z.y + b.z.y) / 2), edge);
        refine(a, mid, edge, depth - 1);
        refine(mid, b, edge, depth - 1);
    }

    // Bound on |d arg P / dz| along the contour: the dominant term's phase
    // moves at most 2 pi m max(1, 1/y^2) + k/y per unit length.  Seeding the
    // edge at half-pi phase budget per step rules out silent 2 pi wraps
    // (a zero near the edge adds strictly less than pi per step).
    Real phase_rate() const {
        Real inv = 1 / rect.y_lo;
        Real cap = inv * inv;
        if (cap < 1) cap = Real(1);
        return const_two_pi() * m * cap + Real(k) * inv;
    }

    void walk_edge(const Node& from, const Node& to, int edge) {
        Real edge_len = (edge % 2 == 0) ? rect.x_hi - rect.x_lo : rect.y_hi - rect.y_lo;
        Real need = ceil(edge_len * phase_rate() / (const_pi() / 2)) + 1;
        if (rect.max_step > 0) {
            Real by_step = ceil(edge_len / rect.max_step);
            if (by_step > need) need = by_step;
        }
        int npts = 2;
        if (need > 2) npts = (need > Real(1 << 20) ? (1 << 20) : need.convert_to<int>());
        Node prev = from;
        for (int j = 1; j <= npts; ++j) {
            Node next = (j == npts)
                            ? to
                            : make_node(ZPoint(from.z.x + (to.z.x - from.z.x) * j / npts,
                                               from.z.y + (to.z.y - from.z.y) * j / npts),
                                        edge);
            refine(prev, next, edge, 64);
            prev = next;
        }
    }

    void run() {
        if (!(rect.x_lo < rect.x_hi) || !(rect.y_lo < rect.y_hi) || rect.y_lo <= 0)
            throw std::invalid_argument("wind_count: degenerate rectangle");
        Node c0 = make_node(ZPoint(rect.x_lo, rect.y_lo), 0);
        Node c1 = make_node(ZPoint(rect.x_hi, rect.y_lo), 0);
        Node c2 = make_node(ZPoint(rect.x_hi, rect.y_hi), 1);
        Node c3 = make_node(ZPoint(rect.x_lo, rect.y_hi), 2);
        walk_edge(c0, c1, 0);
        walk_edge(c1, c2, 1);
        walk_edge(c2, c3, 2);
        walk_edge(c3, c0, 3);
    }
};

}  // namespace

int wind_count(const RectSpec& rect, int k, int m, const WindOptions& opts) {
    EdgeWalker w{rect, k, m, opts};
    w.run();
    Real turns = w.total / const_two_pi();
    Real n = floor(turns + Real(1) / 2);
    if (abs(turns - n) > Real("1e-3"))
        throw boundary_zero_error("wind_count: phase did not close to a whole turn");
    return n.convert_to<int>();
}

Real wind_count_quadrature(const RectSpec& rect, int k, int m, const WindOptions& opts) {
    EdgeWalker w{rect, k, m, opts};
    w.with_quadrature = true;
    w.run();
    // (1/2 pi i) * integral: the winding estimate is Im(integral)/(2 pi)
    return w.quad_im / const_two_pi();
}

Real deviation_metric(const ZPoint& z, const Real& alpha) {
    Real z2 = z.x * z.x + z.y * z.y;
    if (z2 <= 1) throw std::domain_error("deviation_metric: need |z| > 1");
    return const_two_pi() * alpha * z.y - (log(z2) / 2) / (1 - 1 / z2);
}

namespace {

constexpr double kSplitFractions[] = {0.5, 0.55, 0.45, 0.6, 0.4, 0.62};

RectSpec child_rect(const Real& x_lo, const Real& x_hi, const Real& y_lo, const Real& y_hi) {
    Real step = std::max(x_hi - x_lo, y_hi - y_lo) / 4;
    return RectSpec{x_lo, x_hi, y_lo, y_hi, step};
}

struct Localizer {
    int k, m;
    Real target_hw;
    const LocalizeOptions& opts;
    std::vector<ZeroRecord> out;

    void emit(const RectSpec& rect, int count) {
        ZPoint center((rect.x_lo + rect.x_hi) / 2, (rect.y_lo + rect.y_hi) / 2);
        EvalResult v = eval_P(center, k, m, opts.wind.eval);
        ZeroRecord rec;
        rec.re = center.x;
        rec.im = center.y;
        rec.segment = opts.tag;
        rec.method = Method::winding;
        rec.residual_log = (v.value.is_zero ? Real(-1e4) : v.value.logmag) - v.max_term_logmag;
        rec.half_width = std::max(rect.x_hi - rect.x_lo, rect.y_hi - rect.y_lo) / 2;
        if (opts.alpha_for_deviation && center.x * center.x + center.y * center.y > 1)
            rec.deviation = deviation_metric(center, *opts.alpha_for_deviation);
        for (int i = 0; i < count; ++i) out.push_back(rec);
    }

    void descend(const RectSpec& rect, int count) {
        if (count == 0) return;
        Real hw = std::max(rect.x_hi - rect.x_lo, rect.y_hi - rect.y_lo) / 2;
        if (hw <= target_hw) {
            emit(rect, count);
            return;
        }
        for (int attempt = 0; attempt <= opts.max_jitters; ++attempt) {
            double f = kSplitFractions[attempt % 6];
            Real mx = rect.x_lo + (rect.x_hi - rect.x_lo) * Real(f);
            Real my = rect.y_lo + (rect.y_hi - rect.y_lo) * Real(f);
            RectSpec kids[4] = {child_rect(rect.x_lo, mx, rect.y_lo, my),
                                child_rect(mx, rect.x_hi, rect.y_lo, my),
                                child_rect(mx, rect.x_hi, my, rect.y_hi),
                                child_rect(rect.x_lo, mx, my, rect.y_hi)};
            int counts[4] = {0, 0, 0, 0};
            int acc = 0;
            bool ok = true;
            for (int i = 0; i < 4; ++i) {
                if (acc == count) break;  // zero counts are nonnegative
                try {
                    counts[i] = wind_count(kids[i], k, m, opts.wind);
                } catch (const boundary_zero_error&) {
                    ok = false;
                    break;
                }
                acc += counts[i];
            }
            if (!ok || acc != count) continue;  // re-split with a jittered cross
            for (int i = 0; i < 4; ++i) descend(kids[i], counts[i]);
            return;
        }
        throw boundary_zero_error("localize_in_rect: persistent zero on subdivision lines");
    }
};

}  // namespace

std::vector<ZeroRecord> localize_in_rect(const RectSpec& rect, int k, int m,
                                         const Real& target_half_width,
                                         const LocalizeOptions& opts) {
    if (target_half_width <= 0)
        throw std::invalid_argument("localize_in_rect: need target_half_width > 0");
    // A zero sitting on the requested outer boundary stalls the walk; nudge
    // the offending boundary inward by 0.3% per attempt.
    RectSpec cur = rect;
    int count = 0;
    for (int attempt = 0;; ++attempt) {
        try {
            count = wind_count(cur, k, m, opts.wind);
            break;
        } catch (const boundary_zero_error&) {
            if (attempt >= opts.max_jitters) throw;
            Real fx = (cur.x_hi - cur.x_lo) * Real(0.003);
            Real fy = (cur.y_hi - cur.y_lo) * Real(0.003);
            cur = RectSpec{cur.x_lo + fx, cur.x_hi - fx, cur.y_lo + fy, cur.y_hi - fy,
                           cur.max_step};
        }
    }
    Localizer loc{k, m, target_half_width, opts};
    loc.descend(cur, count);
    std::sort(loc.out.begin(), loc.out.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        if (a.im != b.im) return a.im < b.im;
        return a.re < b.re;
    });
    return loc.out;
}

namespace {

void apply_corner_weight(ZeroRecord& rec) {
    const Real tol("1e-6");
    Real s32 = sqrt(Real(3)) / 2;
    if (abs(rec.re) < tol && abs(rec.im - 1) < tol) {
        rec.weight = Real(1) / 2;
    } else if (abs(abs(rec.re) - Real(1) / 2) < tol && abs(rec.im - s32) < tol) {
        rec.weight = Real(1) / 3;
    }
}

bool same_zero(const ZeroRecord& a, const ZeroRecord& b) {
    Real d = a.half_width + b.half_width + Real("1e-10");
    return abs(a.re - b.re) <= d && abs(a.im - b.im) <= d;
}

}  // namespace

Catalog assemble_catalog(int k, int m, const CatalogOptions& opts) {
    if (m < 1) throw std::invalid_argument("assemble_catalog: need m >= 1");
    const Real alpha = Real(m) / k;
    const Real pi = const_pi();
    std::vector<ZeroRecord> records;
    ScanOptions scan_opts{opts.eval};
    Real btol(opts.bisect_tol);

    // unit arc
    for (const Bracket& br : scan_segment(Segment::arc, pi / 3, pi / 2, k, m, opts.n_init, scan_opts))
        records.push_back(refine_bisect(br, Segment::arc, k, m, btol, scan_opts));

    // Re z = 1/2: start above the point where the dominant pair takes over
    Real t_lo;
    if (alpha <= alpha_lrho_branch()) {
        t_lo = dominance_F_inv(alpha) + Real(opts.lrho_start_offset);
    } else if (alpha <= alpha_lrho_max()) {
        t_lo = sqrt(Real(3)) / 2 + Real(opts.lrho_start_offset);
    } else {
        t_lo = competitor_threshold(alpha) + Real(opts.lrho_start_offset);
    }
    for (const Bracket& br :
         scan_segment(Segment::lrho, t_lo, Real(opts.lrho_t_max), k, m, opts.n_init, scan_opts))
        records.push_back(refine_bisect(br, Segment::lrho, k, m, btol, scan_opts));

    // imaginary axis, inside the certified dominance window
    if (alpha > alpha_li_min()) {
        try {
            LiWindow win = li_window(alpha);
            for (const Bracket& br :
                 scan_segment(Segment::li, win.a, win.b, k, m, opts.n_init, scan_opts))
                records.push_back(refine_bisect(br, Segment::li, k, m, btol, scan_opts));
        } catch (const certification_error&) {
            // no certified window; the axis is left unscanned
        }
    }

    // tube around the tie curve, partitioned into x-strips
    if (alpha < alpha_gamma_max()) {
        const Real x_max("0.499");
        const Real hw(opts.tube_half_width);
        int strips = std::max(3, opts.tube_strips);
        LocalizeOptions lopts;
        lopts.wind.eval = opts.eval;
        lopts.tag = ZoneTag::gamma;
        lopts.alpha_for_deviation = alpha;
        for (int i = 0; i < strips; ++i) {
            Real x0 = -x_max + 2 * x_max * i / strips;
            Real x1 = -x_max + 2 * x_max * (i + 1) / strips;
            Real y_min, y_max;
            for (int j = 0; j <= 2; ++j) {
                Real y = gamma_curve_y(x0 + (x1 - x0) * j / 2, alpha);
                if (j == 0 || y < y_min) y_min = y;
                if (j == 0 || y > y_max) y_max = y;
            }
            Real y_lo = y_min - hw;
            Real y_hi = y_max + hw;
            // stay above the unit circle: translated zeros below it are not in F
            Real circle = sqrt(std::max(Real(0), Real("1.000001") - x0 * x0));
            Real circle2 = sqrt(std::max(Real(0), Real("1.000001") - x1 * x1));
            y_lo = std::max(y_lo, std::max(circle, circle2));
            if (y_lo >= y_hi) continue;
            RectSpec strip{x0, x1, y_lo, y_hi, std::max(x1 - x0, y_hi - y_lo) / 4};
            auto found =
                localize_in_rect(strip, k, m, Real(opts.gamma_target_half_width), lopts);
            records.insert(records.end(), found.begin(), found.end());
        }
    }

    for (ZeroRecord& rec : records) apply_corner_weight(rec);

    std::sort(records.begin(), records.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        if (a.segment != b.segment) return static_cast<int>(a.segment) < static_cast<int>(b.segment);
        if (a.im != b.im) return a.im < b.im;
        return a.re < b.re;
    });

    // deduplicate: prefer the tighter record, bisection on ties
    std::vector<ZeroRecord> dedup;
    for (const ZeroRecord& rec : records) {
        bool merged = false;
        for (ZeroRecord& kept : dedup) {
            if (!same_zero(kept, rec)) continue;
            bool replace = rec.half_width < kept.half_width ||
                           (rec.half_width == kept.half_width &&
                            rec.method == Method::bisection && kept.method == Method::winding);
            if (replace) kept = rec;
            merged = true;
            break;
        }
        if (!merged) dedup.push_back(rec);
    }

    Catalog cat;
    cat.records = std::move(dedup);
    CatalogAccounting& acc = cat.accounting;
    acc.weighted_total = Real(0);
    for (const ZeroRecord& rec : cat.records) {
        switch (rec.segment) {
            case ZoneTag::arc: ++acc.arc_count; break;
            case ZoneTag::lrho: ++acc.lrho_count; break;
            case ZoneTag::li: ++acc.li_count; break;
            case ZoneTag::gamma: ++acc.gamma_count; break;
            case ZoneTag::interior: ++acc.interior_count; break;
        }
        acc.weighted_total += rec.weight;
    }
    acc.k_over_12 = Real(k) / 12;
    acc.residue = acc.k_over_12 - acc.weighted_total;
    return cat;
}

}  // namespace poincare

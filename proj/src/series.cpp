#include "poincare/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace poincare {

namespace {

void check_eval_pre(const ZPoint& z, const EvalOptions& opts) {
    if (z.y <= 0) throw std::invalid_argument("eval: need Im z > 0");
    if (!(opts.rel_tol > 0 && opts.rel_tol <= 1e-3))
        throw std::invalid_argument("eval: rel_tol must be in (0, 1e-3]");
}

Real initial_radius(const ZPoint& z) {
    Real r = sqrt(z.x * z.x + z.y * z.y) * Real(1.25) + Real("1.5");
    return r < 2 ? Real(2) : r;
}

// Grows the radius until the tail certificate holds, then hands the final
// term list to `assemble`.  `max_logmag` must compute the largest term
// magnitude of the list, `tail` the matching tail bound.
template <typename MaxFn, typename TailFn, typename AssembleFn>
auto certified_sum(const ZPoint& z, const EvalOptions& opts, const MaxFn& max_logmag,
                   const TailFn& tail, const AssembleFn& assemble) {
    const Real log_tol = log(Real(opts.rel_tol));
    Real radius = initial_radius(z);
    for (;;) {
        std::vector<TermIndex> pairs = enumerate_pairs(z, radius);
        Real lmax = max_logmag(pairs);
        Real tl = tail(radius);
        if (tl <= lmax + log_tol) return assemble(pairs, tl, radius);
        radius *= Real("1.6");
        if (radius > Real(opts.radius_cap))
            throw certification_error("eval: truncation radius cap exceeded");
    }
}

EvalResult eval_sum(const ZPoint& z, int k, int m, const EvalOptions& opts, bool deriv) {
    check_eval_pre(z, opts);
    auto term = [&](const TermIndex& idx) {
        return deriv ? term_sigma_deriv(z, k, m, idx) : term_sigma(z, k, m, idx);
    };
    std::vector<LogComplex> terms;
    Real lmax_seen;
    auto max_logmag = [&](const std::vector<TermIndex>& pairs) {
        terms.clear();
        terms.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            terms.push_back(term(pairs[i]));
            if (!terms.back().is_zero && (i == 0 || terms.back().logmag > lmax_seen))
                lmax_seen = terms.back().logmag;
        }
        return lmax_seen;
    };
    auto tail = [&](const Real& r) {
        return deriv ? tail_bound_deriv(z, k, m, r) : tail_bound(z, k, r);
    };
    return certified_sum(z, opts, max_logmag, tail,
                         [&](const std::vector<TermIndex>&, Real tl, Real r) {
                             return EvalResult{lc_add(terms), std::move(tl), std::move(r),
                                               lmax_seen, Precision{precision_bits()}};
                         });
}

// Signed log-sum-exp accumulation in a fixed order.
struct SignedAccum {
    std::vector<std::pair<int, Real>> items;  // (sign, logabs)

    void add(int sign, Real logabs) {
        if (sign != 0) items.emplace_back(sign, std::move(logabs));
    }

    // Returns (sign, logabs); sign 0 with the cancellation floor as logabs
    // when the sum cancels below working precision.
    std::pair<int, Real> reduce() const {
        if (items.empty()) return {0, Real(-1e6)};
        Real lmax = items[0].second;
        for (const auto& it : items)
            if (it.second > lmax) lmax = it.second;
        Real s(0);
        for (const auto& it : items) s += Real(it.first) * exp(it.second - lmax);
        Real floor_log = log(Real(items.size() + 8)) - (Real(precision_bits()) - 8) * log(Real(2));
        if (s == 0 || log(abs(s)) < floor_log) return {0, lmax + floor_log};
        return {s > 0 ? 1 : -1, lmax + log(abs(s))};
    }
};

struct PairRule {
    // Maps an index to its partner under the segment's conjugation symmetry.
    std::function<std::pair<std::int64_t, std::int64_t>(std::int64_t, std::int64_t)> partner;
    // Extra phase added to every term before taking real parts (arc only).
    Real phase_shift;
};

SignedLogReal eval_real_paired(const ZPoint& z, int k, int m, const EvalOptions& opts,
                               EvalDiag* diag, const PairRule& rule) {
    check_eval_pre(z, opts);

    auto norm_index = [](std::int64_t c, std::int64_t d) {
        // fold (c,d) ~ (-c,-d) into the index set (c > 0 or (0,1))
        if (c < 0 || (c == 0 && d < 0)) return std::make_pair(-c, -d);
        return std::make_pair(c, d);
    };

    auto assemble = [&](const std::vector<TermIndex>& pairs, Real tl, Real radius) {
        SignedAccum acc;
        SignedAccum leak;
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        Real lmax;
        bool have_lmax = false;
        std::size_t n_terms = 0;

        for (const TermIndex& idx : pairs) {
            auto self = std::make_pair(idx.c, idx.d);
            auto partner_raw = rule.partner(idx.c, idx.d);
            auto mate = norm_index(partner_raw.first, partner_raw.second);
            // representative: lexicographically smaller of the orbit
            auto rep = std::min(self, mate);
            if (seen.count(rep)) continue;
            seen.insert(rep);

            LogComplex sigma = term_sigma(z, k, m, make_term_index(rep.first, rep.second));
            Real ph = normalize_phase(sigma.phase + rule.phase_shift);
            Real cph = cos(ph);
            bool self_paired = (mate == self);
            Real weight_log = self_paired ? Real(0) : log(Real(2));

            if (!have_lmax || sigma.logmag > lmax) lmax = sigma.logmag;
            have_lmax = true;
            ++n_terms;

            if (cph != 0) {
                acc.add(cph > 0 ? 1 : -1, sigma.logmag + weight_log + log(abs(cph)));
            }
            if (self_paired) {
                Real s = sin(ph);
                if (s != 0) leak.add(1, sigma.logmag + log(abs(s)));
            }
        }

        auto [sign, logabs] = acc.reduce();
        // Honest leak floor: the summation's own rounding noise.
        Real rounding_floor =
            lmax + log(Real(n_terms + 8)) - (Real(precision_bits()) - 8) * log(Real(2));
        auto [lsign, leak_log] = leak.reduce();
        if (lsign == 0 || leak_log < rounding_floor) leak_log = rounding_floor;

        if (diag) *diag = EvalDiag{lmax, tl, radius};

        SignedLogReal out{sign, std::move(logabs), std::move(leak_log)};
        if (opts.reality_margin_nats > 0 && out.sign != 0 &&
            out.imag_leak_log > out.logabs - Real(opts.reality_margin_nats)) {
            throw certification_error(
                "reality certificate failed: imaginary leak too large (insufficient precision)");
        }
        return out;
    };

    auto max_logmag = [&](const std::vector<TermIndex>& pairs) {
        Real lmax;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            Real n2 = pair_norm_sq(z, pairs[i].c, pairs[i].d);
            Real lm = -const_two_pi() * m * (z.y / n2) - Real(k) * log(n2) / 2;
            if (i == 0 || lm > lmax) lmax = lm;
        }
        return lmax;
    };
    auto tail = [&](const Real& r) { return tail_bound(z, k, r); };
    return certified_sum(z, opts, max_logmag, tail, assemble);
}

}  // namespace

EvalResult eval_P(const ZPoint& z, int k, int m, const EvalOptions& opts) {
    return eval_sum(z, k, m, opts, false);
}

EvalResult eval_P_deriv(const ZPoint& z, int k, int m, const EvalOptions& opts) {
    return eval_sum(z, k, m, opts, true);
}

SignedLogReal eval_real_lrho(const Real& t, int k, int m, const EvalOptions& opts,
                             EvalDiag* diag) {
    if (t < sqrt(Real(3)) / 2 - Real("1e-12"))
        throw std::domain_error("eval_real_lrho: need t >= sqrt(3)/2");
    PairRule rule{[](std::int64_t c, std::int64_t d) { return std::make_pair(c, -c - d); },
                  Real(0)};
    return eval_real_paired(ZPoint(Real(1) / 2, t), k, m, opts, diag, rule);
}

SignedLogReal eval_real_li(const Real& t, int k, int m, const EvalOptions& opts,
                           EvalDiag* diag) {
    if (t < Real(1) - Real("1e-12")) throw std::domain_error("eval_real_li: need t >= 1");
    PairRule rule{[](std::int64_t c, std::int64_t d) { return std::make_pair(c, -d); }, Real(0)};
    return eval_real_paired(ZPoint(Real(0), t), k, m, opts, diag, rule);
}

SignedLogReal eval_real_arc(const Real& theta, int k, int m, const EvalOptions& opts,
                            EvalDiag* diag) {
    const Real pi = const_pi();
    if (theta < pi / 3 - Real("1e-12") || theta > pi / 2 + Real("1e-12"))
        throw std::domain_error("eval_real_arc: need theta in [pi/3, pi/2]");
    PairRule rule{[](std::int64_t c, std::int64_t d) { return std::make_pair(d, c); },
                  normalize_phase(theta * k / 2)};
    return eval_real_paired(ZPoint(cos(theta), sin(theta)), k, m, opts, diag, rule);
}

TwoTermApprox approx_M(const Real& t, int k, int m, Segment segment) {
    const Real pi = const_pi();
    if (segment == Segment::lrho) {
        Real q = Real(1) / 4 + t * t;
        return TwoTermApprox{-const_two_pi() * m * t / q - Real(k) * log(q) / 2,
                             pi * m / q + Real(k) * atan(2 * t)};
    }
    if (segment == Segment::li) {
        Real q = t * t + 1;
        return TwoTermApprox{-const_two_pi() * m * t / q - Real(k) * log(q) / 2,
                             const_two_pi() * m * t * t / q - Real(k) * atan(t)};
    }
    throw std::invalid_argument("approx_M: segment must be lrho or li");
}

}  // namespace poincare

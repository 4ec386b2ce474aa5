#ifndef POINCARE_LOGCX_HPP
#define POINCARE_LOGCX_HPP

// Complex numbers in log-polar form: (log-magnitude in nats, phase in
// (-pi, pi]).  Values like exp(-2*pi*m*t) for m ~ 100, t ~ 2 are far outside
// any fixed-exponent format; storing the log keeps every field finite.
// Zero is an explicit marker rather than logmag = -inf so that all stored
// reals stay finite and comparisons stay total.

#include "poincare/real.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace poincare {

struct LogComplex {
    Real logmag;   // ignored when is_zero
    Real phase;    // normalized to (-pi, pi], ignored when is_zero
    bool is_zero = true;

    LogComplex() = default;
    LogComplex(Real lm, Real ph) : logmag(std::move(lm)), phase(std::move(ph)), is_zero(false) {}

    static LogComplex zero() { return LogComplex(); }
    static LogComplex one() { return LogComplex(Real(0), Real(0)); }
};

// Reduce an angle to (-pi, pi].  Idempotent.
Real normalize_phase(Real phase);

LogComplex lc_from_cartesian(const Real& re, const Real& im);

// Cartesian form at working precision.  The Real variant has effectively
// unbounded exponent range; the double variant throws std::range_error when
// exp(logmag) leaves binary64 (|logmag| beyond ~709/745).
std::pair<Real, Real> lc_to_cartesian(const LogComplex& x);
std::pair<double, double> lc_to_cartesian_f64(const LogComplex& x);

LogComplex lc_mul(const LogComplex& x, const LogComplex& y);
LogComplex lc_div(const LogComplex& x, const LogComplex& y);  // throws on zero divisor
LogComplex lc_powi(const LogComplex& x, std::int64_t n);
LogComplex lc_neg(const LogComplex& x);
LogComplex lc_conj(const LogComplex& x);

// Ordered log-sum-exp: find the max logmag, accumulate sum(exp(l_i - l*) *
// e^{i phase_i}) in the given order at working precision.  The order is part
// of the determinism contract.  Returns the zero marker when the accumulated
// sum cancels below the working-precision floor relative to the largest term.
LogComplex lc_add(const std::vector<LogComplex>& terms);

}  // namespace poincare

#endif

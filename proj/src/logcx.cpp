#include "poincare/logcx.hpp"

namespace poincare {

Real normalize_phase(Real phase) {
    const Real two_pi = const_two_pi();
    Real p = fmod(phase, two_pi);  // now in (-2pi, 2pi)
    const Real pi = const_pi();
    if (p > pi) p -= two_pi;
    if (p <= -pi) p += two_pi;
    return p;
}

LogComplex lc_from_cartesian(const Real& re, const Real& im) {
    if (re == 0 && im == 0) return LogComplex::zero();
    Real lm = log(re * re + im * im) / 2;
    Real ph = normalize_phase(atan2(im, re));
    return LogComplex(std::move(lm), std::move(ph));
}

std::pair<Real, Real> lc_to_cartesian(const LogComplex& x) {
    if (x.is_zero) return {Real(0), Real(0)};
    // MPFR exponents span far beyond anything this library produces, but the
    // contract still demands a guard.
    if (abs(x.logmag) > Real(1e15)) throw std::range_error("lc_to_cartesian: magnitude out of range");
    Real r = exp(x.logmag);
    return {r * cos(x.phase), r * sin(x.phase)};
}

std::pair<double, double> lc_to_cartesian_f64(const LogComplex& x) {
    if (x.is_zero) return {0.0, 0.0};
    // binary64: overflow above e^709.78, underflow (to zero, incl. denormals)
    // below e^-745.13.
    if (x.logmag > Real(709.78) || x.logmag < Real(-745.13))
        throw std::range_error("lc_to_cartesian_f64: exp(logmag) outside binary64 range");
    Real r = exp(x.logmag);
    return {(r * cos(x.phase)).convert_to<double>(), (r * sin(x.phase)).convert_to<double>()};
}

LogComplex lc_mul(const LogComplex& x, const LogComplex& y) {
    if (x.is_zero || y.is_zero) return LogComplex::zero();
    return LogComplex(x.logmag + y.logmag, normalize_phase(x.phase + y.phase));
}

LogComplex lc_div(const LogComplex& x, const LogComplex& y) {
    if (y.is_zero) throw std::domain_error("lc_div: division by zero");
    if (x.is_zero) return LogComplex::zero();
    return LogComplex(x.logmag - y.logmag, normalize_phase(x.phase - y.phase));
}

LogComplex lc_powi(const LogComplex& x, std::int64_t n) {
    if (x.is_zero) {
        if (n <= 0) throw std::domain_error("lc_powi: zero to non-positive power");
        return LogComplex::zero();
    }
    if (n == 0) return LogComplex::one();
    return LogComplex(x.logmag * n, normalize_phase(x.phase * n));
}

LogComplex lc_neg(const LogComplex& x) {
    if (x.is_zero) return x;
    return LogComplex(x.logmag, normalize_phase(x.phase + const_pi()));
}

LogComplex lc_conj(const LogComplex& x) {
    if (x.is_zero) return x;
    return LogComplex(x.logmag, normalize_phase(-x.phase));
}

LogComplex lc_add(const std::vector<LogComplex>& terms) {
    Real lmax;
    bool any = false;
    for (const LogComplex& t : terms) {
        if (t.is_zero) continue;
        if (!any || t.logmag > lmax) lmax = t.logmag;
        any = true;
    }
    if (!any) return LogComplex::zero();

    Real sre(0), sim(0);
    std::size_t n = 0;
    for (const LogComplex& t : terms) {
        if (t.is_zero) continue;
        Real w = exp(t.logmag - lmax);
        sre += w * cos(t.phase);
        sim += w * sin(t.phase);
        ++n;
    }
    if (sre == 0 && sim == 0) return LogComplex::zero();
    Real mag2 = sre * sre + sim * sim;
    // Cancellation below the accumulated rounding floor (every scaled term is
    // <= 1 in magnitude, so the floor is ~ n * 2^-bits) is reported as zero.
    Real floor_log = log(Real(n + 8)) - (Real(precision_bits()) - 8) * log(Real(2));
    if (log(mag2) / 2 < floor_log) return LogComplex::zero();
    return LogComplex(lmax + log(mag2) / 2, normalize_phase(atan2(sim, sre)));
}

}  // namespace poincare

#ifndef POINCARE_SERIES_HPP
#define POINCARE_SERIES_HPP

// Assembly of P_{k,m}(z) and P'_{k,m}(z) from lattice terms with a certified
// truncation radius, the real-valued restrictions on the segments Re z = 1/2,
// the imaginary axis, and the unit arc, and the closed-form two-term
// approximant that drives those restrictions' oscillation.

#include "poincare/lattice.hpp"
#include "poincare/logcx.hpp"
#include "poincare/real.hpp"

namespace poincare {

enum class Segment { lrho, li, arc };

struct EvalOptions {
    double rel_tol = 1e-20;        // certified relative truncation tolerance
    double radius_cap = 1e5;       // give up (certification_error) beyond this
    double reality_margin_nats = 20;  // required gap logabs - imag_leak_log
};

struct EvalResult {
    LogComplex value;
    Real tail_log;          // certified log bound on the truncation error
    Real radius_used;
    Real max_term_logmag;   // log of the largest single-term magnitude
    Precision precision;
};

// A signed real magnitude in log form, with the residual imaginary mass the
// structural pairing could not cancel (the honest error signal at magnitudes
// like e^-700).
struct SignedLogReal {
    int sign = 0;           // -1, 0, +1
    Real logabs;            // log |value| in nats (cancellation floor when sign = 0)
    Real imag_leak_log;     // log of the residual |imaginary part|
};

struct EvalDiag {
    Real max_term_logmag;   // log of the largest single-term magnitude
    Real tail_log;
    Real radius_used;
};

// P_{k,m}(z) summed in the mandated order over |cz+d| <= R, R grown until
// exp(tail_bound) < rel_tol * (max term magnitude).
EvalResult eval_P(const ZPoint& z, int k, int m, const EvalOptions& opts = {});
EvalResult eval_P_deriv(const ZPoint& z, int k, int m, const EvalOptions& opts = {});

// Real restrictions.  Terms are paired so imaginary parts cancel
// structurally; each pair contributes 2 Re(term of the representative).
//   on Re z = 1/2:  (c,d) ~ (c, -c-d)
//   on the imaginary axis:  (c,d) ~ (c, -d)
//   on the unit arc (value of e^{i k theta/2} P(e^{i theta})):  (c,d) ~ (d,c)
SignedLogReal eval_real_lrho(const Real& t, int k, int m, const EvalOptions& opts = {},
                             EvalDiag* diag = nullptr);
SignedLogReal eval_real_li(const Real& t, int k, int m, const EvalOptions& opts = {},
                           EvalDiag* diag = nullptr);
SignedLogReal eval_real_arc(const Real& theta, int k, int m, const EvalOptions& opts = {},
                            EvalDiag* diag = nullptr);

// Closed-form amplitude/phase of the dominant two-term approximant
// M(t) = 2 R_M(t) cos(Theta_M(t)) on the two vertical segments.
struct TwoTermApprox {
    Real log_amplitude;  // log R_M(t)
    Real phase;          // Theta_M(t), unreduced
};

TwoTermApprox approx_M(const Real& t, int k, int m, Segment segment);

}  // namespace poincare

#endif

#include "poincare/real.hpp"

#include <cmath>

namespace poincare {

namespace {

struct PrecisionState {
    unsigned bits = 0;
    Real pi;
    Real two_pi;
};

PrecisionState& state() {
    static PrecisionState s;
    return s;
}

unsigned digits10_for_bits(unsigned bits) {
    // MPFR precision is set through decimal digits; overshoot slightly so
    // the effective mantissa is at least `bits` wide.
    return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1;
}

void apply(unsigned bits) {
    Real::default_precision(digits10_for_bits(bits));
    PrecisionState& s = state();
    s.bits = bits;
    s.pi = 4 * atan(Real(1));
    s.two_pi = 2 * s.pi;
}

void ensure_init() {
    if (state().bits == 0) apply(106);
}

}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
    apply(bits);
}

unsigned precision_bits() {
    ensure_init();
    return state().bits;
}

Real const_pi() {
    ensure_init();
    return state().pi;
}

Real const_two_pi() {
    ensure_init();
    return state().two_pi;
}

std::string to_decimal_string(const Real& x) {
    return x.str(0, std::ios_base::scientific);
}

Real parse_decimal(const std::string& s) {
    ensure_init();
    return Real(s);
}

}  // namespace poincare

#ifndef POINCARE_REAL_HPP
#define POINCARE_REAL_HPP

// Extended-precision real arithmetic used throughout the library.
// Backed by MPFR (via Boost.Multiprecision) with a process-wide working
// precision measured in mantissa bits.  The precision is set once per
// computation and recorded in every output artifact.

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace poincare {

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Working mantissa precision, in bits.  Must be >= 53.
struct Precision {
    unsigned bits = 106;
};

// Set/query the working precision.  Affects all Reals created afterwards.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// pi and 2*pi at the current working precision (cached per precision).
Real const_pi();
Real const_two_pi();

// Decimal string carrying the full working precision (round-trips losslessly
// when parsed back at the same precision).
std::string to_decimal_string(const Real& x);
Real parse_decimal(const std::string& s);

// Raised when a computation cannot produce a certified result
// (truncation radius cap hit, reality certificate broken, empty window).
class certification_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised by the winding machinery when a zero is suspected on a contour.
class boundary_zero_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace poincare

#endif

#include "rca/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "rca/error.hpp"

namespace rca::math {

double erfc(double x) { return std::erfc(x); }

double igamc(double a, double x) {
  if (!(a > 0.0) || x < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "igamc needs a > 0 and x >= 0");
  }
  return boost::math::gamma_q(a, x);
}

}  // namespace rca::math

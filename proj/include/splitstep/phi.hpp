#ifndef SPLITSTEP_PHI_HPP
#define SPLITSTEP_PHI_HPP

#include <complex>

namespace splitstep {

using Complex = std::complex<double>;

// e^z - 1 without cancellation for small z (expm1 on the real axis plus the
// identity e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)).
Complex expm1c(Complex z);

// sinh(z)/z with Taylor fallback near zero.
Complex sinhc(Complex z);

// phi_0(z) = e^z, phi_1(z) = (e^z - 1)/z, and the recursion
// phi_k(z) = 1/k! + z phi_{k+1}(z) for k in {0,1,2,3}. Total function:
// removable singularities are handled by Taylor branches (phi_1 below 1e-5,
// phi_2/phi_3 below 1e-2 to avoid the 1/k! cancellation in the downward
// recursion).
Complex phi(int k, Complex z);

// Divided difference (phi_1(x) - phi_1(y)) / (x - y), stable at x ~ y via a
// central Taylor expansion around the midpoint.
Complex phi1_divided_difference(Complex x, Complex y);

}  // namespace splitstep

#endif

#include "splitstep/phi.hpp"

#include <cmath>

#include "splitstep/errors.hpp"

namespace splitstep {

namespace {

// Taylor series phi_k(z) = sum_j z^j / (j+k)!, valid for small |z|.
Complex phi_taylor(int k, Complex z, int terms) {
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    Complex term = 1.0 / kfact;  // j = 0
    Complex sum = term;
    for (int j = 1; j <= terms; ++j) {
        term *= z / static_cast<double>(j + k);
        sum += term;
    }
    return sum;
}

// d^n/dz^n phi_1(z) = sum_j z^j / (j! (j+n+1)) for small z, closed form
// (e^z p_n(z) + (-1)^{n+1} n!) / z^{n+1} otherwise.
Complex phi1_derivative(int n, Complex z) {
    if (std::abs(z) < 0.8) {
        Complex pow = 1.0;
        double jfact = 1.0;
        Complex sum = 0.0;
        for (int j = 0; j <= 32; ++j) {
            if (j > 0) {
                pow *= z;
                jfact *= j;
            }
            sum += pow / (jfact * static_cast<double>(j + n + 1));
        }
        return sum;
    }
    const Complex e = std::exp(z);
    const Complex z2 = z * z;
    switch (n) {
        case 1:
            return (e * (z - 1.0) + 1.0) / z2;
        case 3:
            return (e * (((z - 3.0) * z + 6.0) * z - 6.0) + 6.0) / (z2 * z2);
        case 5:
            return (e * (((((z - 5.0) * z + 20.0) * z - 60.0) * z + 120.0) * z - 120.0) + 120.0) /
                   (z2 * z2 * z2);
        default:
            throw SplitError(ErrorKind::Config, "phi1_derivative: unsupported order");
    }
}

}  // namespace

Complex expm1c(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    const double siny2 = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * siny2 * siny2, std::exp(x) * std::sin(y)};
}

Complex sinhc(Complex z) {
    if (std::abs(z) < 1e-4) {
        const Complex z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

Complex phi(int k, Complex z) {
    switch (k) {
        case 0:
            return std::exp(z);
        case 1:
            if (std::abs(z) < 1e-5) return phi_taylor(1, z, 6);
            return expm1c(z) / z;
        case 2:
            if (std::abs(z) < 1e-2) return phi_taylor(2, z, 10);
            return (phi(1, z) - 1.0) / z;
        case 3:
            if (std::abs(z) < 1e-2) return phi_taylor(3, z, 10);
            return (phi(2, z) - 0.5) / z;
        default:
            throw SplitError(ErrorKind::Config, "phi: k must be in 0..3");
    }
}

Complex phi1_divided_difference(Complex x, Complex y) {
    const Complex h = x - y;
    if (std::abs(h) >= 0.02) return (phi(1, x) - phi(1, y)) / h;
    const Complex m = 0.5 * (x + y);
    const Complex h2 = h * h;
    // central expansion: f'(m) + f'''(m) h^2/24 + f'''''(m) h^4/1920
    return phi1_derivative(1, m) + phi1_derivative(3, m) * h2 / 24.0 +
           phi1_derivative(5, m) * h2 * h2 / 1920.0;
}

}  // namespace splitstep

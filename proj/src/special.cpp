#include "ventropy/special.hpp"

#include <cmath>

namespace ventropy {

namespace {
const long double kSqrtPi = std::sqrt(kPiL);
}

long double gamma_half(unsigned d) {
    long double g = (d % 2 == 0) ? 1.0L : kSqrtPi;  // Gamma(1) or Gamma(1/2)
    for (long double x = (d % 2 == 0) ? 1.0L : 0.5L; x + 0.25L < d / 2.0L; x += 1.0L) g *= x;
    return g;
}

long double pi_pow_half(unsigned d) {
    long double p = (d % 2 == 0) ? 1.0L : kSqrtPi;
    for (unsigned j = 0; j < d / 2; ++j) p *= kPiL;
    return p;
}

long double unit_ball_volume(unsigned n) {
    // pi^(n/2) / Gamma(n/2 + 1) = pi^(n/2) / ((n/2) Gamma(n/2))
    return pi_pow_half(n) / (0.5L * n * gamma_half(n));
}

} // namespace ventropy

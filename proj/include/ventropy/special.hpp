#pragma once

namespace ventropy {

inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;
inline constexpr long double kLn2L = 0.69314718055994530941723212145817657L;

/// Gamma(d/2) for integer d >= 1, exact by the half-integer recursion
/// Gamma(1/2) = sqrt(pi), Gamma(x+1) = x Gamma(x).
long double gamma_half(unsigned d);

/// pi^(d/2), sharing the same sqrt(pi) the gamma recursion uses so that
/// quotients like pi^(d/2)/Gamma(d/2) cancel cleanly for odd d.
long double pi_pow_half(unsigned d);

/// Volume of the n-dimensional Euclidean unit ball.
long double unit_ball_volume(unsigned n);

} // namespace ventropy

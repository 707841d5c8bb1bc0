#pragma once

namespace dipolar::constants {

// CODATA 2018 values, SI units throughout.
inline constexpr double mu0 = 1.25663706212e-6;           // vacuum permeability, N/A^2
inline constexpr double hbar = 1.054571817e-34;           // reduced Planck constant, J*s
inline constexpr double bohr_magneton = 9.2740100783e-24; // J/T

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

} // namespace dipolar::constants

#pragma once

// Coulomb bound states for an orbiting particle of arbitrary mass in
// Hartree atomic units. Everything is evaluated in log space internally so
// circular states up to n = 200 neither overflow nor underflow.
//
// Conventions:
//  - energies E_n = -mass/(2 n^2) hartree, length scale a = m_e/mass Bohr radii
//  - no Condon-Shortley phase: every eigenfunction is real and positive on
//    its equatorial peak at phi = 0, which makes all adjacent-circular dipole
//    matrix elements real and positive.

#include <complex>

#include "hatom/geometry.hpp"
#include "hatom/units.hpp"

namespace hatom {

// Circular Rydberg state |n, l=n-1, m=n-1>.
struct CircularStateIndex {
    int n = 1;
    int l() const { return n - 1; }
    int m() const { return n - 1; }
};

// <u_{n,n-1,n-1} | x | u_{n+1,n,n}>, the in-plane position matrix element
// between adjacent circular states. Real and positive in our phase convention.
struct DipoleElement {
    int n = 1;
    double value = 0.0; // Bohr radii
};

// -- energies ---------------------------------------------------------------

// Bound-state energy of a particle of mass `mass` in the Coulomb well;
// independent of l, m and of where the well sits.
double bound_energy(int n, double mass);

// Relative-motion spectrum of the two-body atom (mass = params.mu).
double bohr_energy(int n, const AtomParams& params);

// -- eigenfunctions ----------------------------------------------------------

// Circular state of an orbiting particle of mass `mass`:
//   u = N_n r^{n-1} e^{-r/(n a)} sin^{n-1}(theta) e^{i(n-1)phi},  a = m_e/mass.
// Throws std::range_error outside the supported envelope
// (n > 200 or r > 10 n^2 a), std::invalid_argument for n < 1 or r < 0.
std::complex<double> eval_circular_mass(int n, const SphericalPoint& x, double mass,
                                        const AtomParams& params);

// Mass defaults to the reduced mass (relative-motion eigenfunctions).
std::complex<double> eval_circular(CircularStateIndex idx, const SphericalPoint& x,
                                   const AtomParams& params);

// General eigenfunction u_nlm = R_nl(r) Y_lm(theta, phi), unit normalized.
std::complex<double> eval_u_nlm_mass(int n, int l, int m, const SphericalPoint& x,
                                     double mass, const AtomParams& params);
std::complex<double> eval_u_nlm(int n, int l, int m, const SphericalPoint& x,
                                const AtomParams& params);

// -- matrix elements ---------------------------------------------------------

// Adjacent-circular dipole from the closed Gamma-function form
//   <u_n| x |u_{n+1}> = pi B_n B_{n+1} (2n+2)! beta^{2n+3} S(n),
// beta = n(n+1)a/(2n+1), S(n) = int sin^{2n+1} = 2^{2n+1}(n!)^2/(2n+1)!.
double circular_dipole_mass(int n, double mass, const AtomParams& params);
DipoleElement circular_dipole(int n, const AtomParams& params);

namespace detail {

// log of the positive magnitude of the circular state (phase is (n-1)*phi):
//   ln B_n + (n-1) (ln r + ln sin_theta) - r/(n a)
// Returns -inf where the amplitude vanishes.
double circular_log_amplitude(int n, double r, double sin_theta, double a);

// ln of the circular normalization constant B_n for length scale a.
double circular_log_norm(int n, double a);

} // namespace detail

} // namespace hatom

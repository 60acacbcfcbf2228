#pragma once

// Test-side oracles. Everything here is computed independently of the
// library code paths it is used to check: finite-difference eigenvalues on a
// log grid, direct quadrature of evaluated wave functions, closed-form free
// Gaussians, high-order finite-difference derivatives.

#include <complex>
#include <functional>
#include <vector>

#include "hatom/units.hpp"

namespace oracles {

// n-th Coulomb level (E_{n,l} for the given l) of a particle of mass `mass`,
// from a symmetric finite-difference discretization of the radial equation on
// a logarithmic grid r = e^y. Accurate to ~1e-7 hartree for low n.
// y_min deep enough that the l=0 boundary value e^{y_min/2} is negligible.
double coulomb_level_fd(int n, int l, double mass, int grid_points = 3000,
                        double y_min = -20.0, double y_max = 8.0);

// <u_a|u_b> over r and theta by Gauss quadrature of the evaluated functions
// (phi handled analytically; both states must share m). The callables take
// (r, theta) and return the amplitude at phi = 0.
double overlap_rtheta(const std::function<double(double, double)>& ua,
                      const std::function<double(double, double)>& ub,
                      double radial_scale, int radial_nodes, int theta_nodes);

// <u_a| r sin(theta) cos(phi) |u_b> for adjacent-m states (phi integral = pi).
double dipole_rtheta(const std::function<double(double, double)>& ua,
                     const std::function<double(double, double)>& ub,
                     double radial_scale, int radial_nodes, int theta_nodes);

// argmax of f over [lo, hi]: dense scan plus parabolic refinement.
double argmax_scan(const std::function<double(double)>& f, double lo, double hi,
                   int samples = 200000);

// Exact free-particle Gaussian packet (mass m):
//   psi(x,0) = (2 pi s0^2)^{-1/4} exp(-(x-x0)^2/(4 s0^2) + i k0 (x-x0))
std::complex<double> free_gaussian(double x, double t, double x0, double s0, double k0,
                                   double mass);

// Fourth-order centered first derivative (5-point stencil).
double deriv5(const std::function<double(double)>& f, double x, double h);

} // namespace oracles

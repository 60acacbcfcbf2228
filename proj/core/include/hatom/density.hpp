#pragma once

// Orbital-plane densities, Gaussian coarse-graining, and the complex reduced
// wave functions obtained by contracting the relative motion with the
// center-of-mass packet. Grids are square, centered on the origin, and used
// for figures and cross-checks only; acceptance-grade observables stay
// analytic (see packet.hpp).

#include <complex>
#include <functional>
#include <vector>

#include "hatom/packet.hpp"

namespace hatom {

struct PlaneGrid {
    int n = 256;              // points per axis
    double half_width = 1.0;  // grid spans [-half_width, half_width)

    double dx() const { return 2.0 * half_width / n; }
    double coord(int i) const { return -half_width + (i + 0.5) * dx(); } // cell centers
};

struct PlanarDensity {
    PlaneGrid grid{};
    std::vector<double> values; // row-major [iy * n + ix], non-negative

    double integral() const; // sum * dx^2
};

struct PlanarField {
    PlaneGrid grid{};
    std::vector<std::complex<double>> values;

    double norm2_plane() const; // integral of |field|^2 over the plane
};

// |psi_r(x, y, z=0, t)|^2 of the packet from the coefficient expansion.
// Requires grid.half_width >= 1.5 n_bar^2 * (packet length scale).
PlanarDensity sample_density_plane(const CircularPacket& packet, double t, const PlaneGrid& grid);

// Complex packet amplitude at a 3-d point (used by the reduced functions).
std::complex<double> packet_amplitude(const CircularPacket& packet, double t,
                                      double x, double y, double z);

// Convolution with an isotropic Gaussian of std `kernel_width`, evaluated
// spectrally with zero padding of at least 4 kernel widths (no wrap-around).
// kernel_width == 0 is the identity; kernel wider than the grid extent is
// rejected.
PlanarDensity coarse_grain(const PlanarDensity& density, double kernel_width);

// Kernel widths of the single-particle densities for a center-of-mass
// Gaussian of width sigma: the electron is barely blurred, the proton by the
// mass ratio more.
inline double electron_kernel_width(const AtomParams& p, double sigma) { return p.M / p.m_p * sigma; }
inline double proton_kernel_width(const AtomParams& p, double sigma) { return p.M / p.m_e * sigma; }

enum class Particle { electron, proton };

// Generic coarse-graining contraction
//   out(rho) = int psi_rel(x) psi_c(rho - kappa x) d^3x,  rho in the z=0 plane,
// with a signed scale factor kappa. The z integral is contracted by
// quadrature (z_points nodes), the in-plane part by padded FFT convolution.
PlanarField reduced_field(const std::function<std::complex<double>(double, double, double)>& psi_rel,
                          const ComState& com, double kappa, const PlaneGrid& grid,
                          const AtomParams& params, int z_points, double z_half_extent);

// Reduced wave functions of Eq.-style coarse-graining:
//   electron: kappa = +m_p/M, proton: kappa = -m_e/M
// (the proton kernel argument is r_p + (m_e/M) x under r = r_e - r_p).
// |reduced|^2 is NOT the coarse-grained density; both exist on purpose.
PlanarField reduced_wavefunction(const CircularPacket& packet, const ComState& com,
                                 Particle which, const PlaneGrid& grid, double t,
                                 int z_points = 65);

} // namespace hatom

#pragma once

// Circular Rydberg wave packets: Gaussian superpositions of circular
// eigenstates and their analytically evaluated observables. All pass/fail
// grade quantities (centers, momenta, time scales) come from coefficient
// sums, never from grids.

#include <complex>
#include <utility>
#include <vector>

#include "hatom/basis.hpp"
#include "hatom/geometry.hpp"
#include "hatom/units.hpp"

namespace hatom {

struct PacketSpec {
    double n_bar = 60.0;   // mean principal quantum number
    double sigma_n = 0.8;  // width of the Gaussian coefficient profile
    int n_lo = 0;          // inclusive window; 0,0 requests the default window
    int n_hi = 0;
    double sigma_com = 10.0; // center-of-mass Gaussian width, Bohr radii

    bool has_window() const { return n_lo > 0 && n_hi > 0; }
};

// Default window [max(1, ceil(n_bar - 8 sigma)), floor(n_bar + 8 sigma)]:
// the 8-sigma amplitude cut keeps the truncated weight below 1e-12.
std::pair<int, int> default_window(const PacketSpec& spec);

struct CircularPacket {
    std::vector<std::complex<double>> coeffs; // coeffs[i] belongs to n = n_lo + i
    int n_lo = 1;
    double mass = 1.0; // orbiting mass: params.mu for the relative motion
    AtomParams params{};
    PacketSpec spec{};

    int n_hi() const { return n_lo + static_cast<int>(coeffs.size()) - 1; }
    double norm2() const;
};

struct TimeScales {
    double t_kepler = 0.0; // classical orbit period at n_bar
    double t_spread = 0.0; // measured delocalization time (NaN when not reached)
    double t_rev = 0.0;    // (n_bar/3) t_kepler packet relocalization time
};

// -- construction and evolution ----------------------------------------------

// Gaussian coefficient profile c_n ~ exp(-(n - n_bar)^2 / (4 sigma_n^2)),
// real positive, renormalized. Throws std::invalid_argument when the spec is
// invalid, the window truncates more than 1e-12 of the weight, or clipping at
// n = 1 discards more than 1e-6 of it (packet not representable).
CircularPacket build_packet(const PacketSpec& spec, const AtomParams& params);

// Same packet but with an explicit orbiting mass (the mean-field electron
// uses mass = m_e; the relative motion uses mu).
CircularPacket build_packet_mass(const PacketSpec& spec, const AtomParams& params, double mass);

// Stationary-state phases c_n(t) = c_n exp(-i E_n t / hbar); norm exact.
CircularPacket evolve_coeffs(const CircularPacket& packet, double t);

// -- observables --------------------------------------------------------------

// Precomputed energy and dipole tables for fast dense time scans.
struct PacketTables {
    std::vector<double> energy; // E_{n_lo + i}
    std::vector<double> dipole; // d_i = <u_{n_lo+i}| x |u_{n_lo+i+1}>

    explicit PacketTables(const CircularPacket& packet);

    Vec3 center(const CircularPacket& packet, double t) const;
    Vec3 momentum(const CircularPacket& packet, double t) const;
    double autocorrelation(const CircularPacket& packet, double t) const;
};

// <r>(t) = 2 Re sum_n c_n^*(t) c_{n+1}(t) d_n (x_hat - i y_hat reading);
// lies in the orbital plane, points along +x at t = 0.
Vec3 relative_center(const CircularPacket& packet, double t);

// <p>(t) = mass * d<r>/dt, differentiated analytically through the phases.
Vec3 relative_momentum(const CircularPacket& packet, double t);

// |sum_n |c_n|^2 exp(-i E_n t)|^2, the standard revival diagnostic.
double autocorrelation(const CircularPacket& packet, double t);

// t_kepler = 2 pi n_bar^3 / mu, t_rev = (n_bar/3) t_kepler; t_spread is
// measured: first t where |<r>| < 0.1 |<r>(0)| sustained for one t_kepler.
TimeScales time_scales(const PacketSpec& spec, const AtomParams& params);

// <r_e> = (m_p/M) <r>, <r_p> = -(m_e/M) <r> in the atom-at-rest frame.
std::pair<Vec3, Vec3> particle_centers(const Vec3& rel_center, const AtomParams& params);

// -- center of mass ------------------------------------------------------------

enum class ComMode { frozen, free_spreading };

struct ComState {
    double sigma0 = 10.0;
    double time = 0.0;
    ComMode mode = ComMode::frozen;
    Vec3 drift_momentum{};
};

// |psi_c|^2 width per axis at com.time: sigma0 in frozen mode,
// sigma0 sqrt(1 + (hbar t / (2 M sigma0^2))^2) in free mode.
double com_width(const ComState& com, const AtomParams& params);

// Complex center-of-mass amplitude at R (3-d product of free 1-d Gaussians).
std::complex<double> com_amplitude(const ComState& com, const Vec3& R, const AtomParams& params);

} // namespace hatom

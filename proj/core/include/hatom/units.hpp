#pragma once

// Hartree atomic units throughout: hbar = m_e = a_B = e = 1.
// Energies in hartree, lengths in Bohr radii, times in atomic time units.
// The only free parameter of the two-particle problem is the mass ratio.

namespace hatom {

struct AtomParams {
    double m_e;   // electron mass (1 in atomic units)
    double m_p;   // "proton" mass; mass_ratio * m_e
    double M;     // total mass m_e + m_p
    double mu;    // reduced mass m_e*m_p/M
    double a_B;   // Bohr radius (1 in atomic units)
    double hbar;  // action quantum (1 in atomic units)
};

// CODATA proton/electron mass ratio.
inline constexpr double kPhysicalMassRatio = 1836.15267343;

// Builds the parameter set for a two-body "hydrogen" with the given
// proton/electron mass ratio. Throws std::invalid_argument for
// non-positive or non-finite ratios.
AtomParams make_params(double mass_ratio);

// Length scale of the Coulomb bound states for an orbiting particle of the
// given mass: a = a_B * m_e / mass. For the relative motion pass params.mu,
// for a mean-field electron around a clamped nucleus pass params.m_e.
inline double bohr_scale(const AtomParams& p, double mass) {
    return p.a_B * p.m_e / mass;
}

// SI conversion factors (CODATA 2018).
inline constexpr double kBohrInMeters = 5.29177210903e-11;
inline constexpr double kHartreeInJoules = 4.3597447222071e-18;
inline constexpr double kAtomicTimeInSeconds = 2.4188843265857e-17;

inline double length_to_si(double bohr) { return bohr * kBohrInMeters; }
inline double length_from_si(double meters) { return meters / kBohrInMeters; }
inline double energy_to_si(double hartree) { return hartree * kHartreeInJoules; }
inline double energy_from_si(double joules) { return joules / kHartreeInJoules; }
inline double time_to_si(double atu) { return atu * kAtomicTimeInSeconds; }
inline double time_from_si(double seconds) { return seconds / kAtomicTimeInSeconds; }

} // namespace hatom

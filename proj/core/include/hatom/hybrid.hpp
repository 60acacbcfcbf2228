#pragma once

// Mean-field hybrid dynamics: a quantum electron coupled to a classical
// proton under a single scalar Hamiltonian
//   H = <phi_e| p^2/(2 m_e) + V(|r_e - r_p|) |phi_e> + p_p^2/(2 m_p).
//
// Two force laws are implemented and never silently mixed:
//  - adiabatic_gradient: the gradient of the population-weighted
//    eigen-energies in the r_p-attached basis. The hydrogen spectrum does not
//    depend on the proton position, so this force vanishes identically and
//    the proton moves like a free particle.
//  - ehrenfest: -<grad_{r_p} V> moved inside the bra-ket, which restores
//    total momentum conservation.
//
// The 3-d hydrogen scenario propagates in the adiabatic coefficient
// representation (the Ehrenfest force exists there as an instantaneous
// functional only); self-consistent Ehrenfest time evolution runs on 1-d
// soft-core grids.

#include <complex>
#include <memory>
#include <variant>
#include <vector>

#include "hatom/packet.hpp"
#include "hatom/softcore.hpp"
#include "hatom/trajectory.hpp"

namespace hatom {

enum class ForceLaw { adiabatic_gradient, ehrenfest };

// Electron in the circular-state basis rigidly attached to r_p, orbiting
// mass m_e exactly as the hybrid Hamiltonian is written.
struct AdiabaticElectron {
    std::vector<std::complex<double>> coeffs; // coeffs[i] for n = n_lo + i
    int n_lo = 1;
    double mass = 1.0;
};

// Electron amplitudes on a 1-d position grid (soft-core scenarios).
struct GridElectron1D {
    CVec psi;
    Grid1D grid{};
    double mass = 1.0;
};

struct HybridState {
    std::variant<AdiabaticElectron, GridElectron1D> electron;
    Vec3 r_p{};
    Vec3 p_p{};
    double t = 0.0;

    bool is_adiabatic() const { return std::holds_alternative<AdiabaticElectron>(electron); }
};

double electron_norm2(const HybridState& state);

// Circular packet displaced to the proton position; electron mass m_e.
HybridState init_hybrid(const PacketSpec& spec, const Vec3& r_p0, const Vec3& p_p0,
                        const AtomParams& params);

// Adiabatic-representation energy sum_n |a_n|^2 E_n + p_p^2/(2 m_p); it does
// not reference r_p at all. Grid states are scored by Ehrenfest1D::energy.
double hybrid_energy(const HybridState& state, const AtomParams& params);

// -grad_{r_p} sum |a_n|^2 E_n by symmetric finite differences of
// hybrid_energy under a rigid basis shift; asserts |F| < 1e-10 hartree/a_B
// (the spectrum is independent of r_p). Rejects grid states.
Vec3 force_adiabatic(const HybridState& state, const AtomParams& params);

// +<phi_e| (r_e - r_p)/|r_e - r_p|^3 |phi_e> evaluated by Gauss-Laguerre x
// Gauss-Legendre quadrature over the coefficient-expanded density. This is
// exactly the term the adiabatic reading discards.
Vec3 force_ehrenfest(const HybridState& state, const AtomParams& params);

// Same functional with the electron cloud displaced by `delta` from the
// proton (3-d quadrature). Throws std::domain_error when the density at the
// Coulomb singularity makes the quadrature unreliable.
Vec3 force_ehrenfest_displaced(const HybridState& state, const Vec3& delta,
                               const AtomParams& params);

// p_p + <p_e>; the electron part by analytic phase differentiation in the
// adiabatic representation, spectrally on grids.
Vec3 total_momentum(const HybridState& state, const AtomParams& params);

// One symplectic split step: half-kick p_p, drift r_p, electron propagation
// over dt, half-kick p_p. Adiabatic representation only (grid states step
// through Ehrenfest1D); law must be adiabatic_gradient for 3-d evolution.
void step(HybridState& state, double dt, ForceLaw law, const AtomParams& params);

struct HybridScenario {
    PacketSpec spec{};
    Vec3 r_p0{};
    Vec3 p_p0{};
    double horizon_kepler = 10.0; // run length in units of t_kepler
    double dt = 0.0;              // 0 selects t_kepler/4096
    int stride = 64;
};

// Fixed-step 3-d adiabatic-representation run with sampling.
TrajectoryRecord run_hybrid(const HybridScenario& scenario, ForceLaw law,
                            const AtomParams& params);

// ---------------------------------------------------------------------------
// Self-consistent 1-d Ehrenfest propagation on the soft-core potential.
// The kick-drift-kick step pairs every proton momentum kick with the
// electron potential phase applied at the same proton position and electron
// density, so p_p + <p_e> is conserved to roundoff.

class Ehrenfest1D {
public:
    Ehrenfest1D(const Grid1D& grid, SoftCorePotential pot, double m_electron, double m_proton);

    void step(HybridState& state, double dt) const;
    // Triple-jump composition of the same step (4th order), for tight
    // energy-conservation budgets.
    void step4(HybridState& state, double dt) const;

    double energy(const HybridState& state) const;
    double force(const HybridState& state) const; // Ehrenfest force on the proton
    double electron_momentum(const HybridState& state) const;
    double total_momentum(const HybridState& state) const;

    const Grid1D& grid() const { return grid_; }
    const SoftCorePotential& potential() const { return pot_; }
    double electron_mass() const { return me_; }
    double proton_mass() const { return mp_; }

private:
    Grid1D grid_;
    SoftCorePotential pot_;
    double me_;
    double mp_;
    std::vector<double> k_;
    std::shared_ptr<fft::C2C> plan_;
};

enum class Electron1DInit {
    ground_displaced,        // ground state of the electron-mass well, displaced
    relative_ground,         // reduced-mass ground state (two-body comparisons)
    relative_superposition01 // (chi_0 + chi_1)/sqrt(2), oscillating dipole
};

struct Hybrid1DScenario {
    Grid1D grid{512, 40.0};
    double softening = 1.0;
    double mass_ratio = 100.0;
    Electron1DInit init = Electron1DInit::ground_displaced;
    double displacement = 1.0; // for ground_displaced
    double r_p0 = 0.0;
    double p_p0 = 0.0;
    double total_time = 160.0;
    double dt = 0.002;
    int stride = 100;
    bool fourth_order = false;
    bool record_density = false;
    int adiabatic_states = 24; // attached-basis size for the adiabatic law
};

struct Hybrid1DRun {
    Hybrid1DScenario scenario{};
    ForceLaw law = ForceLaw::ehrenfest;
    TrajectoryRecord record;
    std::vector<std::vector<double>> electron_density; // at sample times
};

// 1-d counterpart of run_hybrid: law=ehrenfest propagates the grid state
// self-consistently, law=adiabatic_gradient expands the electron in the
// numerically computed soft-core eigenbasis attached to r_p (free proton,
// frozen populations).
Hybrid1DRun run_hybrid_1d(const Hybrid1DScenario& scenario, ForceLaw law);

// Initial electron wave function for a 1-d scenario (shared with the oracle
// so comparisons start from identical states).
CVec initial_electron_1d(const Hybrid1DScenario& scenario);

} // namespace hatom

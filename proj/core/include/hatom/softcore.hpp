#pragma once

// One-dimensional soft-core Coulomb machinery shared by the two-body oracle
// and the 1-d mean-field runs: V_s(x) = -1/sqrt(x^2 + s^2), split-step
// propagation, imaginary-time relaxation, and a dense spectral eigenbasis.

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hatom/fft.hpp"

namespace hatom {

struct SoftCorePotential {
    double s = 1.0; // softening length, Bohr radii

    double operator()(double x) const { return -1.0 / std::sqrt(x * x + s * s); }
    double deriv(double x) const {
        const double d2 = x * x + s * s;
        return x / (d2 * std::sqrt(d2));
    }
};

struct Grid1D {
    int n = 512;
    double half_width = 40.0;

    double dx() const { return 2.0 * half_width / n; }
    double x(int i) const { return -half_width + i * dx(); }
};

using CVec = std::vector<std::complex<double>>;

// Split-step propagator for one particle of mass m on a periodic grid.
class Split1D {
public:
    Split1D(const Grid1D& grid, double mass, std::vector<double> potential);

    // Strang step: half potential phase, full spectral kinetic, half potential.
    void step(CVec& psi, double dt) const;

    // Imaginary-time variant (norm not preserved; caller renormalizes).
    void step_imaginary(CVec& psi, double dtau) const;

    double kinetic_energy(const CVec& psi) const;     // <T>/<1>
    double potential_energy(const CVec& psi) const;   // <V>/<1>
    double energy(const CVec& psi) const { return kinetic_energy(psi) + potential_energy(psi); }
    double momentum(const CVec& psi) const;           // <p>/<1>, spectral

    const Grid1D& grid() const { return grid_; }
    const std::vector<double>& potential() const { return v_; }
    double mass() const { return mass_; }

private:
    Grid1D grid_;
    double mass_;
    std::vector<double> v_;
    std::vector<double> k_;
    std::shared_ptr<fft::C2C> plan_;
};

double norm2_grid(const CVec& psi, double dx);
void normalize_grid(CVec& psi, double dx);
std::complex<double> inner_grid(const CVec& a, const CVec& b, double dx);

// Imaginary-time ground state; converged when the energy changes by less
// than `tol` per step. Returns the normalized state and its energy.
struct RelaxResult {
    CVec psi;
    double energy;
    int steps;
};
RelaxResult relax_ground(const Split1D& prop, double dtau = 0.05, double tol = 1e-10,
                         int max_steps = 200000);

// First excited state by the same relaxation with the ground state projected
// out after every step.
RelaxResult relax_excited(const Split1D& prop, const CVec& ground, double dtau = 0.05,
                          double tol = 1e-10, int max_steps = 200000);

// Dense Hamiltonian with the same spectral kinetic operator the propagator
// uses; basis columns are dx-orthonormal. Used for the attached adiabatic
// basis of the 1-d comparison runs and for cross-representation checks.
struct SoftCoreBasis {
    Eigen::MatrixXd states;        // column j = eigenstate j on the grid
    Eigen::VectorXd energies;
    Grid1D grid;

    // dx-weighted projection coefficients of psi onto the first `count` states
    CVec project(const CVec& psi, int count) const;
};
SoftCoreBasis softcore_eigenbasis(const Grid1D& grid, double mass,
                                  const std::vector<double>& potential, int count);

std::vector<double> sample_potential(const Grid1D& grid, const SoftCorePotential& pot,
                                     double center = 0.0);

} // namespace hatom

#pragma once

// Exact two-body quantum solver: one spatial dimension per particle, soft-core
// interaction V_s(x_e - x_p) = -1/sqrt((x_e-x_p)^2 + s^2), split-operator
// propagation on an (x_e, x_p) grid. Ground truth for proton motion, momentum
// conservation, coarse-graining relations, and entanglement diagnostics.

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hatom/hybrid.hpp"
#include "hatom/softcore.hpp"
#include "hatom/trajectory.hpp"
#include "hatom/units.hpp"

namespace hatom {

struct TwoBodyField {
    Grid1D grid{};   // same axis for x_e and x_p
    CVec psi;        // row-major psi[ie * n + ip]
    double softening = 1.0;
    double t = 0.0;
};

enum class RelInit { ground, superposition01, displaced_gaussian };

struct OracleScenario {
    double mass_ratio = 100.0;
    double softening = 1.0;
    double box_half_width = 40.0;
    int grid_points = 512;
    RelInit initial_relative = RelInit::superposition01;
    double gaussian_center = 0.0; // displaced_gaussian parameters
    double gaussian_width = 1.0;
    double com_width = 5.0;       // |psi_c|^2 std per axis
    double com_center = 0.0;
    double boost = 0.0;           // total momentum K imprinted as exp(i K R)
    double total_time = 35.0;
    double dt = 0.05;
    int stride = 10;
    int purity_every = 5;         // purity sampled every k-th record
    bool record_density = true;
};

struct Marginals {
    std::vector<double> electron;
    std::vector<double> proton;
    double x_e = 0.0;
    double x_p = 0.0;
};

class TwoBodyPropagator {
public:
    explicit TwoBodyPropagator(const OracleScenario& scenario);

    const OracleScenario& scenario() const { return scn_; }
    const AtomParams& params() const { return params_; }
    const Grid1D& grid() const { return grid_; }

    // Initial product state chi(x_e - x_p) * Phi(R), normalized on the grid.
    // (Non-const: records the normalization used by assemble_product.)
    TwoBodyField initial();

    // One Strang step (half potential, spectral kinetic, half potential).
    // Aborts with std::runtime_error when more than 1e-6 of the density sits
    // within 8 cells of any box edge.
    void step(TwoBodyField& field, double dt) const;

    double norm2(const TwoBodyField& field) const;
    Marginals marginals(const TwoBodyField& field) const;
    std::pair<double, double> momenta(const TwoBodyField& field) const; // (<p_e>, <p_p>)
    double total_momentum(const TwoBodyField& field) const;
    double energy(const TwoBodyField& field) const;

    // Tr(rho_p^2) of the proton reduced density operator (partial trace over
    // the electron by discretized kernel contraction).
    double proton_purity(const TwoBodyField& field) const;

    // Relative factor evolved independently on the doubled grid (Eq.-(5)
    // analogue) and the analytic free center-of-mass factor (Eq.-(6)
    // analogue); assemble_product recombines them into a two-body field for
    // the separability cross-check.
    CVec relative_evolved(double time) const;
    std::complex<double> com_value(double R, double time) const;
    TwoBodyField assemble_product(const CVec& chi_ext, double time) const;
    const CVec& relative_initial() const { return chi0_; }
    const Grid1D& relative_grid() const { return rel_grid_; }

private:
    OracleScenario scn_;
    AtomParams params_;
    Grid1D grid_;
    Grid1D rel_grid_; // doubled extent, same spacing; holds the relative factor
    CVec chi0_;
    double product_norm_ = 1.0;
    std::vector<double> v_;        // V(x_e - x_p) on the 2-d grid
    CVec kinetic_phase_;           // e^{-i (k_e^2/2m_e + k_p^2/2m_p) dt}
    CVec half_potential_phase_;    // e^{-i V dt / 2}
    double planned_dt_ = 0.0;
    std::shared_ptr<fft::C2C> plan2d_;
    std::shared_ptr<Split1D> rel_prop_;
};

struct OracleRun {
    OracleScenario scenario{};
    TrajectoryRecord record;                           // x components used
    std::vector<double> purity_t;
    std::vector<double> purity;
    std::vector<std::vector<double>> electron_density; // marginals at samples
    Grid1D grid{};
};

OracleRun run_oracle(const OracleScenario& scenario);

// ---------------------------------------------------------------------------

struct ComparisonRow {
    std::string quantity;
    std::string full_quantum;
    std::string hybrid;
};

struct ComparisonReport {
    double proton_discrepancy_max = 0.0;
    double proton_discrepancy_rms = 0.0;
    double oracle_proton_amplitude = 0.0;
    double hybrid_proton_amplitude = 0.0;
    double discrepancy_ratio = 0.0;
    double oracle_momentum_drift = 0.0;
    double hybrid_momentum_drift = 0.0;
    bool oracle_momentum_conserved = false;
    bool hybrid_momentum_conserved = false;
    double overlap_min = 0.0;
    double overlap_mean = 0.0;
    std::vector<double> t;
    std::vector<double> density_overlap; // Bhattacharyya coefficient
    std::array<ComparisonRow, 3> table;  // electron / proton / total momentum
};

// Requires matching potential, masses, grids, sample times, and initial
// conditions (hybrid proton seeded at the oracle's <x_p>(0), <p_p>(0));
// mismatches are rejected with std::invalid_argument.
ComparisonReport compare_with_hybrid(const OracleRun& oracle, const Hybrid1DRun& hybrid);

} // namespace hatom

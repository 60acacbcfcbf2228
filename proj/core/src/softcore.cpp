#include "hatom/softcore.hpp"

#include <cmath>
#include <stdexcept>

namespace hatom {

Split1D::Split1D(const Grid1D& grid, double mass, std::vector<double> potential)
    : grid_(grid), mass_(mass), v_(std::move(potential)) {
    if (static_cast<int>(v_.size()) != grid_.n)
        throw std::invalid_argument("Split1D: potential table size mismatch");
    if (!(mass_ > 0.0)) throw std::invalid_argument("Split1D: mass must be > 0");
    k_ = fft::wavenumbers(grid_.n, grid_.dx());
    plan_ = std::make_shared<fft::C2C>(grid_.n);
}

void Split1D::step(CVec& psi, double dt) const {
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) {
        const double ph = -0.5 * v_[i] * dt;
        psi[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    plan_->forward(psi.data());
    for (int i = 0; i < n; ++i) {
        const double ph = -0.5 * k_[i] * k_[i] / mass_ * dt;
        psi[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    plan_->inverse(psi.data());
    for (int i = 0; i < n; ++i) {
        const double ph = -0.5 * v_[i] * dt;
        psi[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
}

void Split1D::step_imaginary(CVec& psi, double dtau) const {
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) psi[i] *= std::exp(-0.5 * v_[i] * dtau);
    plan_->forward(psi.data());
    for (int i = 0; i < n; ++i) psi[i] *= std::exp(-0.5 * k_[i] * k_[i] / mass_ * dtau);
    plan_->inverse(psi.data());
    for (int i = 0; i < n; ++i) psi[i] *= std::exp(-0.5 * v_[i] * dtau);
}

double Split1D::kinetic_energy(const CVec& psi) const {
    CVec hat = psi;
    plan_->forward(hat.data());
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double p2 = std::norm(hat[i]);
        num += 0.5 * k_[i] * k_[i] / mass_ * p2;
        den += p2;
    }
    return num / den;
}

double Split1D::potential_energy(const CVec& psi) const {
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double p2 = std::norm(psi[i]);
        num += v_[i] * p2;
        den += p2;
    }
    return num / den;
}

double Split1D::momentum(const CVec& psi) const {
    CVec hat = psi;
    plan_->forward(hat.data());
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double p2 = std::norm(hat[i]);
        num += k_[i] * p2;
        den += p2;
    }
    return num / den;
}

double norm2_grid(const CVec& psi, double dx) {
    double s = 0.0;
    for (const auto& c : psi) s += std::norm(c);
    return s * dx;
}

void normalize_grid(CVec& psi, double dx) {
    const double n2 = norm2_grid(psi, dx);
    if (n2 <= 0.0) throw std::runtime_error("normalize_grid: zero state");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& c : psi) c *= s;
}

std::complex<double> inner_grid(const CVec& a, const CVec& b, double dx) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s * dx;
}

namespace {

RelaxResult relax_impl(const Split1D& prop, const CVec* orthogonal_to, CVec psi,
                       double dtau, double tol, int max_steps) {
    const double dx = prop.grid().dx();
    normalize_grid(psi, dx);
    double e_prev = prop.energy(psi);
    for (int step = 1; step <= max_steps; ++step) {
        prop.step_imaginary(psi, dtau);
        if (orthogonal_to) {
            const std::complex<double> c = inner_grid(*orthogonal_to, psi, dx);
            for (std::size_t i = 0; i < psi.size(); ++i) psi[i] -= c * (*orthogonal_to)[i];
        }
        normalize_grid(psi, dx);
        const double e = prop.energy(psi);
        if (std::abs(e - e_prev) < tol) {
            return RelaxResult{std::move(psi), e, step};
        }
        e_prev = e;
    }
    throw std::runtime_error("imaginary-time relaxation did not converge");
}

} // namespace

RelaxResult relax_ground(const Split1D& prop, double dtau, double tol, int max_steps) {
    const Grid1D& g = prop.grid();
    CVec psi(g.n);
    // Broad nodeless seed overlapping the ground state
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        psi[i] = std::exp(-x * x / 16.0);
    }
    return relax_impl(prop, nullptr, std::move(psi), dtau, tol, max_steps);
}

RelaxResult relax_excited(const Split1D& prop, const CVec& ground, double dtau, double tol,
                          int max_steps) {
    const Grid1D& g = prop.grid();
    CVec psi(g.n);
    // Odd seed orthogonal to the even ground state
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        psi[i] = x * std::exp(-x * x / 16.0);
    }
    return relax_impl(prop, &ground, std::move(psi), dtau, tol, max_steps);
}

SoftCoreBasis softcore_eigenbasis(const Grid1D& grid, double mass,
                                  const std::vector<double>& potential, int count) {
    const int n = grid.n;
    if (count < 1 || count > n) throw std::invalid_argument("softcore_eigenbasis: bad count");

    // Circulant spectral kinetic operator: first row from the inverse DFT of
    // k^2/(2m), so the dense Hamiltonian matches Split1D's discretization.
    const std::vector<double> k = fft::wavenumbers(n, grid.dx());
    CVec row(n);
    for (int i = 0; i < n; ++i) row[i] = 0.5 * k[i] * k[i] / mass;
    fft::C2C plan(n);
    plan.inverse(row.data());

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int d = (i - j + n) % n;
            H(i, j) = row[d].real();
        }
        H(i, i) += potential[i];
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    SoftCoreBasis basis;
    basis.grid = grid;
    basis.energies = es.eigenvalues().head(count);
    basis.states = es.eigenvectors().leftCols(count);
    // dx-orthonormal columns with a positive-peak sign convention
    const double s = 1.0 / std::sqrt(grid.dx());
    for (int j = 0; j < count; ++j) {
        Eigen::VectorXd col = basis.states.col(j) * s;
        int imax = 0;
        col.cwiseAbs().maxCoeff(&imax);
        if (col(imax) < 0.0) col = -col;
        basis.states.col(j) = col;
    }
    return basis;
}

CVec SoftCoreBasis::project(const CVec& psi, int count) const {
    CVec coeffs(count, {0.0, 0.0});
    const double dx = grid.dx();
    for (int j = 0; j < count; ++j) {
        std::complex<double> s{0.0, 0.0};
        for (int i = 0; i < grid.n; ++i) s += states(i, j) * psi[i];
        coeffs[j] = s * dx;
    }
    return coeffs;
}

std::vector<double> sample_potential(const Grid1D& grid, const SoftCorePotential& pot,
                                     double center) {
    std::vector<double> v(grid.n);
    for (int i = 0; i < grid.n; ++i) v[i] = pot(grid.x(i) - center);
    return v;
}

} // namespace hatom

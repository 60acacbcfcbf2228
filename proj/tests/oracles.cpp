#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "hatom/quadrature.hpp"

namespace oracles {

namespace {

double coulomb_level_fd_once(int n, int l, double mass, int grid_points, double y_min,
                             double y_max) {
    // r = e^y, u(r) = e^{y/2} v(y):
    //   -(1/2m)(v'' - v/4) + e^{2y} (V(e^y) - E) v = 0
    // i.e. A v = E B v with diagonal B = e^{2y}; symmetrized by B^{-1/2} A B^{-1/2},
    // which stays tridiagonal because B is diagonal.
    const int N = grid_points;
    const double h = (y_max - y_min) / (N + 1);
    Eigen::VectorXd diag(N), sub(N - 1), b(N);
    for (int i = 0; i < N; ++i) {
        const double y = y_min + (i + 1) * h;
        const double r = std::exp(y);
        const double v_eff = -1.0 / r + l * (l + 1.0) / (2.0 * mass * r * r);
        diag(i) = (1.0 / (2.0 * mass)) * (2.0 / (h * h) + 0.25) + r * r * v_eff;
        b(i) = r * r;
    }
    for (int i = 0; i + 1 < N; ++i) sub(i) = -(1.0 / (2.0 * mass)) / (h * h);
    for (int i = 0; i < N; ++i) diag(i) /= b(i);
    for (int i = 0; i + 1 < N; ++i) sub(i) /= std::sqrt(b(i) * b(i + 1));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const int index = n - l - 1; // bound levels below zero, sorted ascending
    return es.eigenvalues()(index);
}

} // namespace

double coulomb_level_fd(int n, int l, double mass, int grid_points, double y_min, double y_max) {
    if (n < 1 || l < 0 || l > n - 1) throw std::invalid_argument("coulomb_level_fd: bad (n, l)");
    // second-order scheme; h -> h/2 Richardson extrapolation removes the h^2 term
    const double coarse = coulomb_level_fd_once(n, l, mass, grid_points, y_min, y_max);
    const double fine = coulomb_level_fd_once(n, l, mass, 2 * grid_points + 1, y_min, y_max);
    return (4.0 * fine - coarse) / 3.0;
}

double overlap_rtheta(const std::function<double(double, double)>& ua,
                      const std::function<double(double, double)>& ub,
                      double radial_scale, int radial_nodes, int theta_nodes) {
    const auto rr = hatom::quad::gauss_laguerre(radial_nodes);
    const auto tr = hatom::quad::gauss_legendre(theta_nodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < rr.x.size(); ++i) {
        const double r = radial_scale * rr.x[i];
        const double wr = std::exp(rr.logw[i] + rr.x[i]) * radial_scale;
        double ts = 0.0;
        for (std::size_t j = 0; j < tr.x.size(); ++j) {
            const double theta = 0.5 * M_PI * (tr.x[j] + 1.0);
            ts += 0.5 * M_PI * tr.w[j] * ua(r, theta) * ub(r, theta) * std::sin(theta);
        }
        sum += wr * r * r * ts;
    }
    return 2.0 * M_PI * sum;
}

double dipole_rtheta(const std::function<double(double, double)>& ua,
                     const std::function<double(double, double)>& ub,
                     double radial_scale, int radial_nodes, int theta_nodes) {
    const auto rr = hatom::quad::gauss_laguerre(radial_nodes);
    const auto tr = hatom::quad::gauss_legendre(theta_nodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < rr.x.size(); ++i) {
        const double r = radial_scale * rr.x[i];
        const double wr = std::exp(rr.logw[i] + rr.x[i]) * radial_scale;
        double ts = 0.0;
        for (std::size_t j = 0; j < tr.x.size(); ++j) {
            const double theta = 0.5 * M_PI * (tr.x[j] + 1.0);
            const double st = std::sin(theta);
            ts += 0.5 * M_PI * tr.w[j] * ua(r, theta) * ub(r, theta) * st * st;
        }
        sum += wr * r * r * r * ts;
    }
    return M_PI * sum;
}

double argmax_scan(const std::function<double(double)>& f, double lo, double hi, int samples) {
    double best_x = lo;
    double best = f(lo);
    const double h = (hi - lo) / samples;
    for (int i = 1; i <= samples; ++i) {
        const double x = lo + i * h;
        const double v = f(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    // parabolic refinement around the best sample
    const double fm = f(best_x - h), f0 = f(best_x), fp = f(best_x + h);
    const double denom = fm - 2.0 * f0 + fp;
    if (denom < 0.0) best_x += 0.5 * h * (fm - fp) / denom;
    return best_x;
}

std::complex<double> free_gaussian(double x, double t, double x0, double s0, double k0,
                                   double mass) {
    const std::complex<double> g{1.0, t / (2.0 * mass * s0 * s0)};
    const double v = k0 / mass;
    const double xc = x - x0 - v * t;
    const std::complex<double> arg =
        -xc * xc / (4.0 * s0 * s0 * g) +
        std::complex<double>(0.0, k0 * (x - x0) - k0 * k0 * t / (2.0 * mass));
    return std::pow(2.0 * M_PI * s0 * s0, -0.25) / std::sqrt(g) * std::exp(arg);
}

double deriv5(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

} // namespace oracles

#include "hatom/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace hatom::quad {

namespace {

Eigen::VectorXd jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

// log |L_{k}(x)| for the standard Laguerre polynomial (alpha = 0), with the
// sign, by the rescaled three-term recurrence.
double log_abs_laguerre0(int k, double x, double* sign_out) {
    *sign_out = 1.0;
    if (k == 0) return 0.0;
    double prev = 1.0;
    double cur = 1.0 - x;
    double log_scale = 0.0;
    for (int j = 1; j < k; ++j) {
        const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(prev), std::abs(cur));
        if (mag > 1e100) {
            prev *= 1e-100;
            cur *= 1e-100;
            log_scale += std::log(1e100);
        } else if (mag > 0.0 && mag < 1e-100) {
            prev *= 1e100;
            cur *= 1e100;
            log_scale -= std::log(1e100);
        }
    }
    *sign_out = (cur < 0.0) ? -1.0 : 1.0;
    return log_scale + std::log(std::abs(cur));
}

} // namespace

Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) J(i, i) = diag(i);
    for (int i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = off(i);
        J(i + 1, i) = off(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    Rule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    rule.logw.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.x[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.w[i] = 2.0 * v0 * v0;
        rule.logw[i] = std::log(rule.w[i]);
    }
    return rule;
}

Rule gauss_laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + 1.0;
    for (int k = 1; k < n; ++k) off(k - 1) = k;

    Rule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    rule.logw.resize(n);
    const Eigen::VectorXd nodes = jacobi_eigenvalues(diag, off);
    for (int i = 0; i < n; ++i) {
        const double x = nodes(i);
        rule.x[i] = x;
        double sgn = 1.0;
        const double log_l = log_abs_laguerre0(n + 1, x, &sgn);
        rule.logw[i] = std::log(x) - 2.0 * (std::log(n + 1.0) + log_l);
        rule.w[i] = std::exp(rule.logw[i]);
    }
    return rule;
}

} // namespace hatom::quad

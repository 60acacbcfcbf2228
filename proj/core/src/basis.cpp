#include "hatom/basis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hatom {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxCircularN = 200;

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1, got " + std::to_string(n));
}

// Normalized associated Legendre block Lambda_l^m(theta) such that
// Y_lm = Lambda_l^m e^{i m phi} integrates to 1 over the sphere.
// Seed in log space (sin^m theta underflows for m ~ 200), short upward
// recurrence on scaled values afterwards.
double log_abs_lambda(int l, int m, double cos_theta, double sin_theta, double* sign_out) {
    *sign_out = 1.0;
    if (m > 0 && sin_theta == 0.0) return -std::numeric_limits<double>::infinity();

    double log_seed = 0.5 * std::log((2.0 * m + 1.0) / (4.0 * kPi));
    if (m > 0) {
        log_seed += 0.5 * std::lgamma(2.0 * m + 1.0) - m * std::log(2.0)
                  - std::lgamma(m + 1.0) + m * std::log(sin_theta);
    }
    if (l == m) return log_seed;

    // u_l = Lambda_l / exp(log_seed)
    double u_prev = 1.0;
    double u_cur = std::sqrt(2.0 * m + 3.0) * cos_theta;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double al = std::sqrt((4.0 * ll * ll - 1.0) /
                                    (static_cast<double>(ll - m) * (ll + m)));
        const double bl = std::sqrt(((2.0 * ll + 1.0) * (ll + m - 1.0) * (ll - m - 1.0)) /
                                    (static_cast<double>(ll - m) * (ll + m) * (2.0 * ll - 3.0)));
        const double u_next = al * cos_theta * u_cur - bl * u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    if (u_cur == 0.0) return -std::numeric_limits<double>::infinity();
    *sign_out = (u_cur < 0.0) ? -1.0 : 1.0;
    return log_seed + std::log(std::abs(u_cur));
}

// Generalized Laguerre L^{(alpha)}_k(x) by the standard three-term recurrence,
// with dynamic rescaling; returns log|L| and the sign.
double log_abs_laguerre(int k, double alpha, double x, double* sign_out) {
    *sign_out = 1.0;
    if (k == 0) return 0.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    double log_scale = 0.0;
    for (int j = 1; j < k; ++j) {
        double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(prev), std::abs(cur));
        if (mag > 1e100) {
            prev *= 1e-100;
            cur *= 1e-100;
            log_scale += std::log(1e100);
        }
    }
    if (cur == 0.0) return -std::numeric_limits<double>::infinity();
    *sign_out = (cur < 0.0) ? -1.0 : 1.0;
    return log_scale + std::log(std::abs(cur));
}

std::complex<double> polar_unit(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

} // namespace

double bound_energy(int n, double mass) {
    require_n(n);
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::invalid_argument("bound_energy: mass must be finite and > 0");
    }
    return -mass / (2.0 * static_cast<double>(n) * n);
}

double bohr_energy(int n, const AtomParams& params) {
    return bound_energy(n, params.mu);
}

namespace detail {

double circular_log_norm(int n, double a) {
    // 1 = B_n^2 * (2n)! (na/2)^{2n+1} * 2^{2n-1} ((n-1)!)^2 / (2n-1)! * 2 pi
    const double ln_ir = std::lgamma(2.0 * n + 1.0) + (2.0 * n + 1.0) * std::log(n * a / 2.0);
    const double ln_it = (2.0 * n - 1.0) * std::log(2.0) + 2.0 * std::lgamma(static_cast<double>(n))
                       - std::lgamma(2.0 * n);
    return -0.5 * (std::log(2.0 * kPi) + ln_ir + ln_it);
}

double circular_log_amplitude(int n, double r, double sin_theta, double a) {
    if (r == 0.0 || sin_theta == 0.0) {
        if (n == 1) return circular_log_norm(1, a) - r / a;
        return -std::numeric_limits<double>::infinity();
    }
    return circular_log_norm(n, a) + (n - 1.0) * (std::log(r) + std::log(sin_theta)) - r / (n * a);
}

} // namespace detail

std::complex<double> eval_circular_mass(int n, const SphericalPoint& x, double mass,
                                        const AtomParams& params) {
    require_n(n);
    if (x.r < 0.0) throw std::invalid_argument("eval_circular: r must be >= 0");
    const double a = bohr_scale(params, mass);
    if (n > kMaxCircularN || x.r > 10.0 * static_cast<double>(n) * n * a) {
        throw std::range_error("eval_circular: outside supported envelope (n <= 200, r <= 10 n^2 a)");
    }
    const double st = std::sin(x.theta);
    const double ln_mag = detail::circular_log_amplitude(n, x.r, std::abs(st), a);
    double amp = std::exp(ln_mag);
    if (st < 0.0 && (n - 1) % 2 != 0) amp = -amp; // sin^{n-1} for formally negative sin(theta)
    return amp * polar_unit((n - 1.0) * x.phi);
}

std::complex<double> eval_circular(CircularStateIndex idx, const SphericalPoint& x,
                                   const AtomParams& params) {
    return eval_circular_mass(idx.n, x, params.mu, params);
}

std::complex<double> eval_u_nlm_mass(int n, int l, int m, const SphericalPoint& x,
                                     double mass, const AtomParams& params) {
    require_n(n);
    if (l < 0 || l > n - 1) throw std::invalid_argument("eval_u_nlm: need 0 <= l <= n-1");
    if (std::abs(m) > l) throw std::invalid_argument("eval_u_nlm: need |m| <= l");
    if (x.r < 0.0) throw std::invalid_argument("eval_u_nlm: r must be >= 0");

    const double a = bohr_scale(params, mass);
    const double rho = 2.0 * x.r / (n * a);

    // ln N_nl = 1/2 [ 3 ln(2/(na)) + ln (n-l-1)! - ln 2n - ln (n+l)! ]
    const double ln_norm = 0.5 * (3.0 * std::log(2.0 / (n * a)) + std::lgamma(n - l + 0.0)
                                  - std::log(2.0 * n) - std::lgamma(n + l + 1.0));

    double lag_sign = 1.0;
    const double ln_lag = log_abs_laguerre(n - l - 1, 2.0 * l + 1.0, rho, &lag_sign);

    const double ct = std::cos(x.theta);
    const double st = std::abs(std::sin(x.theta));
    double ang_sign = 1.0;
    const double ln_ang = log_abs_lambda(l, std::abs(m), ct, st, &ang_sign);

    double ln_radial = ln_norm - 0.5 * rho + ln_lag;
    if (l > 0) {
        if (rho == 0.0) return 0.0;
        ln_radial += l * std::log(rho);
    }

    const double mag = std::exp(ln_radial + ln_ang);
    return lag_sign * ang_sign * mag * polar_unit(static_cast<double>(m) * x.phi);
}

std::complex<double> eval_u_nlm(int n, int l, int m, const SphericalPoint& x,
                                const AtomParams& params) {
    return eval_u_nlm_mass(n, l, m, x, params.mu, params);
}

double circular_dipole_mass(int n, double mass, const AtomParams& params) {
    require_n(n);
    const double a = bohr_scale(params, mass);
    const double beta = static_cast<double>(n) * (n + 1.0) * a / (2.0 * n + 1.0);
    const double ln_radial = std::lgamma(2.0 * n + 3.0) + (2.0 * n + 3.0) * std::log(beta);
    const double ln_theta = (2.0 * n + 1.0) * std::log(2.0) + 2.0 * std::lgamma(n + 1.0)
                          - std::lgamma(2.0 * n + 2.0);
    const double ln_k = detail::circular_log_norm(n, a) + detail::circular_log_norm(n + 1, a)
                      + std::log(2.0 * kPi) + ln_radial + ln_theta;
    return 0.5 * std::exp(ln_k);
}

DipoleElement circular_dipole(int n, const AtomParams& params) {
    return DipoleElement{n, circular_dipole_mass(n, params.mu, params)};
}

} // namespace hatom

#include "hatom/packet.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hatom {

namespace {

constexpr double kPi = 3.14159265358979323846;

double weight(double n, const PacketSpec& spec) {
    const double d = (n - spec.n_bar) / spec.sigma_n;
    return std::exp(-d * d / 2.0); // |c_n|^2 before normalization
}

void validate_spec(const PacketSpec& spec) {
    if (!(spec.n_bar >= 1.0) || !std::isfinite(spec.n_bar))
        throw std::invalid_argument("PacketSpec: n_bar must be >= 1");
    if (!(spec.sigma_n > 0.0))
        throw std::invalid_argument("PacketSpec: sigma_n must be > 0");
    if (!(spec.sigma_com > 0.0))
        throw std::invalid_argument("PacketSpec: sigma_com must be > 0");
    if (spec.has_window()) {
        if (spec.n_lo < 1) throw std::invalid_argument("PacketSpec: n_lo must be >= 1");
        if (spec.n_lo > spec.n_bar || spec.n_hi < spec.n_bar)
            throw std::invalid_argument("PacketSpec: window must contain n_bar");
    }
}

} // namespace

std::pair<int, int> default_window(const PacketSpec& spec) {
    const int lo = std::max(1, static_cast<int>(std::ceil(spec.n_bar - 8.0 * spec.sigma_n)));
    const int hi = std::max(lo, static_cast<int>(std::floor(spec.n_bar + 8.0 * spec.sigma_n)));
    return {lo, hi};
}

double CircularPacket::norm2() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return s;
}

CircularPacket build_packet_mass(const PacketSpec& spec, const AtomParams& params, double mass) {
    validate_spec(spec);
    auto [lo, hi] = spec.has_window() ? std::pair<int, int>{spec.n_lo, spec.n_hi}
                                      : default_window(spec);

    // Reference weight over all n >= 1 plus the weight the n >= 1 constraint
    // itself discards; sums converge after a few tens of sigma.
    const int ref_hi = static_cast<int>(std::ceil(spec.n_bar + 40.0 * spec.sigma_n)) + 1;
    double total = 0.0;
    for (int n = 1; n <= ref_hi; ++n) total += weight(n, spec);
    double clipped_below_one = 0.0;
    for (int n = 0; n > static_cast<int>(std::floor(spec.n_bar - 40.0 * spec.sigma_n)) - 1; --n)
        clipped_below_one += weight(n, spec);

    if (clipped_below_one > 1e-6 * (total + clipped_below_one)) {
        throw std::invalid_argument(
            "build_packet: window clipping at n=1 discards > 1e-6 of the weight; "
            "packet not representable as a bound superposition");
    }

    double inside = 0.0;
    for (int n = lo; n <= hi; ++n) inside += weight(n, spec);
    if (total - inside > 1e-12 * total) {
        throw std::invalid_argument("build_packet: window [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "] truncates more than 1e-12 of the weight");
    }

    CircularPacket packet;
    packet.n_lo = lo;
    packet.mass = mass;
    packet.params = params;
    packet.spec = spec;
    packet.spec.n_lo = lo;
    packet.spec.n_hi = hi;
    packet.coeffs.resize(hi - lo + 1);
    const double inv = 1.0 / std::sqrt(inside);
    for (int n = lo; n <= hi; ++n) {
        packet.coeffs[n - lo] = std::sqrt(weight(n, spec)) * inv;
    }
    return packet;
}

CircularPacket build_packet(const PacketSpec& spec, const AtomParams& params) {
    return build_packet_mass(spec, params, params.mu);
}

CircularPacket evolve_coeffs(const CircularPacket& packet, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("evolve_coeffs: t must be finite");
    CircularPacket out = packet;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        const double e = bound_energy(packet.n_lo + static_cast<int>(i), packet.mass);
        const double phase = -e * t / packet.params.hbar;
        out.coeffs[i] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return out;
}

PacketTables::PacketTables(const CircularPacket& packet) {
    const int w = static_cast<int>(packet.coeffs.size());
    energy.resize(w);
    dipole.assign(w > 0 ? w - 1 : 0, 0.0);
    for (int i = 0; i < w; ++i) energy[i] = bound_energy(packet.n_lo + i, packet.mass);
    for (int i = 0; i + 1 < w; ++i)
        dipole[i] = circular_dipole_mass(packet.n_lo + i, packet.mass, packet.params);
}

Vec3 PacketTables::center(const CircularPacket& packet, double t) const {
    // z_i = c_i^*(t) c_{i+1}(t); <x> = 2 sum d_i Re z_i, <y> = -2 sum d_i Im z_i
    double sx = 0.0;
    double sy = 0.0;
    const double hbar = packet.params.hbar;
    for (std::size_t i = 0; i + 1 < packet.coeffs.size(); ++i) {
        const double w = (energy[i + 1] - energy[i]) * t / hbar;
        const std::complex<double> z =
            std::conj(packet.coeffs[i]) * packet.coeffs[i + 1] *
            std::complex<double>(std::cos(w), -std::sin(w));
        sx += dipole[i] * z.real();
        sy -= dipole[i] * z.imag();
    }
    return Vec3{2.0 * sx, 2.0 * sy, 0.0};
}

Vec3 PacketTables::momentum(const CircularPacket& packet, double t) const {
    // d/dt z_i = -i omega_i z_i with omega_i = (E_{i+1} - E_i)/hbar
    double sx = 0.0;
    double sy = 0.0;
    const double hbar = packet.params.hbar;
    for (std::size_t i = 0; i + 1 < packet.coeffs.size(); ++i) {
        const double omega = (energy[i + 1] - energy[i]) / hbar;
        const double w = omega * t;
        const std::complex<double> z =
            std::conj(packet.coeffs[i]) * packet.coeffs[i + 1] *
            std::complex<double>(std::cos(w), -std::sin(w));
        sx += dipole[i] * omega * z.imag();
        sy += dipole[i] * omega * z.real();
    }
    return Vec3{2.0 * packet.mass * sx, 2.0 * packet.mass * sy, 0.0};
}

double PacketTables::autocorrelation(const CircularPacket& packet, double t) const {
    std::complex<double> s{0.0, 0.0};
    const double hbar = packet.params.hbar;
    for (std::size_t i = 0; i < packet.coeffs.size(); ++i) {
        const double w = energy[i] * t / hbar;
        s += std::norm(packet.coeffs[i]) * std::complex<double>(std::cos(w), -std::sin(w));
    }
    return std::norm(s);
}

Vec3 relative_center(const CircularPacket& packet, double t) {
    return PacketTables(packet).center(packet, t);
}

Vec3 relative_momentum(const CircularPacket& packet, double t) {
    return PacketTables(packet).momentum(packet, t);
}

double autocorrelation(const CircularPacket& packet, double t) {
    return PacketTables(packet).autocorrelation(packet, t);
}

TimeScales time_scales(const PacketSpec& spec, const AtomParams& params) {
    if (spec.n_bar < 5.0) throw std::invalid_argument("time_scales: supported for n_bar >= 5");
    TimeScales ts;
    ts.t_kepler = 2.0 * kPi * spec.n_bar * spec.n_bar * spec.n_bar / params.mu;
    ts.t_rev = spec.n_bar / 3.0 * ts.t_kepler;

    // Operational spreading time: first t where |<r>|/|<r>(0)| < 0.1 and stays
    // below for one full Kepler period, scanned at t_kepler/64 resolution.
    const CircularPacket packet = build_packet(spec, params);
    const PacketTables tables(packet);
    const double r0 = norm(tables.center(packet, 0.0));
    const double dt = ts.t_kepler / 64.0;
    const int n_steps = static_cast<int>(std::ceil(ts.t_rev / dt)) + 1;
    const int sustain = 64;

    ts.t_spread = std::numeric_limits<double>::quiet_NaN();
    int below_since = -1;
    int below_count = 0;
    for (int k = 0; k <= n_steps; ++k) {
        const double ratio = norm(tables.center(packet, k * dt)) / r0;
        if (ratio < 0.1) {
            if (below_count == 0) below_since = k;
            if (++below_count >= sustain) {
                ts.t_spread = below_since * dt;
                break;
            }
        } else {
            below_count = 0;
        }
    }
    return ts;
}

std::pair<Vec3, Vec3> particle_centers(const Vec3& rel_center, const AtomParams& params) {
    return {params.m_p / params.M * rel_center, -params.m_e / params.M * rel_center};
}

double com_width(const ComState& com, const AtomParams& params) {
    if (com.mode == ComMode::frozen) return com.sigma0;
    const double tau = params.hbar * com.time / (2.0 * params.M * com.sigma0 * com.sigma0);
    return com.sigma0 * std::sqrt(1.0 + tau * tau);
}

std::complex<double> com_amplitude(const ComState& com, const Vec3& R, const AtomParams& params) {
    if (!(com.sigma0 > 0.0)) throw std::invalid_argument("ComState: sigma0 must be > 0");
    const double s0 = com.sigma0;
    if (com.mode == ComMode::frozen) {
        if (norm(com.drift_momentum) != 0.0)
            throw std::invalid_argument("ComState: frozen mode requires zero drift momentum");
        const double pref = std::pow(2.0 * kPi * s0 * s0, -0.75);
        return pref * std::exp(-dot(R, R) / (4.0 * s0 * s0));
    }

    // Exact free 1-d Gaussian per axis:
    //   psi(x,t) = (2 pi s0^2)^{-1/4} g^{-1/2}
    //              exp(-(x - v t)^2 / (4 s0^2 g) + i(k x - hbar k^2 t / 2M))
    // with g = 1 + i hbar t/(2 M s0^2).
    const std::complex<double> g{1.0, params.hbar * com.time / (2.0 * params.M * s0 * s0)};
    const double pref = std::pow(2.0 * kPi * s0 * s0, -0.25);
    std::complex<double> out{1.0, 0.0};
    const double comps_r[3] = {R.x, R.y, R.z};
    const double comps_p[3] = {com.drift_momentum.x, com.drift_momentum.y, com.drift_momentum.z};
    for (int axis = 0; axis < 3; ++axis) {
        const double k = comps_p[axis] / params.hbar;
        const double v = comps_p[axis] / params.M;
        const double xc = comps_r[axis] - v * com.time;
        const std::complex<double> arg =
            -xc * xc / (4.0 * s0 * s0 * g) +
            std::complex<double>(0.0, k * comps_r[axis] -
                                          params.hbar * k * k * com.time / (2.0 * params.M));
        out *= pref / std::sqrt(g) * std::exp(arg);
    }
    return out;
}

} // namespace hatom

#include "hatom/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hatom/fft.hpp"

namespace hatom {

namespace {

// Per-axis factor of the center-of-mass Gaussian (x, y, z factors multiply to
// com_amplitude); same closed form as packet.cpp, kept axis-local here.
std::complex<double> com_axis(const ComState& com, double x, double p_axis,
                              const AtomParams& params) {
    const double s0 = com.sigma0;
    const double pref = std::pow(2.0 * M_PI * s0 * s0, -0.25);
    if (com.mode == ComMode::frozen) {
        return pref * std::exp(-x * x / (4.0 * s0 * s0));
    }
    const std::complex<double> g{1.0, params.hbar * com.time / (2.0 * params.M * s0 * s0)};
    const double k = p_axis / params.hbar;
    const double v = p_axis / params.M;
    const double xc = x - v * com.time;
    const std::complex<double> arg =
        -xc * xc / (4.0 * s0 * s0 * g) +
        std::complex<double>(0.0, k * x - params.hbar * k * k * com.time / (2.0 * params.M));
    return pref / std::sqrt(g) * std::exp(arg);
}

} // namespace

double PlanarDensity::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    const double h = grid.dx();
    return s * h * h;
}

double PlanarField::norm2_plane() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    const double h = grid.dx();
    return s * h * h;
}

std::complex<double> packet_amplitude(const CircularPacket& packet, double t,
                                      double x, double y, double z) {
    const CircularPacket evolved = (t == 0.0) ? packet : evolve_coeffs(packet, t);
    const double a = bohr_scale(packet.params, packet.mass);
    const double rho = std::hypot(x, y);
    const double r = std::hypot(rho, z);
    const double st = (r > 0.0) ? rho / r : 0.0;
    const double phi = std::atan2(y, x);

    std::complex<double> sum{0.0, 0.0};
    const std::complex<double> rot{std::cos(phi), std::sin(phi)};
    // phase factor e^{i (n-1) phi}, advanced by one power of e^{i phi} per n
    std::complex<double> phase =
        (packet.n_lo == 1)
            ? std::complex<double>{1.0, 0.0}
            : std::complex<double>{std::cos((packet.n_lo - 1.0) * phi), std::sin((packet.n_lo - 1.0) * phi)};
    for (std::size_t i = 0; i < evolved.coeffs.size(); ++i) {
        const int n = packet.n_lo + static_cast<int>(i);
        const double ln_mag = detail::circular_log_amplitude(n, r, st, a);
        sum += evolved.coeffs[i] * std::exp(ln_mag) * phase;
        phase *= rot;
    }
    return sum;
}

PlanarDensity sample_density_plane(const CircularPacket& packet, double t, const PlaneGrid& grid) {
    const double a = bohr_scale(packet.params, packet.mass);
    const double needed = 1.5 * packet.spec.n_bar * packet.spec.n_bar * a;
    if (grid.half_width < needed) {
        throw std::invalid_argument("sample_density_plane: grid must cover radius >= 1.5 n_bar^2 a");
    }
    const CircularPacket evolved = evolve_coeffs(packet, t);

    PlanarDensity out;
    out.grid = grid;
    out.values.assign(static_cast<std::size_t>(grid.n) * grid.n, 0.0);
    for (int iy = 0; iy < grid.n; ++iy) {
        const double y = grid.coord(iy);
        for (int ix = 0; ix < grid.n; ++ix) {
            const double x = grid.coord(ix);
            const std::complex<double> amp = packet_amplitude(evolved, 0.0, x, y, 0.0);
            out.values[static_cast<std::size_t>(iy) * grid.n + ix] = std::norm(amp);
        }
    }
    return out;
}

PlanarDensity coarse_grain(const PlanarDensity& density, double kernel_width) {
    if (kernel_width < 0.0) throw std::invalid_argument("coarse_grain: kernel_width must be >= 0");
    if (kernel_width == 0.0) return density;
    const PlaneGrid& g = density.grid;
    if (kernel_width > 2.0 * g.half_width) {
        throw std::invalid_argument("coarse_grain: kernel wider than the grid extent");
    }

    const double h = g.dx();
    const int pad = static_cast<int>(std::ceil(4.0 * kernel_width / h));
    const int P = fft::next_fast_size(g.n + 2 * pad);

    std::vector<std::complex<double>> buf(static_cast<std::size_t>(P) * P, 0.0);
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix)
            buf[static_cast<std::size_t>(iy) * P + ix] =
                density.values[static_cast<std::size_t>(iy) * g.n + ix];

    fft::C2C plan(P, P);
    plan.forward(buf.data());
    const std::vector<double> k = fft::wavenumbers(P, h);
    const double w2 = kernel_width * kernel_width;
    for (int iy = 0; iy < P; ++iy) {
        for (int ix = 0; ix < P; ++ix) {
            const double k2 = k[ix] * k[ix] + k[iy] * k[iy];
            buf[static_cast<std::size_t>(iy) * P + ix] *= std::exp(-0.5 * k2 * w2);
        }
    }
    plan.inverse(buf.data());

    PlanarDensity out;
    out.grid = g;
    out.values.resize(density.values.size());
    for (int iy = 0; iy < g.n; ++iy)
        for (int ix = 0; ix < g.n; ++ix)
            out.values[static_cast<std::size_t>(iy) * g.n + ix] =
                std::max(0.0, buf[static_cast<std::size_t>(iy) * P + ix].real());
    return out;
}

PlanarField reduced_field(const std::function<std::complex<double>(double, double, double)>& psi_rel,
                          const ComState& com, double kappa, const PlaneGrid& grid,
                          const AtomParams& params, int z_points, double z_half_extent) {
    if (kappa == 0.0) throw std::invalid_argument("reduced_field: kappa must be nonzero");
    if (z_points < 3 || z_points % 2 == 0)
        throw std::invalid_argument("reduced_field: z_points must be odd and >= 3");

    const double sigma_t = com_width(com, params);
    if (sigma_t < grid.dx())
        throw std::invalid_argument("reduced_field: center-of-mass width not resolvable on grid");

    const double ak = std::abs(kappa);
    const double dz = 2.0 * z_half_extent / (z_points - 1);

    // z-contracted, kappa-scaled source field on the output grid
    std::vector<std::complex<double>> contracted(static_cast<std::size_t>(grid.n) * grid.n, 0.0);
    for (int kz = 0; kz < z_points; ++kz) {
        const double z = -z_half_extent + kz * dz;
        const double wq = (kz == 0 || kz == z_points - 1) ? 0.5 * dz : dz;
        const std::complex<double> cz =
            com_axis(com, -kappa * z, com.drift_momentum.z, params) * wq;
        if (std::abs(cz) < 1e-300) continue;
        for (int iy = 0; iy < grid.n; ++iy) {
            const double v = grid.coord(iy) / kappa;
            for (int ix = 0; ix < grid.n; ++ix) {
                const double u = grid.coord(ix) / kappa;
                contracted[static_cast<std::size_t>(iy) * grid.n + ix] += psi_rel(u, v, z) * cz;
            }
        }
    }
    for (auto& c : contracted) c /= ak * ak;

    // padded FFT convolution with the in-plane kernel C_x C_y; the pad covers
    // the 6-sigma kernel support, beyond the 4-width zero padding floor
    const double h = grid.dx();
    const int pad = static_cast<int>(std::ceil(6.0 * sigma_t / h));
    const int P = fft::next_fast_size(grid.n + 2 * pad);

    std::vector<std::complex<double>> buf(static_cast<std::size_t>(P) * P, 0.0);
    std::vector<std::complex<double>> ker(static_cast<std::size_t>(P) * P, 0.0);
    for (int iy = 0; iy < grid.n; ++iy)
        for (int ix = 0; ix < grid.n; ++ix)
            buf[static_cast<std::size_t>(iy) * P + ix] =
                contracted[static_cast<std::size_t>(iy) * grid.n + ix];

    for (int iy = 0; iy < P; ++iy) {
        const double yy = ((iy <= P / 2) ? iy : iy - P) * h;
        const std::complex<double> cy = com_axis(com, yy, com.drift_momentum.y, params);
        for (int ix = 0; ix < P; ++ix) {
            const double xx = ((ix <= P / 2) ? ix : ix - P) * h;
            ker[static_cast<std::size_t>(iy) * P + ix] =
                cy * com_axis(com, xx, com.drift_momentum.x, params);
        }
    }

    fft::C2C plan(P, P);
    plan.forward(buf.data());
    plan.forward(ker.data());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= ker[i] * (h * h);
    plan.inverse(buf.data());

    PlanarField out;
    out.grid = grid;
    out.values.resize(static_cast<std::size_t>(grid.n) * grid.n);
    for (int iy = 0; iy < grid.n; ++iy)
        for (int ix = 0; ix < grid.n; ++ix)
            out.values[static_cast<std::size_t>(iy) * grid.n + ix] =
                buf[static_cast<std::size_t>(iy) * P + ix];
    return out;
}

PlanarField reduced_wavefunction(const CircularPacket& packet, const ComState& com,
                                 Particle which, const PlaneGrid& grid, double t,
                                 int z_points) {
    const AtomParams& p = packet.params;
    const double kappa = (which == Particle::electron) ? p.m_p / p.M : -p.m_e / p.M;

    const CircularPacket evolved = evolve_coeffs(packet, t);
    auto psi = [&evolved](double x, double y, double z) {
        return packet_amplitude(evolved, 0.0, x, y, z);
    };

    // The kernel cuts |z| above 6 sigma/|kappa|; the packet itself dies at a
    // few n^{3/2} length scales off the plane. Integrate to the smaller one.
    const double a = bohr_scale(p, packet.mass);
    const double z_packet = 6.0 * std::pow(packet.spec.n_bar, 1.5) * a;
    const double z_kernel = 6.0 * com_width(com, p) / std::abs(kappa);
    const double z_half = std::min(z_packet, z_kernel);

    return reduced_field(psi, com, kappa, grid, p, z_points, z_half);
}

} // namespace hatom

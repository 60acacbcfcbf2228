// Circular-packet observables against independent oracles:
//  - <r>(t) from coefficient sums vs grid integration of the per-component
//    plane fields with the exact polar-angle weight applied analytically,
//  - <p>(t) vs high-order centered finite differences of <r>(t),
//  - time scales vs the level-spacing definition of the Kepler period.

#include <doctest.h>

#include <cmath>
#include <complex>

#include "hatom/basis.hpp"
#include "hatom/packet.hpp"
#include "oracles.hpp"

using namespace hatom;

namespace {

const AtomParams kPhys = make_params(kPhysicalMassRatio);

PacketSpec default_spec() {
    PacketSpec s;
    s.n_bar = 60.0;
    s.sigma_n = 0.8;
    s.sigma_com = 10.0;
    return s;
}

// Grid-integration oracle for <r>(t): each adjacent pair (n, n+1) is
// integrated over the z=0 plane and lifted to three dimensions with the
// analytic ratio
//   X_n / P_n = (2n+2) beta_n S(n),  S(n) = 2^{2n+1} (n!)^2 / (2n+1)!,
// where P_n is the planar pair integral and beta_n = n(n+1)a/(2n+1).
Vec3 center_grid_oracle(const CircularPacket& packet, double t, int n_grid, double half_width) {
    const CircularPacket evolved = evolve_coeffs(packet, t);
    const double a = bohr_scale(packet.params, packet.mass);
    const int n_states = static_cast<int>(packet.coeffs.size());
    const double h = 2.0 * half_width / n_grid;

    std::vector<std::complex<double>> px(n_states - 1, 0.0), py(n_states - 1, 0.0);
    std::vector<std::complex<double>> amp(n_states);
    for (int iy = 0; iy < n_grid; ++iy) {
        const double y = -half_width + (iy + 0.5) * h;
        for (int ix = 0; ix < n_grid; ++ix) {
            const double x = -half_width + (ix + 0.5) * h;
            const double r = std::hypot(x, y);
            const double phi = std::atan2(y, x);
            for (int i = 0; i < n_states; ++i) {
                const int n = packet.n_lo + i;
                const double lnm = hatom::detail::circular_log_amplitude(n, r, 1.0, a);
                const double ph = (n - 1.0) * phi;
                amp[i] = std::exp(lnm) * std::complex<double>(std::cos(ph), std::sin(ph));
            }
            for (int i = 0; i + 1 < n_states; ++i) {
                const std::complex<double> pair = std::conj(amp[i]) * amp[i + 1];
                px[i] += x * pair;
                py[i] += y * pair;
            }
        }
    }
    Vec3 out{};
    for (int i = 0; i + 1 < n_states; ++i) {
        const int n = packet.n_lo + i;
        const double beta = static_cast<double>(n) * (n + 1.0) * a / (2.0 * n + 1.0);
        const double ln_ratio = std::log(2.0 * n + 2.0) + std::log(beta) +
                                (2.0 * n + 1.0) * std::log(2.0) +
                                2.0 * std::lgamma(n + 1.0) - std::lgamma(2.0 * n + 2.0);
        const double ratio = std::exp(ln_ratio);
        const std::complex<double> z =
            std::conj(evolved.coeffs[i]) * evolved.coeffs[i + 1];
        out.x += 2.0 * (z * ratio * px[i] * h * h).real();
        out.y += 2.0 * (z * ratio * py[i] * h * h).real();
    }
    return out;
}

} // namespace

TEST_SUITE("packet") {

TEST_CASE("Gaussian coefficient profile: adjacent ratio and normalization") {
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const int i60 = 60 - p.n_lo;
    // c_60 is the largest coefficient
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        CHECK(std::abs(p.coeffs[i]) <= std::abs(p.coeffs[i60]));
        CHECK(p.coeffs[i].imag() == 0.0);
        CHECK(p.coeffs[i].real() > 0.0);
    }
    // normalization-independent amplitude ratio exp(-1/(4 sigma^2))
    const double expected = std::exp(-1.0 / (4.0 * 0.8 * 0.8));
    CHECK(p.coeffs[i60 + 1].real() / p.coeffs[i60].real() ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(p.norm2() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vanishing width collapses to a single eigenstate") {
    PacketSpec s;
    s.n_bar = 10.0;
    s.sigma_n = 1e-6;
    s.sigma_com = 1.0;
    const CircularPacket p = build_packet(s, kPhys);
    REQUIRE(p.n_lo == 10);
    REQUIRE(p.coeffs.size() == 1);
    CHECK(std::abs(p.coeffs[0]) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("packets clipped at n=1 are rejected") {
    PacketSpec s;
    s.n_bar = 3.0;
    s.sigma_n = 2.0;
    s.sigma_com = 1.0;
    CHECK_THROWS_AS(build_packet(s, kPhys), std::invalid_argument);
}

TEST_CASE("windows that truncate more than 1e-12 of the weight are rejected") {
    PacketSpec s = default_spec();
    s.n_lo = 58;
    s.n_hi = 62; // +-2.5 sigma only
    CHECK_THROWS_AS(build_packet(s, kPhys), std::invalid_argument);
    s.n_lo = 50;
    s.n_hi = 70;
    CHECK_NOTHROW(build_packet(s, kPhys));
}

TEST_CASE("phase evolution: identity at t=0 and exact norm at any t") {
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const CircularPacket p0 = evolve_coeffs(p, 0.0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) CHECK(p0.coeffs[i] == p.coeffs[i]);
    for (double t : {1.0, 1e3, 3.7e6, 2.9e8}) {
        CHECK(evolve_coeffs(p, t).norm2() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("stationary state has <r> = <p> = 0 and unit autocorrelation forever") {
    PacketSpec s;
    s.n_bar = 12.0;
    s.sigma_n = 1e-9;
    s.sigma_com = 1.0;
    const CircularPacket p = build_packet(s, kPhys);
    for (double t : {0.0, 17.0, 4.4e4}) {
        CHECK(norm(relative_center(p, t)) == 0.0);
        CHECK(norm(relative_momentum(p, t)) == 0.0);
        CHECK(autocorrelation(p, t) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("t=0 center points along +x at the orbit radius (grid oracle)") {
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const Vec3 r0 = relative_center(p, 0.0);
    CHECK(r0.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r0.z == 0.0);
    CHECK(r0.x > 0.0);

    // |<r>|(0) = n_bar^2 a times the adjacent-coefficient overlap
    // exp(-1/(8 sigma_n^2)); at sigma_n = 0.8 that factor is 0.823, and the
    // bare n_bar^2 a estimate is only approached for wide packets.
    const double a = bohr_scale(kPhys, kPhys.mu);
    const double coherent = std::exp(-1.0 / (8.0 * 0.8 * 0.8));
    CHECK(std::abs(r0.x - coherent * 3600.0 * a) < 0.02 * 3600.0 * a);

    const Vec3 grid = center_grid_oracle(p, 0.0, 1024, 9000.0);
    CHECK(std::abs(grid.x - r0.x) <= 1e-4 * std::abs(r0.x));
    CHECK(std::abs(grid.y - r0.y) <= 1e-4 * std::abs(r0.x));
}

TEST_CASE("wide packets reach the classical orbit radius n_bar^2 a within 2%") {
    PacketSpec s;
    s.n_bar = 60.0;
    s.sigma_n = 5.0;
    s.sigma_com = 10.0;
    const CircularPacket p = build_packet(s, kPhys);
    const double a = bohr_scale(kPhys, kPhys.mu);
    const Vec3 r0 = relative_center(p, 0.0);
    CHECK(std::abs(r0.x - 3600.0 * a) < 0.02 * 3600.0 * a);
    // and the deficit shrinks monotonically with packet width
    s.sigma_n = 2.0;
    const double r2 = norm(relative_center(build_packet(s, kPhys), 0.0));
    s.sigma_n = 4.0;
    const double r4 = norm(relative_center(build_packet(s, kPhys), 0.0));
    CHECK(r2 < r4);
    CHECK(r4 < r0.x);
}

TEST_CASE("dephasing after half a Kepler period, cross-checked on the grid") {
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const TimeScales ts = time_scales(p.spec, kPhys);
    const double t = 0.5 * ts.t_kepler;
    const Vec3 r = relative_center(p, t);
    const Vec3 r0 = relative_center(p, 0.0);
    // half a period in: packet on the other side of the orbit, slightly dephased
    CHECK(r.x < 0.0);
    CHECK(norm(r) < norm(r0));
    CHECK(norm(r) > 0.9 * norm(r0));
    const Vec3 grid = center_grid_oracle(p, t, 1024, 9000.0);
    CHECK(std::abs(grid.x - r.x) <= 1e-4 * norm(r));
    CHECK(std::abs(grid.y - r.y) <= 1e-4 * norm(r));
}

TEST_CASE("<p> equals the finite-difference derivative of <r> at the stated tolerance") {
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const TimeScales ts = time_scales(p.spec, kPhys);
    const double h = ts.t_kepler / 1e4;
    const double tol = 1e-8 * kPhys.mu * norm(relative_center(p, 0.0)) / ts.t_kepler;
    for (double t : {0.0, 0.37 * ts.t_kepler, 2.0 * ts.t_kepler, 9.1 * ts.t_kepler}) {
        const Vec3 pm = relative_momentum(p, t);
        auto rx = [&](double tt) { return relative_center(p, tt).x; };
        auto ry = [&](double tt) { return relative_center(p, tt).y; };
        const double fdx = kPhys.mu * oracles::deriv5(rx, t, h);
        const double fdy = kPhys.mu * oracles::deriv5(ry, t, h);
        CHECK(std::abs(pm.x - fdx) < tol);
        CHECK(std::abs(pm.y - fdy) < tol);
    }
}

TEST_CASE("time average of <p> over the revival window obeys the exact integral identity") {
    // The running average of mu d<r>/dt over [0, T] is mu (<r>(T) - <r>(0))/T
    // identically; the dense numerical average must reproduce it. Its
    // magnitude stays a small fraction of the peak momentum.
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const PacketTables tables(p);
    const TimeScales ts = time_scales(p.spec, kPhys);
    const double T = 2.0 * ts.t_rev; // full phase revival of the center series
    const int N = 40000;
    Vec3 avg{};
    double peak = 0.0;
    for (int i = 0; i <= N; ++i) {
        const double w = (i == 0 || i == N) ? 0.5 : 1.0;
        const Vec3 pm = tables.momentum(p, T * i / N);
        avg += w * pm;
        peak = std::max(peak, norm(pm));
    }
    avg *= 1.0 / N;
    const Vec3 identity = (kPhys.mu / T) * (tables.center(p, T) - tables.center(p, 0.0));
    // trapezoid discretization limits the numeric average to ~1e-8 relative
    CHECK(std::abs(avg.x - identity.x) < 1e-7 * peak);
    CHECK(std::abs(avg.y - identity.y) < 1e-7 * peak);
    CHECK(norm(avg) < 2e-2 * peak);
}

TEST_CASE("autocorrelation: unity at t=0, recurrence structure of the exact phases") {
    const CircularPacket p = build_packet(default_spec(), kPhys);
    const PacketTables tables(p);
    CHECK(tables.autocorrelation(p, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    const TimeScales ts = time_scales(p.spec, kPhys);
    const double t_full = 2.0 * ts.t_rev; // (2 n_bar/3) t_kepler

    // With the exact 1/n^2 phases the strongest recurrence is the mirror
    // revival brought back to the starting angle: it sits half a Kepler
    // period before (n_bar/3) t_kepler and carries less cubic dephasing than
    // the (2 n_bar/3) t_kepler full revival.
    auto scan = [&](double lo, double hi, double* where) {
        double best = -1.0;
        for (int i = 0; i <= 30000; ++i) {
            const double t = lo + (hi - lo) * i / 30000.0;
            const double a = tables.autocorrelation(p, t);
            if (a > best) {
                best = a;
                *where = t;
            }
        }
        return best;
    };

    double t_global = 0.0;
    const double a_global = scan(ts.t_spread, 1.1 * t_full, &t_global);
    CHECK(a_global > 0.95);
    CHECK(std::abs(t_global - (ts.t_rev - 0.5 * ts.t_kepler)) < 0.005 * ts.t_rev);

    // the quadratic-expansion full revival is a genuine local recurrence at
    // (2 n_bar/3) t_kepler within 2%
    double t_near_full = 0.0;
    const double a_near_full = scan(0.95 * t_full, 1.05 * t_full, &t_near_full);
    CHECK(a_near_full > 0.9);
    CHECK(std::abs(t_near_full - t_full) < 0.02 * t_full);
}

TEST_CASE("time scales: Kepler period, revival ratio, spreading regime") {
    const AtomParams unit_mu = make_params(1e15); // mu = 1 to machine precision
    PacketSpec s = default_spec();
    const TimeScales ts1 = time_scales(s, unit_mu);
    CHECK(ts1.t_kepler == doctest::Approx(2.0 * M_PI * 216000.0).epsilon(1e-12));
    CHECK(ts1.t_kepler == doctest::Approx(1.3572e6).epsilon(1e-4));

    // 2 pi / (E_61 - E_60) approaches t_kepler within 2.5%
    const double spacing = bound_energy(61, 1.0) - bound_energy(60, 1.0);
    CHECK(2.0 * M_PI / spacing == doctest::Approx(ts1.t_kepler).epsilon(0.025));

    const TimeScales ts = time_scales(s, kPhys);
    CHECK(ts.t_rev == doctest::Approx(20.0 * ts.t_kepler).epsilon(1e-12));
    CHECK(ts.t_spread >= 8.0 * ts.t_kepler);
    CHECK(ts.t_spread <= 12.0 * ts.t_kepler);
    CHECK(ts.t_kepler < ts.t_spread);
    CHECK(ts.t_spread < ts.t_rev);
}

TEST_CASE("particle centers: exact mass-weighted identities") {
    const Vec3 rel{7.5, -2.0, 0.0};
    const auto [re, rp] = particle_centers(rel, kPhys);
    CHECK(re.x == doctest::Approx(kPhys.m_p / kPhys.M * 7.5).epsilon(1e-15));
    CHECK(rp.x == doctest::Approx(-kPhys.m_e / kPhys.M * 7.5).epsilon(1e-15));
    // collinear, anti-parallel, center-of-mass identity
    CHECK(re.x * rp.x <= 0.0);
    CHECK(std::abs(kPhys.m_e * re.x + kPhys.m_p * rp.x) < 1e-12 * std::abs(re.x));
    CHECK(std::abs(kPhys.m_e * re.y + kPhys.m_p * rp.y) < 1e-12 * std::abs(re.x));
    const auto [ze, zp] = particle_centers(Vec3{}, kPhys);
    CHECK(norm(ze) == 0.0);
    CHECK(norm(zp) == 0.0);
}

TEST_CASE("center-of-mass packet: frozen and free-spreading widths") {
    ComState com;
    com.sigma0 = 10.0;
    com.mode = ComMode::frozen;
    com.time = 5e6;
    CHECK(com_width(com, kPhys) == 10.0);

    com.mode = ComMode::free_spreading;
    const double tau = com.time / (2.0 * kPhys.M * 100.0);
    CHECK(com_width(com, kPhys) == doctest::Approx(10.0 * std::sqrt(1.0 + tau * tau)).epsilon(1e-14));
    CHECK(com_width(com, kPhys) >= com.sigma0);
}

TEST_CASE("free center-of-mass amplitude matches the closed-form free Gaussian") {
    ComState com;
    com.sigma0 = 4.0;
    com.mode = ComMode::free_spreading;
    com.time = 2000.0;
    com.drift_momentum = Vec3{0.3, -0.1, 0.05};
    for (const Vec3 R : {Vec3{1.0, 2.0, -3.0}, Vec3{0.0, 0.0, 0.0}, Vec3{-6.0, 0.5, 9.0}}) {
        const std::complex<double> got = com_amplitude(com, R, kPhys);
        const std::complex<double> want =
            oracles::free_gaussian(R.x, com.time, 0.0, 4.0, 0.3, kPhys.M) *
            oracles::free_gaussian(R.y, com.time, 0.0, 4.0, -0.1, kPhys.M) *
            oracles::free_gaussian(R.z, com.time, 0.0, 4.0, 0.05, kPhys.M);
        CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
    }
    ComState frozen;
    frozen.sigma0 = 4.0;
    frozen.drift_momentum = Vec3{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(com_amplitude(frozen, Vec3{}, kPhys), std::invalid_argument);
}

} // TEST_SUITE

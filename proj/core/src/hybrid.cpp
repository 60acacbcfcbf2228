#include "hatom/hybrid.hpp"

#include <cmath>
#include <stdexcept>

#include "hatom/quadrature.hpp"

namespace hatom {

namespace {

constexpr double kPi = 3.14159265358979323846;

const AdiabaticElectron& adiabatic_or_throw(const HybridState& state, const char* who) {
    if (!state.is_adiabatic()) {
        throw std::invalid_argument(std::string(who) +
                                    ": requires the r_p-attached adiabatic representation");
    }
    return std::get<AdiabaticElectron>(state.electron);
}

// Electron coefficients as a packet so the analytic observable machinery
// (centers, momenta by phase differentiation) applies unchanged.
CircularPacket packet_view(const AdiabaticElectron& e, const AtomParams& params) {
    CircularPacket p;
    p.coeffs = e.coeffs;
    p.n_lo = e.n_lo;
    p.mass = e.mass;
    p.params = params;
    double nbar = 0.0;
    double w = 0.0;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        nbar += (e.n_lo + static_cast<double>(i)) * std::norm(e.coeffs[i]);
        w += std::norm(e.coeffs[i]);
    }
    p.spec.n_bar = (w > 0.0) ? nbar / w : e.n_lo;
    p.spec.sigma_n = 1.0;
    p.spec.n_lo = e.n_lo;
    p.spec.n_hi = e.n_lo + static_cast<int>(e.coeffs.size()) - 1;
    return p;
}

// Electron energy sum |a_n|^2 E_n with the basis attached to the given
// proton position. The eigenvalues do not reference the position at all;
// force_adiabatic differentiates this function to make that explicit.
double electron_energy_attached(const AdiabaticElectron& e, const Vec3& /*r_p*/) {
    double sum = 0.0;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        sum += std::norm(e.coeffs[i]) * bound_energy(e.n_lo + static_cast<int>(i), e.mass);
    }
    return sum;
}

// <u_n| x/r^3 |u_{n+1}> by Gauss-Laguerre (radial) x Gauss-Legendre (polar)
// quadrature; the integrand is smooth through the origin because the
// eigenstates vanish there fast enough.
std::vector<double> ehrenfest_pair_elements(int n_lo, int n_states, double mass,
                                            const AtomParams& params) {
    const double a = bohr_scale(params, mass);
    const int n_hi = n_lo + n_states - 1;
    const auto theta_rule = quad::gauss_legendre(2 * n_hi + 32);

    std::vector<double> w(n_states > 0 ? n_states - 1 : 0, 0.0);
    for (int i = 0; i + 1 < n_states; ++i) {
        const int n = n_lo + i;
        const double beta = static_cast<double>(n) * (n + 1.0) * a / (2.0 * n + 1.0);
        const auto r_rule = quad::gauss_laguerre(n + 14);
        double sum = 0.0;
        for (std::size_t it = 0; it < theta_rule.x.size(); ++it) {
            const double theta = 0.5 * kPi * (theta_rule.x[it] + 1.0);
            const double st = std::sin(theta);
            const double wt = 0.5 * kPi * theta_rule.w[it] * st * st;
            double radial = 0.0;
            for (std::size_t ir = 0; ir < r_rule.x.size(); ++ir) {
                const double t = r_rule.x[ir];
                const double r = beta * t;
                const double lnf = detail::circular_log_amplitude(n, r, st, a) +
                                   detail::circular_log_amplitude(n + 1, r, st, a) + t +
                                   r_rule.logw[ir];
                radial += std::exp(lnf);
            }
            sum += wt * radial * beta;
        }
        w[i] = kPi * sum;
    }
    return w;
}

} // namespace

double electron_norm2(const HybridState& state) {
    if (state.is_adiabatic()) {
        const auto& e = std::get<AdiabaticElectron>(state.electron);
        double s = 0.0;
        for (const auto& c : e.coeffs) s += std::norm(c);
        return s;
    }
    const auto& e = std::get<GridElectron1D>(state.electron);
    return norm2_grid(e.psi, e.grid.dx());
}

HybridState init_hybrid(const PacketSpec& spec, const Vec3& r_p0, const Vec3& p_p0,
                        const AtomParams& params) {
    const CircularPacket packet = build_packet_mass(spec, params, params.m_e);
    HybridState state;
    state.electron = AdiabaticElectron{packet.coeffs, packet.n_lo, params.m_e};
    state.r_p = r_p0;
    state.p_p = p_p0;
    state.t = 0.0;
    return state;
}

double hybrid_energy(const HybridState& state, const AtomParams& params) {
    const auto& e = adiabatic_or_throw(state, "hybrid_energy");
    return electron_energy_attached(e, state.r_p) +
           dot(state.p_p, state.p_p) / (2.0 * params.m_p);
}

Vec3 force_adiabatic(const HybridState& state, const AtomParams& params) {
    const auto& e = adiabatic_or_throw(state, "force_adiabatic");
    const double h = 1e-3 * params.a_B;
    Vec3 f{};
    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    double* comp[3] = {&f.x, &f.y, &f.z};
    for (int d = 0; d < 3; ++d) {
        const double ep = electron_energy_attached(e, state.r_p + h * axes[d]);
        const double em = electron_energy_attached(e, state.r_p - h * axes[d]);
        *comp[d] = -(ep - em) / (2.0 * h);
    }
    if (norm(f) >= 1e-10) {
        throw std::logic_error("force_adiabatic: spectrum acquired a proton-position dependence");
    }
    return f;
}

Vec3 force_ehrenfest(const HybridState& state, const AtomParams& params) {
    if (!state.is_adiabatic()) {
        throw std::invalid_argument("force_ehrenfest: grid states are scored by Ehrenfest1D::force");
    }
    const auto& e = std::get<AdiabaticElectron>(state.electron);
    const int n_states = static_cast<int>(e.coeffs.size());
    const auto w = ehrenfest_pair_elements(e.n_lo, n_states, e.mass, params);
    double fx = 0.0;
    double fy = 0.0;
    for (int i = 0; i + 1 < n_states; ++i) {
        const std::complex<double> z = std::conj(e.coeffs[i]) * e.coeffs[i + 1];
        fx += w[i] * z.real();
        fy -= w[i] * z.imag();
    }
    return Vec3{2.0 * fx, 2.0 * fy, 0.0};
}

Vec3 force_ehrenfest_displaced(const HybridState& state, const Vec3& delta,
                               const AtomParams& params) {
    const auto& e = adiabatic_or_throw(state, "force_ehrenfest_displaced");
    if (norm(delta) == 0.0) return force_ehrenfest(state, params);

    const double a = bohr_scale(params, e.mass);
    const int n_states = static_cast<int>(e.coeffs.size());
    const int n_hi = e.n_lo + n_states - 1;
    const double scale = 0.5 * n_hi * a;

    const auto r_rule = quad::gauss_laguerre(3 * n_hi + 16);
    const auto t_rule = quad::gauss_legendre(2 * n_hi + 32);
    const int n_phi = 64;

    // amplitude carrying half of the log radial weight compensation, so
    // |amp|^2 is rho * w * e^t without ever forming w or e^t alone
    auto amp_scaled = [&](double r, double st, double phi, double half_log) {
        std::complex<double> s{0.0, 0.0};
        for (int i = 0; i < n_states; ++i) {
            const int n = e.n_lo + i;
            const double ln = detail::circular_log_amplitude(n, r, st, a) + half_log;
            const double ph = (n - 1.0) * phi;
            s += e.coeffs[i] * std::exp(ln) * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        return s;
    };

    Vec3 f{};
    double rho_max = 0.0;
    for (std::size_t ir = 0; ir < r_rule.x.size(); ++ir) {
        const double t = r_rule.x[ir];
        const double r = scale * t;
        const double log_weight = r_rule.logw[ir] + t;
        for (std::size_t it = 0; it < t_rule.x.size(); ++it) {
            const double theta = 0.5 * kPi * (t_rule.x[it] + 1.0);
            const double st = std::sin(theta);
            const double ct = std::cos(theta);
            for (int ip = 0; ip < n_phi; ++ip) {
                const double phi = 2.0 * kPi * ip / n_phi;
                const std::complex<double> amp = amp_scaled(r, st, phi, 0.5 * log_weight);
                const double rho_w = std::norm(amp); // rho * w * e^t
                rho_max = std::max(rho_max, rho_w * std::exp(-log_weight));
                const double wv = scale * (0.5 * kPi * t_rule.w[it]) *
                                  (2.0 * kPi / n_phi) * r * r * st;
                const Vec3 g{r * st * std::cos(phi) + delta.x,
                             r * st * std::sin(phi) + delta.y, r * ct + delta.z};
                const double gn = norm(g);
                f += (rho_w * wv / (gn * gn * gn)) * g;
            }
        }
    }

    // Quadrature is unreliable when the cloud has weight at the singularity.
    const double rs = norm(delta);
    const double st_s = std::hypot(delta.x, delta.y) / rs;
    const double phi_s = std::atan2(-delta.y, -delta.x);
    const double rho_sing = std::norm(amp_scaled(rs, st_s, phi_s, 0.0));
    if (rho_sing > 1e-12 * rho_max) {
        throw std::domain_error("force_ehrenfest_displaced: electron density overlaps the "
                                "Coulomb singularity; quadrature unreliable");
    }
    return f;
}

Vec3 total_momentum(const HybridState& state, const AtomParams& params) {
    if (state.is_adiabatic()) {
        const auto& e = std::get<AdiabaticElectron>(state.electron);
        const CircularPacket view = packet_view(e, params);
        return state.p_p + relative_momentum(view, 0.0);
    }
    const auto& e = std::get<GridElectron1D>(state.electron);
    Split1D prop(e.grid, e.mass, std::vector<double>(e.grid.n, 0.0));
    return state.p_p + Vec3{prop.momentum(e.psi), 0.0, 0.0};
}

void step(HybridState& state, double dt, ForceLaw law, const AtomParams& params) {
    adiabatic_or_throw(state, "step");
    auto& e = std::get<AdiabaticElectron>(state.electron);
    if (law == ForceLaw::ehrenfest) {
        throw std::invalid_argument(
            "step: self-consistent 3-d Ehrenfest propagation is out of scope; "
            "use Ehrenfest1D for mean-field time evolution");
    }
    // dt guard against the classical period at the packet's mean n
    const CircularPacket view = packet_view(e, params);
    const double nb = view.spec.n_bar;
    const double t_kepler = 2.0 * kPi * nb * nb * nb / e.mass;
    if (dt > t_kepler / 1000.0) {
        throw std::invalid_argument("step: dt exceeds the t_kepler/1000 guard");
    }

    const Vec3 f0 = force_adiabatic(state, params);
    state.p_p += 0.5 * dt * f0;
    state.r_p += (dt / params.m_p) * state.p_p;
    for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
        const double en = bound_energy(e.n_lo + static_cast<int>(i), e.mass);
        const double ph = -en * dt / params.hbar;
        e.coeffs[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    const Vec3 f1 = force_adiabatic(state, params);
    state.p_p += 0.5 * dt * f1;
    state.t += dt;
}

TrajectoryRecord run_hybrid(const HybridScenario& scenario, ForceLaw law,
                            const AtomParams& params) {
    if (law == ForceLaw::ehrenfest) {
        throw std::invalid_argument(
            "run_hybrid: 3-d Ehrenfest time evolution is out of scope; the Ehrenfest "
            "force exists in 3-d as an instantaneous functional only (see force_ehrenfest)");
    }
    HybridState state = init_hybrid(scenario.spec, scenario.r_p0, scenario.p_p0, params);
    const TimeScales ts = time_scales(scenario.spec, params);
    const double dt = (scenario.dt > 0.0) ? scenario.dt : ts.t_kepler / 4096.0;
    const long n_steps = std::lround(std::ceil(scenario.horizon_kepler * ts.t_kepler / dt));
    const int stride = std::max(1, scenario.stride);

    TrajectoryRecord rec;
    rec.n_lo = std::get<AdiabaticElectron>(state.electron).n_lo;
    auto sample = [&]() {
        const auto& e = std::get<AdiabaticElectron>(state.electron);
        const CircularPacket view = packet_view(e, params);
        const PacketTables tables(view);
        rec.t.push_back(state.t);
        rec.r_p.push_back(state.r_p);
        rec.p_p.push_back(state.p_p);
        rec.r_e.push_back(state.r_p + tables.center(view, 0.0));
        const Vec3 pe = tables.momentum(view, 0.0);
        rec.p_e.push_back(pe);
        rec.P.push_back(state.p_p + pe);
        rec.energy.push_back(hybrid_energy(state, params));
        rec.norm.push_back(electron_norm2(state));
        std::vector<double> pops(e.coeffs.size());
        for (std::size_t i = 0; i < e.coeffs.size(); ++i) pops[i] = std::norm(e.coeffs[i]);
        rec.populations.push_back(std::move(pops));
    };

    sample();
    for (long k = 1; k <= n_steps; ++k) {
        step(state, dt, law, params);
        if (k % stride == 0 || k == n_steps) sample();
    }
    return rec;
}

// ---------------------------------------------------------------------------

Ehrenfest1D::Ehrenfest1D(const Grid1D& grid, SoftCorePotential pot, double m_electron,
                         double m_proton)
    : grid_(grid), pot_(pot), me_(m_electron), mp_(m_proton) {
    if (!(me_ > 0.0) || !(mp_ > 0.0)) throw std::invalid_argument("Ehrenfest1D: masses must be > 0");
    k_ = fft::wavenumbers(grid_.n, grid_.dx());
    plan_ = std::make_shared<fft::C2C>(grid_.n);
}

double Ehrenfest1D::force(const HybridState& state) const {
    const auto& e = std::get<GridElectron1D>(state.electron);
    const double h = grid_.dx();
    double f = 0.0;
    double n2 = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double rho = std::norm(e.psi[i]);
        f += rho * pot_.deriv(grid_.x(i) - state.r_p.x);
        n2 += rho;
    }
    return f / n2; // +<V'(x_e - r_p)>, pulls the proton toward the cloud
}

void Ehrenfest1D::step(HybridState& state, double dt) const {
    auto& e = std::get<GridElectron1D>(state.electron);
    const int n = grid_.n;

    auto half_kick_and_phase = [&]() {
        const double f = force(state);
        state.p_p.x += 0.5 * dt * f;
        for (int i = 0; i < n; ++i) {
            const double ph = -0.5 * dt * pot_(grid_.x(i) - state.r_p.x);
            e.psi[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
        }
    };

    half_kick_and_phase();
    state.r_p.x += dt * state.p_p.x / mp_;
    plan_->forward(e.psi.data());
    for (int i = 0; i < n; ++i) {
        const double ph = -0.5 * k_[i] * k_[i] / me_ * dt;
        e.psi[i] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    plan_->inverse(e.psi.data());
    half_kick_and_phase();
    state.t += dt;
}

void Ehrenfest1D::step4(HybridState& state, double dt) const {
    // triple-jump composition coefficients
    const double w1 = 1.0 / (2.0 - std::cbrt(2.0));
    const double w0 = 1.0 - 2.0 * w1;
    step(state, w1 * dt);
    step(state, w0 * dt);
    step(state, w1 * dt);
}

double Ehrenfest1D::energy(const HybridState& state) const {
    const auto& e = std::get<GridElectron1D>(state.electron);
    CVec hat = e.psi;
    plan_->forward(hat.data());
    double kin = 0.0;
    double den = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double p2 = std::norm(hat[i]);
        kin += 0.5 * k_[i] * k_[i] / me_ * p2;
        den += p2;
    }
    double pot = 0.0;
    double den_x = 0.0;
    for (int i = 0; i < grid_.n; ++i) {
        const double rho = std::norm(e.psi[i]);
        pot += rho * pot_(grid_.x(i) - state.r_p.x);
        den_x += rho;
    }
    return kin / den + pot / den_x + state.p_p.x * state.p_p.x / (2.0 * mp_);
}

double Ehrenfest1D::electron_momentum(const HybridState& state) const {
    const auto& e = std::get<GridElectron1D>(state.electron);
    CVec hat = e.psi;
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

double Ehrenfest1D::total_momentum(const HybridState& state) const {
    return state.p_p.x + electron_momentum(state);
}

CVec initial_electron_1d(const Hybrid1DScenario& sc) {
    const SoftCorePotential pot{sc.softening};
    const double mu = sc.mass_ratio / (1.0 + sc.mass_ratio);
    switch (sc.init) {
        case Electron1DInit::ground_displaced: {
            Split1D prop(sc.grid, 1.0, sample_potential(sc.grid, pot, sc.r_p0 + sc.displacement));
            return relax_ground(prop).psi;
        }
        case Electron1DInit::relative_ground: {
            Split1D prop(sc.grid, mu, sample_potential(sc.grid, pot, sc.r_p0));
            return relax_ground(prop).psi;
        }
        case Electron1DInit::relative_superposition01: {
            Split1D prop(sc.grid, mu, sample_potential(sc.grid, pot, sc.r_p0));
            auto g = relax_ground(prop);
            auto x = relax_excited(prop, g.psi);
            CVec psi(sc.grid.n);
            const double inv = 1.0 / std::sqrt(2.0);
            for (int i = 0; i < sc.grid.n; ++i) psi[i] = inv * (g.psi[i] + x.psi[i]);
            return psi;
        }
    }
    throw std::logic_error("initial_electron_1d: unknown init kind");
}

Hybrid1DRun run_hybrid_1d(const Hybrid1DScenario& sc, ForceLaw law) {
    Hybrid1DRun run;
    run.scenario = sc;
    run.law = law;
    const SoftCorePotential pot{sc.softening};
    const double h = sc.grid.dx();
    const long n_steps = std::lround(std::ceil(sc.total_time / sc.dt));
    const int stride = std::max(1, sc.stride);

    if (law == ForceLaw::ehrenfest) {
        Ehrenfest1D prop(sc.grid, pot, 1.0, sc.mass_ratio);
        HybridState state;
        state.electron = GridElectron1D{initial_electron_1d(sc), sc.grid, 1.0};
        state.r_p = Vec3{sc.r_p0, 0.0, 0.0};
        state.p_p = Vec3{sc.p_p0, 0.0, 0.0};

        auto sample = [&]() {
            const auto& e = std::get<GridElectron1D>(state.electron);
            double n2 = 0.0;
            double xe = 0.0;
            for (int i = 0; i < sc.grid.n; ++i) {
                const double rho = std::norm(e.psi[i]);
                n2 += rho;
                xe += rho * sc.grid.x(i);
            }
            xe /= n2;
            const double pe = prop.electron_momentum(state);
            run.record.t.push_back(state.t);
            run.record.r_p.push_back(state.r_p);
            run.record.p_p.push_back(state.p_p);
            run.record.r_e.push_back(Vec3{xe, 0.0, 0.0});
            run.record.p_e.push_back(Vec3{pe, 0.0, 0.0});
            run.record.P.push_back(Vec3{state.p_p.x + pe, 0.0, 0.0});
            run.record.energy.push_back(prop.energy(state));
            run.record.norm.push_back(n2 * h);
            if (sc.record_density) {
                std::vector<double> rho(sc.grid.n);
                for (int i = 0; i < sc.grid.n; ++i) rho[i] = std::norm(e.psi[i]);
                run.electron_density.push_back(std::move(rho));
            }
        };

        sample();
        for (long k = 1; k <= n_steps; ++k) {
            if (sc.fourth_order) {
                prop.step4(state, sc.dt);
            } else {
                prop.step(state, sc.dt);
            }
            if (k % stride == 0 || k == n_steps) sample();
        }
        return run;
    }

    // Adiabatic law: expand in soft-core eigenstates attached to r_p. The
    // populations are frozen, the force vanishes, and the proton is free.
    if (sc.p_p0 != 0.0) {
        throw std::invalid_argument("run_hybrid_1d: the 1-d adiabatic law is implemented for a "
                                    "proton at rest (attached basis does not translate)");
    }
    const auto vtab = sample_potential(sc.grid, pot, sc.r_p0);
    const SoftCoreBasis basis = softcore_eigenbasis(sc.grid, 1.0, vtab, sc.adiabatic_states);
    const CVec psi0 = initial_electron_1d(sc);
    CVec a0 = basis.project(psi0, sc.adiabatic_states);
    double captured = 0.0;
    for (const auto& c : a0) captured += std::norm(c);
    if (captured < 1.0 - 1e-8) {
        throw std::runtime_error("run_hybrid_1d: adiabatic basis captures only " +
                                 std::to_string(captured) + " of the initial state; "
                                 "increase adiabatic_states");
    }

    Split1D free_prop(sc.grid, 1.0, vtab);
    run.record.n_lo = 0;
    auto sample_at = [&](double t) {
        CVec a(a0.size());
        for (std::size_t j = 0; j < a0.size(); ++j) {
            const double ph = -basis.energies(static_cast<int>(j)) * t;
            a[j] = a0[j] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        CVec psi(sc.grid.n, {0.0, 0.0});
        for (std::size_t j = 0; j < a.size(); ++j) {
            for (int i = 0; i < sc.grid.n; ++i) psi[i] += a[j] * basis.states(i, static_cast<int>(j));
        }
        double n2 = 0.0;
        double xe = 0.0;
        for (int i = 0; i < sc.grid.n; ++i) {
            const double rho = std::norm(psi[i]);
            n2 += rho;
            xe += rho * sc.grid.x(i);
        }
        xe /= n2;
        const double pe = free_prop.momentum(psi);
        double energy = sc.p_p0 * sc.p_p0 / (2.0 * sc.mass_ratio);
        std::vector<double> pops(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            pops[j] = std::norm(a[j]);
            energy += pops[j] * basis.energies(static_cast<int>(j));
        }
        run.record.t.push_back(t);
        run.record.r_p.push_back(Vec3{sc.r_p0, 0.0, 0.0});
        run.record.p_p.push_back(Vec3{sc.p_p0, 0.0, 0.0});
        run.record.r_e.push_back(Vec3{xe, 0.0, 0.0});
        run.record.p_e.push_back(Vec3{pe, 0.0, 0.0});
        run.record.P.push_back(Vec3{sc.p_p0 + pe, 0.0, 0.0});
        run.record.energy.push_back(energy);
        run.record.norm.push_back(n2 * h);
        run.record.populations.push_back(std::move(pops));
        if (sc.record_density) {
            std::vector<double> rho(sc.grid.n);
            for (int i = 0; i < sc.grid.n; ++i) rho[i] = std::norm(psi[i]);
            run.electron_density.push_back(std::move(rho));
        }
    };

    sample_at(0.0);
    for (long k = 1; k <= n_steps; ++k) {
        if (k % stride == 0 || k == n_steps) sample_at(k * sc.dt);
    }
    return run;
}

} // namespace hatom

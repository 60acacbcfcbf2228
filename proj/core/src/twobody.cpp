#include "hatom/twobody.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hatom {

namespace {

constexpr int kEdgeMargin = 8;
constexpr double kEdgeBudget = 1e-6;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

} // namespace

TwoBodyPropagator::TwoBodyPropagator(const OracleScenario& scenario)
    : scn_(scenario), params_(make_params(scenario.mass_ratio)) {
    grid_ = Grid1D{scn_.grid_points, scn_.box_half_width};
    const int n = grid_.n;
    const double h = grid_.dx();
    const SoftCorePotential pot{scn_.softening};

    if (h > scn_.softening / 4.0) {
        throw std::invalid_argument("OracleScenario: grid spacing must resolve the softening "
                                    "length (dx <= s/4)");
    }

    // doubled relative grid so every lattice value of x_e - x_p is a node
    rel_grid_ = Grid1D{2 * n, 2.0 * scn_.box_half_width};
    rel_prop_ = std::make_shared<Split1D>(rel_grid_, params_.mu,
                                          sample_potential(rel_grid_, pot, 0.0));

    switch (scn_.initial_relative) {
        case RelInit::ground:
            chi0_ = relax_ground(*rel_prop_).psi;
            break;
        case RelInit::superposition01: {
            auto g = relax_ground(*rel_prop_);
            auto x = relax_excited(*rel_prop_, g.psi);
            chi0_.resize(rel_grid_.n);
            const double inv = 1.0 / std::sqrt(2.0);
            for (int i = 0; i < rel_grid_.n; ++i) chi0_[i] = inv * (g.psi[i] + x.psi[i]);
            break;
        }
        case RelInit::displaced_gaussian: {
            chi0_.resize(rel_grid_.n);
            const double w = scn_.gaussian_width;
            for (int i = 0; i < rel_grid_.n; ++i) {
                const double u = rel_grid_.x(i) - scn_.gaussian_center;
                chi0_[i] = std::exp(-u * u / (4.0 * w * w));
            }
            normalize_grid(chi0_, rel_grid_.dx());
            break;
        }
    }

    v_.resize(static_cast<std::size_t>(n) * n);
    for (int ie = 0; ie < n; ++ie)
        for (int ip = 0; ip < n; ++ip)
            v_[static_cast<std::size_t>(ie) * n + ip] = pot(grid_.x(ie) - grid_.x(ip));

    const std::vector<double> k = fft::wavenumbers(n, h);
    kinetic_phase_.resize(v_.size());
    half_potential_phase_.resize(v_.size());
    planned_dt_ = scn_.dt;
    for (int ie = 0; ie < n; ++ie) {
        for (int ip = 0; ip < n; ++ip) {
            const std::size_t idx = static_cast<std::size_t>(ie) * n + ip;
            const double kin = 0.5 * k[ie] * k[ie] / params_.m_e + 0.5 * k[ip] * k[ip] / params_.m_p;
            double ph = -kin * planned_dt_;
            kinetic_phase_[idx] = {std::cos(ph), std::sin(ph)};
            ph = -0.5 * v_[idx] * planned_dt_;
            half_potential_phase_[idx] = {std::cos(ph), std::sin(ph)};
        }
    }
    plan2d_ = std::make_shared<fft::C2C>(n, n);
}

std::complex<double> TwoBodyPropagator::com_value(double R, double time) const {
    // exact free 1-d Gaussian with momentum K: width sigma0, mass M
    const double s0 = scn_.com_width;
    const double M = params_.M;
    const double K = scn_.boost;
    const std::complex<double> g{1.0, time / (2.0 * M * s0 * s0)};
    const double xc = R - scn_.com_center - K / M * time;
    const std::complex<double> arg =
        -xc * xc / (4.0 * s0 * s0 * g) +
        std::complex<double>(0.0, K * (R - scn_.com_center) - K * K * time / (2.0 * M));
    return std::pow(2.0 * M_PI * s0 * s0, -0.25) / std::sqrt(g) * std::exp(arg);
}

TwoBodyField TwoBodyPropagator::assemble_product(const CVec& chi_ext, double time) const {
    const int n = grid_.n;
    TwoBodyField f;
    f.grid = grid_;
    f.softening = scn_.softening;
    f.t = time;
    f.psi.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    const int offset = n; // index of u = x_e - x_p = 0 on the doubled grid
    for (int ie = 0; ie < n; ++ie) {
        for (int ip = 0; ip < n; ++ip) {
            const int iu = (ie - ip) + offset;
            const double R = (params_.m_e * grid_.x(ie) + params_.m_p * grid_.x(ip)) / params_.M;
            f.psi[static_cast<std::size_t>(ie) * n + ip] =
                product_norm_ * chi_ext[iu] * com_value(R, time);
        }
    }
    return f;
}

TwoBodyField TwoBodyPropagator::initial() {
    product_norm_ = 1.0;
    TwoBodyField f = assemble_product(chi0_, 0.0);
    const double n2 = norm2(f);
    const double s = 1.0 / std::sqrt(n2);
    for (auto& c : f.psi) c *= s;
    product_norm_ = s;
    return f;
}

void TwoBodyPropagator::step(TwoBodyField& field, double dt) const {
    if (std::abs(dt - planned_dt_) > 1e-15 * std::abs(planned_dt_)) {
        throw std::invalid_argument("TwoBodyPropagator::step: dt differs from the planned dt");
    }
    const int n = grid_.n;
    auto& psi = field.psi;
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= half_potential_phase_[i];
    plan2d_->forward(psi.data());
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= kinetic_phase_[i];
    plan2d_->inverse(psi.data());
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= half_potential_phase_[i];
    field.t += dt;

    // abort-on-leak boundary policy
    double edge = 0.0;
    double total = 0.0;
    for (int ie = 0; ie < n; ++ie) {
        const bool ie_edge = (ie < kEdgeMargin || ie >= n - kEdgeMargin);
        for (int ip = 0; ip < n; ++ip) {
            const double rho = std::norm(psi[static_cast<std::size_t>(ie) * n + ip]);
            total += rho;
            if (ie_edge || ip < kEdgeMargin || ip >= n - kEdgeMargin) edge += rho;
        }
    }
    if (edge > kEdgeBudget * total) {
        throw std::runtime_error("TwoBodyPropagator: boundary density exceeded 1e-6 of the norm "
                                 "(t = " + std::to_string(field.t) + "); enlarge the box");
    }
}

double TwoBodyPropagator::norm2(const TwoBodyField& field) const {
    double s = 0.0;
    for (const auto& c : field.psi) s += std::norm(c);
    const double h = grid_.dx();
    return s * h * h;
}

Marginals TwoBodyPropagator::marginals(const TwoBodyField& field) const {
    const int n = grid_.n;
    const double h = grid_.dx();
    Marginals m;
    m.electron.assign(n, 0.0);
    m.proton.assign(n, 0.0);
    for (int ie = 0; ie < n; ++ie) {
        for (int ip = 0; ip < n; ++ip) {
            const double rho = std::norm(field.psi[static_cast<std::size_t>(ie) * n + ip]);
            m.electron[ie] += rho;
            m.proton[ip] += rho;
        }
    }
    double tot_e = 0.0;
    double tot_p = 0.0;
    for (int i = 0; i < n; ++i) {
        m.electron[i] *= h;
        m.proton[i] *= h;
        m.x_e += m.electron[i] * grid_.x(i);
        m.x_p += m.proton[i] * grid_.x(i);
        tot_e += m.electron[i];
        tot_p += m.proton[i];
    }
    m.x_e /= tot_e;
    m.x_p /= tot_p;
    return m;
}

std::pair<double, double> TwoBodyPropagator::momenta(const TwoBodyField& field) const {
    const int n = grid_.n;
    CVec hat = field.psi;
    plan2d_->forward(hat.data());
    const std::vector<double> k = fft::wavenumbers(n, grid_.dx());
    double pe = 0.0;
    double pp = 0.0;
    double den = 0.0;
    for (int ie = 0; ie < n; ++ie) {
        for (int ip = 0; ip < n; ++ip) {
            const double w = std::norm(hat[static_cast<std::size_t>(ie) * n + ip]);
            pe += k[ie] * w;
            pp += k[ip] * w;
            den += w;
        }
    }
    return {pe / den, pp / den};
}

double TwoBodyPropagator::total_momentum(const TwoBodyField& field) const {
    const auto [pe, pp] = momenta(field);
    return pe + pp;
}

double TwoBodyPropagator::energy(const TwoBodyField& field) const {
    const int n = grid_.n;
    CVec hat = field.psi;
    plan2d_->forward(hat.data());
    const std::vector<double> k = fft::wavenumbers(n, grid_.dx());
    double kin = 0.0;
    double den_k = 0.0;
    for (int ie = 0; ie < n; ++ie) {
        for (int ip = 0; ip < n; ++ip) {
            const double w = std::norm(hat[static_cast<std::size_t>(ie) * n + ip]);
            kin += (0.5 * k[ie] * k[ie] / params_.m_e + 0.5 * k[ip] * k[ip] / params_.m_p) * w;
            den_k += w;
        }
    }
    double pot = 0.0;
    double den_x = 0.0;
    for (std::size_t i = 0; i < field.psi.size(); ++i) {
        const double rho = std::norm(field.psi[i]);
        pot += v_[i] * rho;
        den_x += rho;
    }
    return kin / den_k + pot / den_x;
}

double TwoBodyPropagator::proton_purity(const TwoBodyField& field) const {
    const int n = grid_.n;
    const double h = grid_.dx();
    using RowMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMat> psi(field.psi.data(), n, n);
    // rho_p(x, x') = h * sum_e psi*(e, x) psi(e, x'); purity = h^2 ||rho_p||_F^2
    RowMat rho = h * (psi.adjoint() * psi);
    const double n2 = norm2(field);
    return h * h * rho.squaredNorm() / (n2 * n2);
}

CVec TwoBodyPropagator::relative_evolved(double time) const {
    CVec chi = chi0_;
    const long steps = std::lround(time / scn_.dt);
    if (std::abs(steps * scn_.dt - time) > 1e-9 * std::max(1.0, std::abs(time))) {
        throw std::invalid_argument("relative_evolved: time must be a multiple of dt");
    }
    for (long s = 0; s < steps; ++s) rel_prop_->step(chi, scn_.dt);
    return chi;
}

OracleRun run_oracle(const OracleScenario& scenario) {
    TwoBodyPropagator prop(scenario);
    TwoBodyField field = prop.initial();
    OracleRun run;
    run.scenario = scenario;
    run.grid = prop.grid();

    const long n_steps = std::lround(std::ceil(scenario.total_time / scenario.dt));
    const int stride = std::max(1, scenario.stride);
    long sample_count = 0;

    auto sample = [&]() {
        const Marginals m = prop.marginals(field);
        const auto [pe, pp] = prop.momenta(field);
        run.record.t.push_back(field.t);
        run.record.r_e.push_back(Vec3{m.x_e, 0.0, 0.0});
        run.record.r_p.push_back(Vec3{m.x_p, 0.0, 0.0});
        run.record.p_e.push_back(Vec3{pe, 0.0, 0.0});
        run.record.p_p.push_back(Vec3{pp, 0.0, 0.0});
        run.record.P.push_back(Vec3{pe + pp, 0.0, 0.0});
        run.record.energy.push_back(prop.energy(field));
        run.record.norm.push_back(prop.norm2(field));
        if (scenario.record_density) run.electron_density.push_back(m.electron);
        if (scenario.purity_every > 0 && sample_count % scenario.purity_every == 0) {
            run.purity_t.push_back(field.t);
            run.purity.push_back(prop.proton_purity(field));
        }
        ++sample_count;
    };

    sample();
    for (long k = 1; k <= n_steps; ++k) {
        prop.step(field, scenario.dt);
        if (k % stride == 0 || k == n_steps) sample();
    }
    return run;
}

ComparisonReport compare_with_hybrid(const OracleRun& oracle, const Hybrid1DRun& hybrid) {
    const auto& os = oracle.scenario;
    const auto& hs = hybrid.scenario;
    if (os.softening != hs.softening || os.mass_ratio != hs.mass_ratio) {
        throw std::invalid_argument("compare_with_hybrid: potential or masses differ");
    }
    if (oracle.grid.n != hs.grid.n || oracle.grid.half_width != hs.grid.half_width) {
        throw std::invalid_argument("compare_with_hybrid: grids differ");
    }
    const auto& ot = oracle.record.t;
    const auto& ht = hybrid.record.t;
    if (ot.size() != ht.size() || ot.empty()) {
        throw std::invalid_argument("compare_with_hybrid: sample counts differ");
    }
    for (std::size_t i = 0; i < ot.size(); ++i) {
        if (std::abs(ot[i] - ht[i]) > 1e-9 * std::max(1.0, std::abs(ot[i]))) {
            throw std::invalid_argument("compare_with_hybrid: sample times differ");
        }
    }
    if (std::abs(hybrid.record.r_p[0].x - oracle.record.r_p[0].x) > 1e-6 ||
        std::abs(hybrid.record.p_p[0].x - oracle.record.p_p[0].x) > 1e-6) {
        throw std::invalid_argument("compare_with_hybrid: initial proton conditions differ "
                                    "(seed the hybrid at the oracle's <x_p>(0), <p_p>(0))");
    }

    ComparisonReport rep;
    rep.t = ot;
    double sq = 0.0;
    for (std::size_t i = 0; i < ot.size(); ++i) {
        const double d = std::abs(oracle.record.r_p[i].x - hybrid.record.r_p[i].x);
        rep.proton_discrepancy_max = std::max(rep.proton_discrepancy_max, d);
        sq += d * d;
        rep.oracle_proton_amplitude = std::max(
            rep.oracle_proton_amplitude, std::abs(oracle.record.r_p[i].x - oracle.record.r_p[0].x));
        rep.hybrid_proton_amplitude = std::max(
            rep.hybrid_proton_amplitude, std::abs(hybrid.record.r_p[i].x - hybrid.record.r_p[0].x));
        rep.oracle_momentum_drift = std::max(
            rep.oracle_momentum_drift, std::abs(oracle.record.P[i].x - oracle.record.P[0].x));
        rep.hybrid_momentum_drift = std::max(
            rep.hybrid_momentum_drift, std::abs(hybrid.record.P[i].x - hybrid.record.P[0].x));
    }
    rep.proton_discrepancy_rms = std::sqrt(sq / ot.size());
    rep.discrepancy_ratio =
        rep.oracle_proton_amplitude / std::max(rep.hybrid_proton_amplitude, 1e-18);
    rep.oracle_momentum_conserved = rep.oracle_momentum_drift < 1e-6;
    rep.hybrid_momentum_conserved = rep.hybrid_momentum_drift < 1e-6;

    if (!oracle.electron_density.empty() && oracle.electron_density.size() == hybrid.electron_density.size()) {
        const double h = oracle.grid.dx();
        double acc = 0.0;
        rep.overlap_min = 2.0;
        for (std::size_t i = 0; i < oracle.electron_density.size(); ++i) {
            double o = 0.0;
            for (std::size_t j = 0; j < oracle.electron_density[i].size(); ++j) {
                o += std::sqrt(oracle.electron_density[i][j] *
                               std::max(0.0, hybrid.electron_density[i][j]));
            }
            o *= h;
            rep.density_overlap.push_back(o);
            rep.overlap_min = std::min(rep.overlap_min, o);
            acc += o;
        }
        rep.overlap_mean = acc / rep.density_overlap.size();
    }

    rep.table[0] = ComparisonRow{
        "electron dynamics",
        "coarse-grained relative-motion packet (density overlap with hybrid: min " +
            fmt(rep.overlap_min) + ", mean " + fmt(rep.overlap_mean) + ")",
        "bare relative-motion packet evolving in the attached well"};
    rep.table[1] = ComparisonRow{
        "proton dynamics",
        "wave-packet center orbits the center of mass (amplitude " +
            fmt(rep.oracle_proton_amplitude) + " a0)",
        (rep.hybrid_proton_amplitude < 1e-12
             ? std::string("behaves as a free particle (motionless, displacement ") +
                   fmt(rep.hybrid_proton_amplitude) + " a0)"
             : std::string("behaves as a free particle (displacement ") +
                   fmt(rep.hybrid_proton_amplitude) + " a0)")};
    rep.table[2] = ComparisonRow{
        "total momentum",
        (rep.oracle_momentum_conserved ? "conserved (max drift " : "NOT conserved (excursion ") +
            fmt(rep.oracle_momentum_drift) + ")",
        (rep.hybrid_momentum_conserved ? "conserved (max drift " : "NOT conserved (excursion ") +
            fmt(rep.hybrid_momentum_drift) + ")"};
    return rep;
}

} // namespace hatom

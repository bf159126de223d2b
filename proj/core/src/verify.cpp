#include "ctma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include <Eigen/Dense>

#include "ctma/errors.hpp"
#include "ctma/integral_law.hpp"
#include "ctma/orlicz.hpp"
#include "ctma/quadrature.hpp"
#include "ctma/rng.hpp"
#include "ctma/simulate.hpp"

namespace ctma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier compensated accumulator.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double term) {
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace

std::complex<double> theoretical_cf(const LevyTriplet& triplet, const Kernel& kernel,
                                    double theta) {
    if (theta == 0.0) return {1.0, 0.0};
    return std::exp(ctma_cumulant(triplet, kernel, theta));
}

EmpiricalCf empirical_cf(std::span<const double> samples,
                         std::span<const double> theta_grid) {
    if (samples.empty()) throw DomainError("empirical_cf: samples must be nonempty");
    EmpiricalCf out;
    const double n = static_cast<double>(samples.size());
    out.cf.reserve(theta_grid.size());
    out.half_width.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        Kahan sc, ss, sc2, ss2;
        for (double x : samples) {
            const double c = std::cos(theta * x);
            const double s = std::sin(theta * x);
            sc.add(c);
            ss.add(s);
            sc2.add(c * c);
            ss2.add(s * s);
        }
        const double mc = sc.value() / n;
        const double ms = ss.value() / n;
        const double vc = std::max(0.0, sc2.value() / n - mc * mc);
        const double vs = std::max(0.0, ss2.value() / n - ms * ms);
        out.cf.emplace_back(mc, ms);
        out.half_width.push_back(1.96 * std::sqrt(std::max(vc, vs) / n));
    }
    return out;
}

CfReport cf_agreement(const LevyTriplet& triplet, const Kernel& kernel,
                      std::int64_t n_paths, std::uint64_t seed,
                      const CfOptions& opts) {
    if (n_paths < 2) throw DomainError("cf_agreement: need n_paths >= 2");
    const double dt = opts.dt;
    const double W = opts.warmup > 0.0 ? opts.warmup : kernel.horizon(1e-12);
    const auto weights = kernel.cell_average_weights(dt, W);
    const auto kw = static_cast<std::int64_t>(weights.w.size());

    // one stationary sample per path: X = Σ_j w[j] ΔL_{kw-1-j} on a
    // minimal increment grid (one covered output node)
    const Grid path_grid{0.0, dt, kw};

    std::vector<double> samples(static_cast<std::size_t>(n_paths));
    const int threads = opts.threads > 0
                            ? opts.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t p = begin; p < end; ++p) {
            const std::uint64_t path_seed = rng::substream_key(seed, 0x5Au, p);
            const auto inc = simulate_increments(triplet, path_grid, path_seed);
            double acc = 0.0;
            for (std::int64_t j = 0; j < kw; ++j)
                acc += weights.w[static_cast<std::size_t>(j)] *
                       inc.increments[static_cast<std::size_t>(kw - 1 - j)];
            samples[static_cast<std::size_t>(p)] = acc;
        }
    };
    if (threads <= 1) {
        worker(0, n_paths);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t chunk = (n_paths + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::int64_t b = t * chunk;
            const std::int64_t e = std::min<std::int64_t>(b + chunk, n_paths);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    CfReport rep;
    for (double th = opts.theta_min; th <= opts.theta_max + 1e-12;
         th += opts.theta_step)
        rep.theta.push_back(th);
    auto emp = empirical_cf(samples, rep.theta);
    rep.empirical = std::move(emp.cf);
    rep.half_width = std::move(emp.half_width);
    rep.theoretical.reserve(rep.theta.size());
    for (double th : rep.theta)
        rep.theoretical.push_back(theoretical_cf(triplet, kernel, th));

    for (std::size_t i = 0; i < rep.theta.size(); ++i) {
        const auto d = rep.empirical[i] - rep.theoretical[i];
        const double dev = std::max(std::abs(d.real()), std::abs(d.imag()));
        const double hw = rep.half_width[i];
        if (dev > hw) ++rep.n_outside;
        if (hw > 0.0) rep.max_excess = std::max(rep.max_excess, dev / hw);
    }
    rep.fraction_outside =
        static_cast<double>(rep.n_outside) / static_cast<double>(rep.theta.size());
    return rep;
}

ResidualCurve density_residual(const Kernel& kernel, const Kernel& target,
                               std::span<const double> shifts, const Grid& grid,
                               std::span<const int> counts) {
    grid.validate();
    if (shifts.empty()) throw DomainError("density_residual: need at least one shift");
    const auto n = static_cast<Eigen::Index>(grid.n);
    const auto m = static_cast<Eigen::Index>(shifts.size());
    const double dt = grid.dt;

    // cell-averaged gridding of the target and the shifted kernels
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double s = grid.time(i);
        y(i) = target.integral(s, s + dt) / dt;
    }
    Eigen::MatrixXd D(n, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const double t = shifts[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < n; ++i) {
            const double s = grid.time(i);
            // (1/dt) ∫_{s}^{s+dt} f(t − u) du
            D(i, j) = kernel.integral(t - s - dt, t - s) / dt;
        }
    }

    std::vector<int> prefix;
    if (counts.empty()) {
        for (int c = 1; c <= static_cast<int>(m); ++c) prefix.push_back(c);
    } else {
        prefix.assign(counts.begin(), counts.end());
        for (int c : prefix)
            if (c < 1 || c > static_cast<int>(m))
                throw DomainError("density_residual: prefix count out of range");
    }

    ResidualCurve curve;
    curve.target = target.label();
    curve.kernel = kernel.label();
    const double y_norm2 = y.squaredNorm() * dt;
    for (int c : prefix) {
        const auto Dc = D.leftCols(c);
        // normal equations with a fixed ridge
        Eigen::MatrixXd G = Dc.transpose() * Dc * dt;
        G.diagonal().array() += 1e-12;
        const Eigen::VectorXd rhs = Dc.transpose() * y * dt;
        const Eigen::VectorXd beta = G.ldlt().solve(rhs);
        if (!beta.allFinite())
            throw Error("density_residual: normal equations failed despite ridge");
        const double res2 = (y - Dc * beta).squaredNorm() * dt;
        curve.shift_counts.push_back(c);
        curve.residual_norms.push_back(std::sqrt(std::max(0.0, res2)));
    }
    (void)y_norm2;
    return curve;
}

FubiniReport fubini_condition(const Kernel& g, const Kernel& mu_density,
                              const LevyTriplet& triplet, double domain_lo,
                              double domain_hi) {
    if (!(domain_hi > domain_lo) || domain_lo < 0.0)
        throw DomainError("fubini_condition: domain must satisfy 0 <= lo < hi");
    FubiniReport rep;

    // μ(A) < ∞ by quadrature with divergence classification at the origin
    auto mu = [&](double u) { return mu_density(u); };
    if (domain_lo == 0.0) {
        const double split = std::min(1.0, domain_hi);
        auto low = quad::classify_lower(mu, split);
        if (low.verdict == quad::Verdict::divergent) {
            rep.mu_mass_finite = false;
            rep.mu_mass = kInf;
        } else if (low.verdict == quad::Verdict::inconclusive) {
            throw QuadratureError("fubini_condition: μ-mass inconclusive", low.value,
                                  low.abs_error);
        } else {
            rep.mu_mass_finite = true;
            rep.mu_mass = low.value;
            if (domain_hi > split)
                rep.mu_mass +=
                    quad::adaptive_geometric(mu, split, domain_hi).value;
        }
    } else {
        rep.mu_mass = quad::adaptive_geometric(mu, domain_lo, domain_hi).value;
        rep.mu_mass_finite = std::isfinite(rep.mu_mass);
    }

    const auto member = membership(triplet, g, 1.0);
    rep.psi_member = member.member_of_L_psi;
    rep.psi1_member = member.member_of_L_psi_p.value_or(false);
    rep.holds = rep.mu_mass_finite && rep.psi1_member;
    rep.notes = rep.holds
                    ? "μ(A) finite and g ∈ L_{Ψ1}"
                    : (!rep.mu_mass_finite ? "μ(A) diverges" : "g ∉ L_{Ψ1}");
    return rep;
}

} // namespace ctma

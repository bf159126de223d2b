#include "ctma/invert.hpp"

#include <cmath>
#include <vector>

#include "ctma/errors.hpp"
#include "ctma/fft.hpp"
#include "ctma/quadrature.hpp"
#include "ctma/special.hpp"

namespace ctma {

RecoveryResult langevin_recover(const SamplePath& x, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("langevin_recover: lambda must be > 0");
    if (x.grid.n < 2 || x.values.size() < 2)
        throw DomainError("langevin_recover: need at least 2 samples");
    const double dt = x.grid.dt;
    RecoveryResult out;
    out.method = "langevin";
    out.lambda = lambda;
    out.recovered.grid = x.grid;
    out.recovered.values.resize(x.values.size());
    out.recovered.values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 1; i < x.values.size(); ++i) {
        const double dX = x.values[i] - x.values[i - 1];
        const double trap = 0.5 * dt * (x.values[i] + x.values[i - 1]);
        acc += dX + lambda * trap;
        out.recovered.values[i] = acc;
    }
    return out;
}

RecoveryResult anticipating_recover(const SamplePath& x) {
    if (x.grid.n < 2 || x.values.size() < 2)
        throw DomainError("anticipating_recover: need at least 2 samples");
    const double dt = x.grid.dt;
    RecoveryResult out;
    out.method = "anticipating";
    out.recovered.grid = x.grid;
    out.recovered.values.resize(x.values.size());
    out.recovered.values[0] = 0.0;
    double integral = 0.0;
    for (std::size_t i = 1; i < x.values.size(); ++i) {
        integral += 0.5 * dt * (x.values[i] + x.values[i - 1]);
        out.recovered.values[i] = integral - x.values[i] + x.values[0];
    }
    return out;
}

double k_alpha(double alpha) {
    if (!(alpha > -1.0 && alpha < 0.0))
        throw DomainError("k_alpha: requires alpha in (-1, 0); the defining "
                          "integral is infinite for alpha >= 0");
    const double value = -M_PI / std::sin(M_PI * alpha); // B(α+1, −α) by reflection
    // cross-check against the defining integral with substitutions at both
    // singular endpoints
    auto f = [alpha](double u) {
        return std::pow(u, alpha) * std::pow(1.0 - u, -alpha - 1.0);
    };
    quad::Options opt;
    opt.rel_tol = 1e-11;
    const double q =
        quad::adaptive_singular_lower(f, 0.0, 0.5, -alpha, opt).value +
        quad::adaptive_singular_upper(f, 0.5, 1.0, alpha + 1.0, opt).value;
    if (std::abs(q - value) > 1e-8 * std::abs(value))
        throw Error("k_alpha: closed form and quadrature disagree");
    return value;
}

SamplePath gamma_to_ou(const SamplePath& x, double alpha, double horizon) {
    if (!(alpha > -1.0 && alpha < 0.0))
        throw DomainError("gamma_to_ou: requires alpha in (-1, 0)");
    if (!(horizon > 0.0)) throw DomainError("gamma_to_ou: horizon must be > 0");
    x.grid.validate();
    const double dt = x.grid.dt;
    const auto M = static_cast<std::int64_t>(std::llround(std::ceil(horizon / dt - 1e-9)));
    if (x.grid.n <= M)
        throw HorizonError("gamma_to_ou: path provides " +
                               std::to_string(static_cast<double>(x.grid.n) * dt) +
                               " time units but the stencil needs more than " +
                               std::to_string(horizon),
                           horizon);

    // μ(du) = φ_{−α−1}(u) du; cell masses are exact incomplete-gamma
    // integrals (u^{−α−1} is integrable at 0 since −α−1 > −1)
    std::vector<double> v(static_cast<std::size_t>(M));
    for (std::int64_t k = 0; k < M; ++k)
        v[static_cast<std::size_t>(k)] = special::gamma_cell_integral(
            -alpha, static_cast<double>(k) * dt, static_cast<double>(k + 1) * dt);

    const double ka = k_alpha(alpha);
    const auto conv = fft::convolve(v, x.values);

    SamplePath out;
    out.grid = {x.grid.time(M), dt, x.grid.n - M};
    out.values.resize(static_cast<std::size_t>(x.grid.n - M));
    for (std::int64_t i = M; i < x.grid.n; ++i)
        out.values[static_cast<std::size_t>(i - M)] =
            conv[static_cast<std::size_t>(i)] / ka;
    return out;
}

RecoveryResult gamma_recover(const SamplePath& x, double alpha, double horizon) {
    const auto ou = gamma_to_ou(x, alpha, horizon);
    auto out = langevin_recover(ou, 1.0);
    out.method = "gamma_to_ou(alpha) + langevin(lambda=1)";
    out.alpha = alpha;
    out.horizon = horizon;
    out.k_alpha_value = k_alpha(alpha);
    return out;
}

PathError recovery_error(const IncrementPath& truth, const RecoveryResult& rec) {
    const auto& g_t = truth.grid;
    const auto& g_r = rec.recovered.grid;
    const double ratio = g_r.dt / g_t.dt;
    const auto q = static_cast<std::int64_t>(std::llround(ratio));
    if (q < 1 || std::abs(ratio - static_cast<double>(q)) > 1e-6)
        throw DomainError("recovery_error: grids are not nested (dt mismatch)");
    const double off = (g_r.t0 - g_t.t0) / g_t.dt;
    const auto o = static_cast<std::int64_t>(std::llround(off));
    if (std::abs(off - static_cast<double>(o)) > 1e-6)
        throw DomainError("recovery_error: grids are not aligned (offset mismatch)");

    const auto truth_nodes = truth.cumulative(); // indices 0..n at t0 + i dt
    const std::int64_t n_nodes = static_cast<std::int64_t>(truth_nodes.size());
    std::int64_t j0 = -1, j1 = -1;
    for (std::int64_t j = 0; j < g_r.n; ++j) {
        const std::int64_t k = o + j * q;
        if (k < 0 || k >= n_nodes) continue;
        if (j0 < 0) j0 = j;
        j1 = j;
    }
    if (j0 < 0) throw DomainError("recovery_error: grids do not overlap");

    const double rec0 = rec.recovered.values[static_cast<std::size_t>(j0)];
    const double truth0 = truth_nodes[static_cast<std::size_t>(o + j0 * q)];
    double sup = 0.0, sq = 0.0;
    std::int64_t count = 0;
    for (std::int64_t j = j0; j <= j1; ++j) {
        const std::int64_t k = o + j * q;
        const double d = (rec.recovered.values[static_cast<std::size_t>(j)] - rec0) -
                         (truth_nodes[static_cast<std::size_t>(k)] - truth0);
        sup = std::max(sup, std::abs(d));
        sq += d * d;
        ++count;
    }
    return {sup, std::sqrt(sq / static_cast<double>(count))};
}

double mu_mass_above_cutoff(double alpha, double cutoff, double horizon) {
    if (!(cutoff > 0.0 && horizon > cutoff))
        throw DomainError("mu_mass_above_cutoff: need 0 < cutoff < horizon");
    auto f = [alpha](double u) { return std::pow(u, -alpha - 1.0) * std::exp(-u); };
    return quad::adaptive_geometric(f, cutoff, horizon).value;
}

} // namespace ctma

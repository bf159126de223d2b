#include "ctma/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ctma/errors.hpp"
#include "ctma/fft.hpp"
#include "ctma/quadrature.hpp"
#include "ctma/rng.hpp"

namespace ctma {

std::vector<double> IncrementPath::cumulative() const {
    std::vector<double> out(increments.size() + 1, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < increments.size(); ++i) {
        acc += increments[i];
        out[i + 1] = acc;
    }
    return out;
}

IncrementPath aggregate(const IncrementPath& fine, std::int64_t factor) {
    if (factor < 1) throw DomainError("aggregate: factor must be >= 1");
    if (fine.grid.n % factor != 0)
        throw DomainError("aggregate: n must be divisible by factor");
    IncrementPath out;
    out.grid = {fine.grid.t0, fine.grid.dt * static_cast<double>(factor),
                fine.grid.n / factor};
    out.seed = fine.seed;
    out.scheme = fine.scheme;
    out.increments.resize(static_cast<std::size_t>(out.grid.n), 0.0);
    for (std::int64_t i = 0; i < fine.grid.n; ++i)
        out.increments[static_cast<std::size_t>(i / factor)] +=
            fine.increments[static_cast<std::size_t>(i)];
    return out;
}

namespace {

// Inverse-CDF table for the restriction of a density Lévy measure to
// {|x| > eps}, one table per charged side.
class JumpTable {
public:
    JumpTable(const LevyMeasure& nu, double eps) {
        for (int side : {+1, -1}) {
            if ((side > 0 && !nu.charges_positive()) ||
                (side < 0 && !nu.charges_negative()))
                continue;
            Side s;
            s.sign = side;
            const double xmax =
                std::max(nu.tail().cutoff(1e-16 * std::max(nu.mass_above(eps), 1e-300)),
                         4.0 * eps);
            const int bins = 2048;
            const double ratio = std::pow(xmax / eps, 1.0 / bins);
            s.edges.resize(bins + 1);
            s.cum.resize(bins + 1, 0.0);
            double x = eps;
            s.edges[0] = x;
            for (int i = 1; i <= bins; ++i) {
                const double next = x * ratio;
                auto f = [&](double u) { return nu.density_at(side * u); };
                s.cum[i] = s.cum[i - 1] + quad::gauss_kronrod_15(f, x, next).value;
                s.edges[i] = next;
                x = next;
            }
            s.total = s.cum.back();
            if (s.total > 0.0) sides_.push_back(std::move(s));
        }
        total_ = 0.0;
        for (const auto& s : sides_) total_ += s.total;
    }

    double total_rate() const { return total_; }

    double sample(rng::CellRng& rng) const {
        double u = rng.uniform() * total_;
        for (const auto& s : sides_) {
            if (u > s.total && &s != &sides_.back()) {
                u -= s.total;
                continue;
            }
            u = std::min(u, s.total);
            const auto it = std::upper_bound(s.cum.begin(), s.cum.end(), u);
            std::size_t hi = std::min<std::size_t>(it - s.cum.begin(), s.cum.size() - 1);
            if (hi == 0) hi = 1;
            const double c0 = s.cum[hi - 1], c1 = s.cum[hi];
            const double frac = c1 > c0 ? (u - c0) / (c1 - c0) : 0.5;
            const double x = s.edges[hi - 1] + frac * (s.edges[hi] - s.edges[hi - 1]);
            return s.sign * x;
        }
        return 0.0;
    }

private:
    struct Side {
        int sign = +1;
        std::vector<double> edges, cum;
        double total = 0.0;
    };
    std::vector<Side> sides_;
    double total_ = 0.0;
};

} // namespace

IncrementPath simulate_increments(const LevyTriplet& triplet, const Grid& grid,
                                  std::uint64_t seed, const SmallJumpOptions& opts) {
    grid.validate();
    const double dt = grid.dt;
    const auto n = static_cast<std::size_t>(grid.n);
    const LevyMeasure& nu = triplet.nu();

    IncrementPath out;
    out.grid = grid;
    out.seed = seed;
    out.increments.resize(n);

    double drift = triplet.gamma();
    double gauss_sd = std::sqrt(triplet.b() * dt);
    double jump_rate = 0.0;
    std::function<double(rng::CellRng&)> sampler;

    if (!nu.is_zero() && nu.finite_activity()) {
        // exact scheme: Poisson counts with the exact jump law, compensator
        // ∫τ dν folded into the drift
        jump_rate = nu.total_mass();
        drift -= nu.tau_mean_above(std::min(1e-12, dt));
        sampler = nu.exact_jump_sampler();
        if (!sampler)
            throw DomainError("simulate_increments: finite-activity measure without sampler");
    } else if (!nu.is_zero()) {
        // infinite activity: big jumps exact above ε, small jumps replaced by
        // a variance-matched Gaussian
        const double target = opts.sigma_factor * std::sqrt(dt);
        double lo = 1e-14, hi = 1.0;
        if (std::sqrt(nu.var_below(hi)) > target) {
            for (int i = 0; i < 80; ++i) {
                const double mid = std::sqrt(lo * hi);
                (std::sqrt(nu.var_below(mid)) > target ? hi : lo) = mid;
            }
        } else {
            lo = hi;
        }
        double eps = std::max(lo, opts.epsilon_floor);
        bool capped = false;
        while (nu.mass_above(eps) * dt > opts.max_mean_jumps_per_cell) {
            eps *= 2.0;
            capped = true;
        }
        const double sig = std::sqrt(nu.var_below(eps));
        out.scheme.epsilon = eps;
        out.scheme.sigma_epsilon = sig;
        out.scheme.cost_capped = capped;
        jump_rate = nu.mass_above(eps);
        out.scheme.big_jump_rate = jump_rate;
        drift -= nu.tau_mean_above(eps);
        gauss_sd = std::sqrt((triplet.b() + sig * sig) * dt);
        auto table = std::make_shared<JumpTable>(nu, eps);
        jump_rate = table->total_rate(); // table-consistent rate
        out.scheme.big_jump_rate = jump_rate;
        sampler = [table](rng::CellRng& g) { return table->sample(g); };
    }

    const double drift_cell = drift * dt;
    const double mean_jumps = jump_rate * dt;
    for (std::size_t i = 0; i < n; ++i) {
        rng::CellRng rng(seed, 0, static_cast<std::uint64_t>(i));
        double incr = drift_cell;
        if (gauss_sd > 0.0) incr += gauss_sd * rng.normal();
        if (jump_rate > 0.0) {
            const auto count = rng.poisson(mean_jumps);
            for (std::uint64_t j = 0; j < count; ++j) incr += sampler(rng);
        }
        out.increments[i] = incr;
    }
    return out;
}

SamplePath simulate_ctma(const Kernel& kernel, const IncrementPath& inc,
                         double warmup) {
    inc.grid.validate();
    const double dt = inc.grid.dt;
    const double W = warmup > 0.0 ? warmup : kernel.default_warmup();
    const auto weights = kernel.cell_average_weights(dt, W);
    const auto kw = static_cast<std::int64_t>(weights.w.size());
    const std::int64_t n = inc.grid.n;

    // node i is covered when the lag stencil fits inside the increment cells
    const std::int64_t lo_i = kw + weights.first_lag;
    const std::int64_t hi_i = n + weights.first_lag;
    if (hi_i < lo_i)
        throw HorizonError("simulate_ctma: increment path shorter than the "
                           "kernel stencil; need horizon " +
                               std::to_string(static_cast<double>(kw) * dt),
                           static_cast<double>(kw) * dt);

    const auto conv = fft::convolve(weights.w, inc.increments);

    SamplePath out;
    out.grid = {inc.grid.time(lo_i), dt, hi_i - lo_i + 1};
    out.values.resize(static_cast<std::size_t>(hi_i - lo_i + 1));
    for (std::int64_t i = lo_i; i <= hi_i; ++i)
        out.values[static_cast<std::size_t>(i - lo_i)] =
            conv[static_cast<std::size_t>(i - 1 - weights.first_lag)];
    return out;
}

SamplePath simulate_ou_exact(double lambda, const IncrementPath& inc, double x0) {
    if (!(lambda > 0.0)) throw DomainError("simulate_ou_exact: lambda must be > 0");
    inc.grid.validate();
    const double a = std::exp(-lambda * inc.grid.dt);
    SamplePath out;
    out.grid = {inc.grid.t0, inc.grid.dt, inc.grid.n + 1};
    out.values.resize(static_cast<std::size_t>(inc.grid.n) + 1);
    double x = x0;
    out.values[0] = x;
    for (std::size_t i = 0; i < inc.increments.size(); ++i) {
        x = a * (x + inc.increments[i]);
        out.values[i + 1] = x;
    }
    return out;
}

} // namespace ctma

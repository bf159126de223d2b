#include "ctma/schema.hpp"

#include <cmath>

#include "ctma/csv.hpp"
#include "ctma/errors.hpp"

namespace ctma {

namespace {

Tail parse_tail(const std::string& s, double default_coef) {
    if (s.empty()) throw ConfigError("custom_density: tail descriptor required");
    const auto colon = s.find(':');
    const std::string kind = s.substr(0, colon);
    const double v = colon == std::string::npos ? 0.0 : std::stod(s.substr(colon + 1));
    if (kind == "exponential") return Tail::exponential(default_coef, v);
    if (kind == "power") return Tail::power(default_coef, v);
    if (kind == "compact") return Tail::compact(v);
    throw ConfigError("custom_density: unknown tail kind '" + kind + "'");
}

} // namespace

LevyTriplet make_triplet(const TripletSpec& spec) {
    const std::string& fam = spec.family;
    if (fam == "gaussian") {
        return LevyTriplet(spec.gamma, spec.b, LevyMeasure::zero());
    }
    if (fam == "compound_poisson") {
        LevyMeasure nu = LevyMeasure::zero();
        if (spec.jumps == "atoms") {
            if (spec.atom_locations.size() != spec.atom_masses.size() ||
                spec.atom_locations.empty())
                throw ConfigError(
                    "compound_poisson: atom_locations/atom_masses must be "
                    "nonempty and of equal length");
            std::vector<Atom> law;
            for (std::size_t i = 0; i < spec.atom_locations.size(); ++i)
                law.push_back({spec.atom_locations[i], spec.atom_masses[i]});
            nu = LevyMeasure::compound_poisson_atoms(spec.rate, std::move(law));
        } else if (spec.jumps == "normal") {
            nu = LevyMeasure::compound_poisson_normal(spec.rate, spec.jump_mean,
                                                      spec.jump_stddev);
        } else if (spec.jumps == "two_sided_exponential") {
            nu = LevyMeasure::compound_poisson_two_sided_exponential(spec.rate,
                                                                     spec.jump_decay);
        } else {
            throw ConfigError("compound_poisson: unknown jump law '" + spec.jumps +
                              "'");
        }
        return LevyTriplet(spec.gamma, spec.b, std::move(nu));
    }
    if (fam == "gamma_subordinator") {
        return LevyTriplet(spec.gamma, spec.b,
                           LevyMeasure::gamma_subordinator(spec.shape, spec.rate));
    }
    if (fam == "alpha_stable") {
        return LevyTriplet(spec.gamma, spec.b,
                           LevyMeasure::alpha_stable(spec.index, spec.skew, spec.scale));
    }
    if (fam == "custom_density") {
        if (spec.coef_pos <= 0.0 && spec.coef_neg <= 0.0)
            throw ConfigError("custom_density: needs coef_pos or coef_neg > 0");
        const double cp = std::max(spec.coef_pos, 0.0);
        const double cm = std::max(spec.coef_neg, 0.0);
        const double power = spec.power;
        const double decay = spec.decay;
        LevyMeasure::DensitySpec d;
        d.rho = [cp, cm, power, decay](double x) {
            const double ax = std::abs(x);
            return (x > 0.0 ? cp : cm) * std::pow(ax, -power) *
                   std::exp(-decay * ax);
        };
        d.positive_side = cp > 0.0;
        d.negative_side = cm > 0.0;
        d.beta = spec.beta >= 0.0 ? spec.beta : power;
        if (!spec.tail.empty())
            d.tail = parse_tail(spec.tail, std::max(cp, cm));
        else if (decay > 0.0)
            d.tail = Tail::exponential(std::max(cp, cm), decay);
        else if (power > 1.0)
            d.tail = Tail::power(std::max(cp, cm), power);
        else
            throw ConfigError("custom_density: no integrable tail; provide `tail`");
        d.symmetric = cp == cm;
        d.finite_activity = d.beta < 1.0;
        d.label = "custom_density";
        return LevyTriplet(spec.gamma, spec.b, LevyMeasure::density(std::move(d)));
    }
    throw ConfigError("unknown triplet family '" + fam + "'");
}

Kernel make_kernel(const KernelSpec& spec) {
    const std::string& fam = spec.family;
    if (fam == "ou") return Kernel::ou(spec.lambda);
    if (fam == "gamma") return Kernel::gamma(spec.alpha);
    if (fam == "carma") return Kernel::carma(spec.a, spec.b);
    if (fam == "anticipating_ou") return Kernel::anticipating_ou();
    if (fam == "custom") {
        if (spec.samples_file.empty())
            throw ConfigError("custom kernel: samples_file required");
        auto path = csv::read_path(spec.samples_file);
        if (spec.dt > 0.0 &&
            std::abs(path.grid.dt - spec.dt) > 1e-9 * std::max(path.grid.dt, spec.dt))
            throw ConfigError("custom kernel: dt does not match the samples file");
        const double t0 = path.grid.t0;
        const double dt = path.grid.dt;
        const auto values = path.values;
        const double t_end = t0 + dt * static_cast<double>(values.size());
        Kernel::CustomSpec c;
        c.f = [t0, dt, values](double s) {
            const auto i = static_cast<std::int64_t>(std::floor((s - t0) / dt));
            if (i < 0 || i >= static_cast<std::int64_t>(values.size())) return 0.0;
            return values[static_cast<std::size_t>(i)];
        };
        if (spec.support == "causal")
            c.support = Support::causal;
        else if (spec.support == "anticausal")
            c.support = Support::anticausal;
        else if (spec.support == "two_sided")
            c.support = Support::two_sided;
        else
            throw ConfigError("custom kernel: unknown support '" + spec.support + "'");
        c.lo = t0;
        c.hi = t_end;
        c.singularity_exponent = 0.0;
        c.tail = Tail::compact(std::max(std::abs(t0), std::abs(t_end)));
        c.label = "custom(" + spec.samples_file + ")";
        return Kernel::custom(std::move(c));
    }
    throw ConfigError("unknown kernel family '" + fam + "'");
}

} // namespace ctma

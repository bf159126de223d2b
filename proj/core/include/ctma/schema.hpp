#ifndef CTMA_SCHEMA_HPP
#define CTMA_SCHEMA_HPP

#include <string>
#include <vector>

#include "ctma/kernels.hpp"
#include "ctma/levy.hpp"

namespace ctma {

/// Named-family triplet specification, shared between in-process callers
/// and the CLI. Families: gaussian{b}, compound_poisson{rate, jumps:
/// atoms|normal|two_sided_exponential}, gamma_subordinator{shape, rate},
/// alpha_stable{index, skew, scale}, custom_density{coef/power/decay, beta,
/// tail}. `gamma` (drift) and `b` (Gaussian variance) may be set for any
/// family.
struct TripletSpec {
    std::string family = "gaussian";
    double gamma = 0.0;
    double b = 0.0;
    // compound_poisson
    double rate = 1.0;
    std::string jumps = "atoms";
    std::vector<double> atom_locations;
    std::vector<double> atom_masses;
    double jump_mean = 0.0;
    double jump_stddev = 1.0;
    double jump_decay = 1.0;
    // gamma_subordinator (rate shared with compound_poisson)
    double shape = 1.0;
    // alpha_stable
    double index = 1.5;
    double skew = 0.0;
    double scale = 1.0;
    // custom_density: rho(x) = coef_side |x|^{-power} e^{-decay |x|}
    double coef_pos = 0.0;
    double coef_neg = 0.0;
    double power = 0.0;
    double decay = 0.0;
    double beta = -1.0;      // < 0 → defaults to `power`
    std::string tail;        // "exponential:RATE" | "power:P" | "compact:XMAX"
};

LevyTriplet make_triplet(const TripletSpec& spec);

/// Kernel specification: ou{lambda}, gamma{alpha}, carma{a, b},
/// anticipating_ou{}, custom{samples_file, dt, support}.
struct KernelSpec {
    std::string family = "ou";
    double lambda = 1.0;
    double alpha = 0.0;
    std::vector<double> a;
    std::vector<double> b;
    std::string samples_file;
    double dt = 0.0;
    std::string support = "causal";
};

Kernel make_kernel(const KernelSpec& spec);

} // namespace ctma

#endif

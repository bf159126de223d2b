#include "ctma/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ctma/errors.hpp"

namespace ctma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double h_raw(const LevyTriplet& t, double r) {
    if (r == 0.0) return 0.0;
    return std::abs(t.gamma() * r + t.nu().tau_compensator(r));
}

// golden-section maximization of a continuous function on [a, b]
double golden_max(const std::function<double(double)>& f, double a, double b,
                  int iters = 60) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && (b - a) > 1e-12 * (std::abs(a) + std::abs(b) + 1.0);
         ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return std::max(fc, fd);
}

} // namespace

double h_function(const LevyTriplet& t, double r) { return h_raw(t, r); }

double h_sup(const LevyTriplet& t, double r) {
    if (r == 0.0) return 0.0;
    const double ar = std::abs(r);
    // H(cr) = |γ c r| for symmetric or jump-free measures: monotone in |c|.
    if (t.nu().is_zero() || t.nu().symmetric())
        return std::abs(t.gamma()) * ar;
    // Chebyshev grid on c ∈ [0, 1] (evenness of Ψ reduces |c| ≤ 1 to this),
    // then local refinement around the best node.
    constexpr int kNodes = 65;
    double best = 0.0;
    int best_i = 0;
    std::vector<double> vals(kNodes);
    for (int i = 0; i < kNodes; ++i) {
        const double c = 0.5 * (1.0 + std::cos(M_PI * double(kNodes - 1 - i) /
                                               double(kNodes - 1)));
        vals[i] = h_raw(t, c * ar);
        if (vals[i] > best) {
            best = vals[i];
            best_i = i;
        }
    }
    auto node = [&](int i) {
        return 0.5 *
               (1.0 + std::cos(M_PI * double(kNodes - 1 - i) / double(kNodes - 1)));
    };
    const double lo = node(std::max(0, best_i - 1));
    const double hi = node(std::min(kNodes - 1, best_i + 1));
    if (hi > lo) {
        const double refined =
            golden_max([&](double c) { return h_raw(t, c * ar); }, lo, hi, 40);
        best = std::max(best, refined);
    }
    return best;
}

YoungFunction young_psi(const LevyTriplet& t) {
    YoungFunction psi;
    psi.provenance = "psi " + t.label();
    psi.eval = [t](double r) {
        if (r == 0.0) return 0.0;
        return h_sup(t, r) + t.b() * r * r + t.nu().trunc_quadratic(r);
    };
    return psi;
}

YoungFunction young_psi_p(const LevyTriplet& t, double p) {
    if (p < 0.0) throw DomainError("young_psi_p: p must be >= 0");
    if (p == 0.0) {
        auto psi = young_psi(t);
        psi.p = 0.0;
        psi.provenance = "psi_p(p=0) " + t.label();
        return psi;
    }
    const auto moment = t.nu().power_moment_above_one(p);
    if (moment.verdict != quad::Verdict::finite)
        throw DomainError("L lacks finite p-moment (p=" + std::to_string(p) + ")");
    YoungFunction psi;
    psi.p = p;
    psi.provenance = "psi_p(p=" + std::to_string(p) + ") " + t.label();
    psi.eval = [t, p](double r) {
        if (r == 0.0) return 0.0;
        return h_sup(t, r) + t.b() * r * r + t.nu().psi_p_jump(r, p);
    };
    return psi;
}

double complementary_young(const YoungFunction& psi, double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    auto d = [&](double y) { return ax * y - psi(y); };
    // probe for an unbounded supremum: D grows along doubling y once |x|
    // exceeds the asymptotic slope of Ψ
    double best = 0.0, best_y = 0.0;
    for (double y = 1e-8; y <= 0x1p61; y *= 2.0) {
        const double v = d(y);
        if (v > best) {
            best = v;
            best_y = y;
        }
    }
    if (best_y >= 0x1p59 && best > std::max(1.0, 1e6 * ax)) return kInf;
    if (best_y == 0.0) return 0.0; // D ≤ 0 everywhere probed
    const double refined = golden_max(d, best_y * 0.5, best_y * 2.0, 80);
    return std::max(best, refined);
}

double phi_functional(const LevyTriplet& t, double r, std::optional<double> p) {
    if (r == 0.0) return 0.0;
    const double jump =
        p && *p > 0.0 ? t.nu().psi_p_jump(r, *p) : t.nu().trunc_quadratic(r);
    return h_raw(t, r) + t.b() * r * r + jump;
}

quad::Classified phi_integral(const LevyTriplet& t, const Kernel& f,
                              std::optional<double> p) {
    const double H = std::max(f.horizon(1e-14), 1.0);
    auto one_side = [&](int side) -> quad::Classified {
        auto g = [&](double x) {
            const double v = f(side * x);
            return v == 0.0 ? 0.0 : phi_functional(t, std::abs(v), p);
        };
        auto low = quad::classify_lower(g, 1.0);
        if (low.verdict != quad::Verdict::finite) return low;
        quad::Options opt;
        opt.max_panels = 8000;
        auto up = quad::adaptive_geometric(g, 1.0, H, opt);
        quad::Classified out = low;
        out.evals += up.evals;
        if (!up.converged) {
            out.verdict = quad::Verdict::inconclusive;
            return out;
        }
        out.value += up.value;
        out.abs_error += up.abs_error;
        return out;
    };
    switch (f.support()) {
        case Support::causal: return one_side(+1);
        case Support::anticausal: return one_side(-1);
        case Support::two_sided: {
            auto a = one_side(+1);
            if (a.verdict != quad::Verdict::finite) return a;
            auto b = one_side(-1);
            b.value += a.value;
            b.abs_error += a.abs_error;
            b.evals += a.evals;
            return b;
        }
    }
    return {};
}

namespace {

// Fixed node/weight set for ∫ over the support of f, reused across the
// Luxemburg bisection so every constraint evaluation sees the same grid.
struct SupportNodes {
    std::vector<double> s;
    std::vector<double> w;
};

SupportNodes support_nodes(const Kernel& f) {
    // GK15 nodes per geometric panel: (0,1] toward 0, then [1, H] doubling.
    static const double* xgk = [] {
        static double nodes[15];
        // Kronrod abscissae on [-1,1]
        static const double x[8] = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.0};
        for (int j = 0; j < 7; ++j) {
            nodes[j] = -x[j];
            nodes[14 - j] = x[j];
        }
        nodes[7] = 0.0;
        return nodes;
    }();
    static const double wgk[15] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
        0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
        0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
        0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
        0.022935322010529224963732008058970};

    SupportNodes out;
    auto add_panel = [&](double a, double b, int sign) {
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int j = 0; j < 15; ++j) {
            out.s.push_back(sign * (c + h * xgk[j]));
            out.w.push_back(wgk[j] * h);
        }
    };
    const double H = std::max(f.horizon(1e-14), 1.0);
    auto add_side = [&](int sign) {
        for (int k = 0; k < 60; ++k) {
            const double hi = std::pow(0.5, k);
            add_panel(0.5 * hi, hi, sign);
        }
        // [1, H]: split each doubling panel into 4 for accuracy
        for (double a = 1.0; a < H; a *= 2.0) {
            const double b = std::min(2.0 * a, H);
            const double step = (b - a) / 4.0;
            for (int j = 0; j < 4; ++j) add_panel(a + j * step, a + (j + 1) * step, sign);
        }
    };
    switch (f.support()) {
        case Support::causal: add_side(+1); break;
        case Support::anticausal: add_side(-1); break;
        case Support::two_sided:
            add_side(+1);
            add_side(-1);
            break;
    }
    return out;
}

} // namespace

double luxemburg_norm(const YoungFunction& psi, const Kernel& f) {
    const auto nodes = support_nodes(f);
    std::vector<double> fabs(nodes.s.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < nodes.s.size(); ++i) {
        fabs[i] = std::abs(f(nodes.s[i]));
        all_zero = all_zero && fabs[i] == 0.0;
    }
    if (all_zero) return 0.0;

    auto constraint = [&](double a) {
        double sum = 0.0, comp = 0.0; // Neumaier
        for (std::size_t i = 0; i < fabs.size(); ++i) {
            if (fabs[i] == 0.0) continue;
            const double term = nodes.w[i] * psi(fabs[i] / a);
            const double t = sum + term;
            comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                                    : (term - t) + sum;
            sum = t;
        }
        return sum + comp;
    };

    // membership guard: ∫Ψ(|f|) must be finite
    const double at_one = constraint(1.0);
    if (!std::isfinite(at_one))
        throw DomainError("luxemburg_norm: kernel not in L_Psi");

    // bracket the solution of constraint(a) = 1 (constraint decreasing in a)
    double hi = 1.0;
    while (constraint(hi) > 1.0) {
        hi *= 2.0;
        if (hi > 1e12)
            throw DomainError("luxemburg_norm: kernel not in L_Psi (no finite gauge)");
    }
    double lo = hi;
    while (constraint(lo) <= 1.0) {
        lo *= 0.5;
        if (lo < 1e-14) return 0.0; // gauge degenerates (bounded Ψ, small f)
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double c = constraint(mid);
        if (std::abs(c - 1.0) <= 1e-8) return mid;
        (c > 1.0 ? lo : hi) = mid;
        if ((hi - lo) <= 1e-13 * hi) break;
    }
    return 0.5 * (lo + hi);
}

IntegrabilityReport membership(const LevyTriplet& t, const Kernel& f,
                               std::optional<double> p, bool with_norm) {
    IntegrabilityReport rep;
    rep.kernel_label = f.label();
    rep.triplet_label = t.label();
    rep.p = p;

    const auto rule = integrability_rule(f, t);
    if (rule) rep.analytic_rule = rule->rule;

    // Non-stationary CARMA has no CTMA kernel to integrate.
    if (rule && rule->carma_stationary && !*rule->carma_stationary) {
        rep.member_of_L_psi = false;
        return rep;
    }

    const auto numeric = phi_integral(t, f);
    if (numeric.verdict == quad::Verdict::inconclusive)
        throw QuadratureError("membership: ∫Φ(|f|) inconclusive", numeric.value,
                              numeric.abs_error);
    rep.member_of_L_psi = numeric.verdict == quad::Verdict::finite;
    if (rep.member_of_L_psi) rep.quadrature_value = numeric.value;

    if (rule && rule->member != rep.member_of_L_psi)
        throw VerdictConflictError(
            "membership: analytic rule says " +
            std::string(rule->member ? "member" : "non-member") +
            " but quadrature says the opposite (" + rule->rule +
            "); tighten tolerances before trusting either");

    if (p) {
        const auto pm = t.nu().power_moment_above_one(*p);
        if (pm.verdict != quad::Verdict::finite) {
            rep.member_of_L_psi_p = false;
        } else {
            const auto num_p = phi_integral(t, f, p);
            if (num_p.verdict == quad::Verdict::inconclusive)
                throw QuadratureError("membership: ∫Φ_p(|f|) inconclusive",
                                      num_p.value, num_p.abs_error);
            rep.member_of_L_psi_p = num_p.verdict == quad::Verdict::finite;
        }
    }

    if (with_norm && rep.member_of_L_psi)
        rep.luxemburg = luxemburg_norm(young_psi(t), f);
    return rep;
}

} // namespace ctma

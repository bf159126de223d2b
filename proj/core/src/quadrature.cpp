#include "ctma/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "ctma/errors.hpp"

namespace ctma::quad {

namespace {

// Nodes and weights of the (G7, K15) pair on [-1, 1], as in QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv[j] + fv[14 - j]);
    for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
    const double value = resk * h;
    double err = std::abs((resk - resg) * h);
    // QUADPACK-style error sharpening.
    double resabs = 0.0;
    for (int j = 0; j < 7; ++j) resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    resabs = (resabs + kWgk[7] * std::abs(fv[7])) * std::abs(h);
    if (resabs > 0.0 && err > 0.0)
        err = resabs * std::min(1.0, std::pow(200.0 * err / resabs, 1.5));
    return {a, b, value, err};
}

} // namespace

Result gauss_kronrod_15(const Fn& f, double a, double b) {
    Panel p = eval_panel(f, a, b);
    return {p.value, p.error, 15, true};
}

Result adaptive(const Fn& f, double a, double b, const Options& opt) {
    return adaptive_split(f, a, b, {}, opt);
}

Result adaptive_split(const Fn& f, double a, double b,
                      const std::vector<double>& breakpoints, const Options& opt) {
    Result res;
    if (!(b > a)) {
        res.converged = true;
        return res;
    }
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<Panel> heap;
    double total = 0.0, toterr = 0.0;
    long evals = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = eval_panel(f, edges[i], edges[i + 1]);
        evals += 15;
        total += p.value;
        toterr += p.error;
        heap.push(p);
    }
    int panels = static_cast<int>(heap.size());
    while (toterr > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           panels < opt.max_panels) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // cannot split further
            heap.push(worst);
            break;
        }
        Panel l = eval_panel(f, worst.a, mid);
        Panel r = eval_panel(f, mid, worst.b);
        evals += 30;
        total += l.value + r.value - worst.value;
        toterr += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++panels;
    }
    res.value = total;
    res.abs_error = toterr;
    res.evals = evals;
    res.converged = toterr <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    return res;
}

Result adaptive_geometric(const Fn& f, double a, double b, const Options& opt) {
    std::vector<double> breaks;
    if (a > 0.0)
        for (double x = 2.0 * a; x < b; x *= 2.0) breaks.push_back(x);
    return adaptive_split(f, a, b, breaks, opt);
}

Result adaptive_singular_lower(const Fn& f, double a, double b, double p,
                               const Options& opt) {
    if (p <= 0.0) return adaptive(f, a, b, opt);
    if (p >= 1.0)
        throw DomainError("adaptive_singular_lower: endpoint exponent must be < 1");
    const double q = 1.0 - p;
    // x = a + u^{1/q}, dx = (1/q) u^{1/q - 1} du, u in (0, (b-a)^q]
    auto g = [&](double u) {
        const double x = a + std::pow(u, 1.0 / q);
        return f(x) * (1.0 / q) * std::pow(u, 1.0 / q - 1.0);
    };
    return adaptive(g, 0.0, std::pow(b - a, q), opt);
}

Result adaptive_singular_upper(const Fn& f, double a, double b, double p,
                               const Options& opt) {
    auto reflected = [&](double x) { return f(a + b - x); };
    return adaptive_singular_lower(reflected, a, b, p, opt);
}

namespace {

// Shared panel-ratio classification for classify_lower / classify_upper.
// next_panel(k) must return the integral of f over the k-th panel, with the
// panels exhausting the domain monotonically.
Classified classify_panels(const std::function<double(int)>& next_panel,
                           const Options& opt, int max_steps) {
    Classified out;
    std::vector<double> panel(max_steps, 0.0);
    double sum = 0.0;
    const int window = 6;
    int tiny_run = 0;
    for (int k = 0; k < max_steps; ++k) {
        double pk = next_panel(k);
        out.evals += 15;
        out.panels = k + 1;
        if (!std::isfinite(pk)) {
            out.verdict = Verdict::divergent;
            out.value = sum;
            return out;
        }
        panel[k] = pk;
        sum += pk;
        if (sum > 1e300) {
            out.verdict = Verdict::divergent;
            out.value = sum;
            return out;
        }
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(sum));
        if (pk < tol / 8.0) {
            if (++tiny_run >= 3) {
                out.verdict = Verdict::finite;
                out.value = sum;
                out.abs_error = 8.0 * tol;
                return out;
            }
            continue;
        }
        tiny_run = 0;
        if (k + 1 >= window) {
            double rho_max = 0.0;
            bool all_positive = true;
            for (int j = k - window + 2; j <= k; ++j) {
                if (panel[j - 1] <= 0.0) {
                    all_positive = false;
                    break;
                }
                rho_max = std::max(rho_max, panel[j] / panel[j - 1]);
            }
            if (all_positive && rho_max < 0.95) {
                const double remainder = panel[k] * rho_max / (1.0 - rho_max);
                if (remainder < tol) {
                    out.verdict = Verdict::finite;
                    out.value = sum;
                    out.abs_error = remainder;
                    return out;
                }
            }
            // Non-decaying positive panels: the series cannot converge.
            if (all_positive && k + 1 >= 24) {
                bool nondecaying = true;
                for (int j = k - window + 2; j <= k; ++j)
                    if (panel[j] < 0.999 * panel[j - 1]) {
                        nondecaying = false;
                        break;
                    }
                if (nondecaying && panel[k] > opt.abs_tol) {
                    out.verdict = Verdict::divergent;
                    out.value = sum;
                    return out;
                }
            }
        }
    }
    out.verdict = Verdict::inconclusive;
    out.value = sum;
    return out;
}

} // namespace

Classified classify_lower(const Fn& f, double b, const Options& opt) {
    if (!(b > 0.0)) return {Verdict::finite, 0.0, 0.0, 0, 0};
    auto next = [&](int k) {
        const double hi = b * std::pow(0.5, k);
        const double lo = 0.5 * hi;
        return eval_panel(f, lo, hi).value;
    };
    // 1000 halvings reach ~1e-300 b, past which the remaining mass of any
    // integrable singularity is negligible.
    return classify_panels(next, opt, 1000);
}

Classified classify_upper(const Fn& f, double a, const Options& opt) {
    if (!(a > 0.0)) throw DomainError("classify_upper: lower limit must be > 0");
    auto next = [&](int k) {
        const double lo = a * std::pow(2.0, k);
        const double hi = 2.0 * lo;
        return eval_panel(f, lo, hi).value;
    };
    return classify_panels(next, opt, 1000);
}

double classified_value(const Classified& c, const char* what) {
    if (c.verdict == Verdict::finite) return c.value;
    if (c.verdict == Verdict::divergent)
        throw QuadratureError(std::string(what) + ": integral diverges", c.value, 0.0);
    throw QuadratureError(std::string(what) + ": quadrature inconclusive", c.value,
                          c.abs_error);
}

} // namespace ctma::quad

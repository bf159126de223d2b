#ifndef CTMA_SPECIAL_HPP
#define CTMA_SPECIAL_HPP

namespace ctma::special {

/// Regularized lower incomplete gamma P(a, x) = γ(a, x) / Γ(a), a > 0, x ≥ 0.
double gamma_p(double a, double x);

/// Unnormalized lower incomplete gamma γ(a, x) = ∫_0^x t^{a-1} e^{-t} dt.
double lower_gamma(double a, double x);

/// ∫_{x1}^{x2} t^{a-1} e^{-t} dt for 0 ≤ x1 ≤ x2, a > 0. Stable for narrow
/// cells: series differences near the origin, direct Gauss-Kronrod away
/// from it.
double gamma_cell_integral(double a, double x1, double x2);

/// Euler beta function B(a, b).
double beta(double a, double b);

} // namespace ctma::special

#endif

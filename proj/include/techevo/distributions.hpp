#pragma once
// Student-t and F tail probabilities backed by a continued-fraction
// evaluation of the regularized incomplete beta function.

namespace techevo {

// I_x(a, b) for a, b > 0 and x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with df degrees of freedom (df >= 1).
double t_cdf(double t, double df);

// Two-sided tail P(|T| >= |t|). Computed from the tail directly so that
// large |t| keeps its relative precision.
double t_two_sided_p(double t, double df);

// Upper tail P(F >= f) for an F(d1, d2) distribution.
double f_sf(double f, double d1, double d2);

}  // namespace techevo

#ifndef GRNET_STUDENT_T_HPP
#define GRNET_STUDENT_T_HPP

namespace grnet {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
/// [0, 1], evaluated with the Lentz continued fraction. Absolute accuracy is
/// near machine precision over the parameter ranges this toolkit uses
/// (a = df/2 up to ~1e3, b = 1/2).
double incomplete_beta(double a, double b, double x);

/// Two-tailed Student-t p-value: p = I_{df/(df+t^2)}(df/2, 1/2).
/// p(0, df) == 1 exactly; monotone decreasing in |t| for fixed df.
/// Throws ArgumentError for non-finite t or df <= 0.
double student_t_two_tailed_p(double t, double df);

}  // namespace grnet

#endif

#pragma once

#include <vector>

#include "qp/bi_series.hpp"
#include "qp/series_family.hpp"

namespace qp {

/// Raised when two routes that must agree exactly do not.
class IdentityError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// Generating function Phi(t, G) = sum_{i>=2} h_{2i}(G) t^{i-2} of simple
/// boundary blocks, solved order by order in G from
///   Phi = G + (G/t) { (t+1)Phi / (1 - (t+1)Phi) - h4/(1 - h4) },  h4 = Phi(0).
/// The bracket must vanish at t = 0 at every order; the solver checks it and
/// throws IdentityError otherwise.
BiSeries solve_phi(int degree, int order);

struct ParametricH4 {
  PowerSeries C;   ///< C(G), inverse of G = C/(1+C)^3
  PowerSeries h4;  ///< C(1-C)/(1+C-C^2) composed with C(G)
};
ParametricH4 parametric_h4(int order);

/// [G^p] h4 from the closed Lagrange-inversion sum in Q(sqrt5). Throws if the
/// sqrt5 part survives or the value is not a nonnegative integer.
Rational lagrange_h4(int p);

/// Y(t, G) on the branch with Y(0) = -C^2.
BiSeries kernel_Y(int degree, int order);

/// Phi = C^2 / (Y (1 + C + Y)) + 1/(t+1).
BiSeries phi_from_kernel(int degree, int order);
/// Phi = C (1 + C - C^2 + Y) / ((1 + C + Y)((1+C)^2 + Y)).
BiSeries phi_from_kernel_factored(int degree, int order);

/// Residual of Y^2 + (1 + C^2 - C(t-1)) Y + C^2 (1+C)(t+1).
BiSeries kernel_residual(const BiSeries& Y, const PowerSeries& C);
/// (1 + C + Y)(C^2 + Y) / (C (Y - C - C^2)); equals t on either branch.
BiSeries t_from_Y(const BiSeries& Y, const PowerSeries& C);
/// The other root, -(1 + C^2 - C(t-1)) - Y.
BiSeries other_determination(const BiSeries& Y, const PowerSeries& C);
/// C(1+C)((1+C)^2 + Y_from) / (Y_from - C(1+C)), which maps one root to the other.
BiSeries involution(const BiSeries& Y_from, const PowerSeries& C);
/// Residual of the quadratic form of the Phi equation in the C parametrization.
BiSeries phi_quadratic_residual(const BiSeries& phi, const PowerSeries& C);

/// t_1 = 0, t_k = (t_{k-1}+1) Phi(t_{k-1}) / (1 - (t_{k-1}+1) Phi(t_{k-1})).
/// Entry 0 is zero; the limit is C(G).
SeriesFamily iterate_t(int max_index, int order);
/// Same recursion driven by a caller-supplied Phi; Phi needs t-degree >= order.
SeriesFamily iterate_t(int max_index, const BiSeries& phi);

struct KernelBundle {
  PowerSeries C;
  std::vector<PowerSeries> h_table;  ///< h_{2i}(G) for i = 2 .. degree+2
  BiSeries phi;
  BiSeries Y;
  PowerSeries aux_g4;  ///< h4 / (1 - h4)
};
KernelBundle build_kernel_bundle(int degree, int order);

}  // namespace qp

#pragma once

#include "qp/bi_series.hpp"
#include "qp/kernel.hpp"
#include "qp/series_family.hpp"

namespace qp {

/// Explicit solutions written in the uniformizing variable x, plus the two
/// changes of variable x(G) and x(g).
struct XParam {
  PowerSeries x_of_G;  ///< inverse of G = x(1+x^2)^2/(1+x+x^2)^3
  PowerSeries x_of_g;  ///< inverse of g = x(1+x+x^2)/(1+4x+x^2)^2
  PowerSeries alpha;   ///< fixed points of the Moebius map, in x
  PowerSeries beta;
  SeriesFamily W;         ///< W_k = x^{k+2}
  SeriesFamily Y;         ///< Y_k in x, k >= 1
  SeriesFamily closed_t;  ///< t_k in x
  SeriesFamily closed_r;  ///< r_k = 1 + t_k in x
  SeriesFamily closed_R;  ///< R_k(g) written in x
  SeriesFamily closed_G;  ///< G_k(g) written in x
};

/// Builds every family to order N in x for k = 1..K and checks the internal
/// identities (Moebius recursion, fixed points, the kernel relation at t_k).
/// Throws IdentityError on the first mismatch.
XParam closed_forms_x(int max_index, int order);

/// Writes an x-series family in G via x(G) and truncates.
SeriesFamily in_G(const SeriesFamily& fam, const XParam& xp, int order);
/// Writes an x-series family in g via x(g) and truncates.
SeriesFamily in_g(const SeriesFamily& fam, const XParam& xp, int order);

/// G(g) = g R_1(g)^2.
PowerSeries G_of_g(int order);

/// Phi(T, g) = sum_i h_{2i}(g) T^{i-2} with h_{2i}(g) = R_1^{-i} h~_{2i}(G(g)).
BiSeries general_phi(int degree, int order);

/// R_k(g) rebuilt as R_1 * r_k(G(g)) from the simple-map recursion; checks it
/// against the baseline together with the general-map recursion for T_k.
/// Throws IdentityError on mismatch.
SeriesFamily bridge_to_general(int max_index, int order);

/// G_k(g) from the explicit x-formula, checked against the baseline R_k and
/// G_k and against the closed form of R_infinity. Throws IdentityError.
SeriesFamily closed_two_point(int max_index, int order);

}  // namespace qp

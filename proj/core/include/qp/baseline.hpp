#pragma once

#include "qp/series_family.hpp"

namespace qp {

/// R_0..R_K in g to order N from R_k = 1 + g R_k (R_{k-1} + R_k + R_{k+1}),
/// R_0 = 0. The limit field holds R_infinity.
SeriesFamily solve_R_family(int max_index, int order);

/// Unique solution of R = 1 + 3 g R^2 with R(0) = 1.
PowerSeries solve_R_infinity(int order);

/// R_1 = R_inf - g R_inf^3.
PowerSeries compute_R1(int order);

/// G_k = R_{k+1} - R_{k-1} - [k == 1] for 1 <= k <= K-1; entry 0 is zero.
SeriesFamily assemble_G(const SeriesFamily& R);

/// T_k = R_k - R_1; entry 0 is zero and entry 1 vanishes.
SeriesFamily T_family(const SeriesFamily& R);

}  // namespace qp

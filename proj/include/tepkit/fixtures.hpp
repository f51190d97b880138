#pragma once

// Small exact matrices used as fixed witnesses in tests and in trial 0 of the
// law suite. JSON copies live under fixtures/ (E1.T.json, E2.A.json,
// E3.A.json, E3.T.json).

#include "tepkit/matrix_core.hpp"

namespace tepkit::fixtures {

// [[0,1,0],[0,0,0],[0,0,1]]: a partial isometry with singular values 1, 1, 0.
CMatrix skip_isometry();

// [[0,1,1],[0,0,0],[0,1,1]]: T-hermitian for T = skip_isometry(), hence
// T-normal and T-EP, but not EP.
CMatrix t_hermitian_not_ep();

// [[0,1,0],[0,0,1],[0,0,0]]: the nilpotent shift, a partial isometry.
CMatrix shift_isometry();

// [[0,1,1],[0,0,1],[0,0,0]]: T-EP for T = shift_isometry() but not T-normal.
CMatrix t_ep_not_t_normal();

}  // namespace tepkit::fixtures

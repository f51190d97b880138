#include "tepkit/fixtures.hpp"

namespace tepkit::fixtures {

CMatrix skip_isometry() { return from_rows({{0, 1, 0}, {0, 0, 0}, {0, 0, 1}}); }

CMatrix t_hermitian_not_ep() { return from_rows({{0, 1, 1}, {0, 0, 0}, {0, 1, 1}}); }

CMatrix shift_isometry() { return from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}); }

CMatrix t_ep_not_t_normal() { return from_rows({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}); }

}  // namespace tepkit::fixtures

#include "sumcheck/catalog.hpp"

namespace sumcheck {

void register_bern2_series(std::vector<IdentityRecord>& v) {
  (void)v;
}

} // namespace sumcheck

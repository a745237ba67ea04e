#include "sumcheck/catalog.hpp"

namespace sumcheck {

void register_zeta_series(std::vector<IdentityRecord>& v) {
  (void)v;
}

} // namespace sumcheck

#include "sumcheck/catalog.hpp"

namespace sumcheck {

void register_binomial_entries(std::vector<IdentityRecord>& v) {
  (void)v;
}

} // namespace sumcheck

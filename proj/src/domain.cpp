#include "prodint/domain.hpp"

namespace prodint {

domain_registry domain_registry::builtin() {
  domain_registry r;
  r.add({"interval", /*has_finite_height=*/false, /*widening_is_join=*/false});
  r.add({"parity", true, true});
  r.add({"sign", true, true});
  // Not finite height, but ascending chains are finite, so join widens.
  r.add({"congruence", false, true});
  r.add({"bool", true, true});
  r.add({"diff", false, false});
  return r;
}

} // namespace prodint

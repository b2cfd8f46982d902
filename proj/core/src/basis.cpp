#include "m3k/basis.hpp"

#include <stdexcept>

#include "m3k/connectivity.hpp"
#include "m3k/elasticity.hpp"

namespace m3k {

std::vector<Mask> bases(const Matroid& m) { return bases_of(m); }

bool is_basis(const Matroid& m, Mask b) {
  return (b & ~m.ground()) == 0 && count(b) == m.rank() && m.rank(b) == m.rank();
}

namespace {

void require_basis(const Matroid& m, Mask b) {
  if (!is_basis(m, b))
    throw std::invalid_argument("not a basis: " + format_mask(b));
}

}  // namespace

Mask removable_elements(const Matroid& m, Mask basis) {
  require_basis(m, basis);
  Mask out = 0;
  for (int e = 0; e < m.size(); ++e) {
    const SiCoPair p = sico(m, e);
    if (has_bit(basis, e) ? p.si_3connected : p.co_3connected) out |= bit(e);
  }
  return out;
}

Mask nb_robust(const Matroid& m, const Matroid& n, Mask basis) {
  require_basis(m, basis);
  Mask out = 0;
  for (int e = 0; e < m.size(); ++e) {
    const Matroid removed =
        has_bit(basis, e) ? minor(m, bit(e), 0).first : minor(m, 0, bit(e)).first;
    if (has_minor(removed, n)) out |= bit(e);
  }
  return out;
}

Mask nb_strong(const Matroid& m, const Matroid& n, Mask basis) {
  require_basis(m, basis);
  Mask out = 0;
  for (int e = 0; e < m.size(); ++e) {
    const SiCoPair p = sico(m, e);
    if (has_bit(basis, e)) {
      if (p.si_3connected && has_minor(p.si_contract, n)) out |= bit(e);
    } else {
      if (p.co_3connected && has_minor(p.co_delete, n)) out |= bit(e);
    }
  }
  return out;
}

}  // namespace m3k

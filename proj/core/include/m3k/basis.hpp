#pragma once

#include <vector>

#include "m3k/matroid.hpp"

namespace m3k {

// All bases of m, ascending mask order.
std::vector<Mask> bases(const Matroid& m);

bool is_basis(const Matroid& m, Mask b);

// e is removable w.r.t. basis B when e in B and si(M/e) is 3-connected, or
// e outside B and co(M\e) is 3-connected.
Mask removable_elements(const Matroid& m, Mask basis);

// e in B with an N-minor of M/e, or e outside B with an N-minor of M\e.
Mask nb_robust(const Matroid& m, const Matroid& n, Mask basis);

// As robust, but si(M/e) (resp. co(M\e)) must also be 3-connected with an
// N-minor.
Mask nb_strong(const Matroid& m, const Matroid& n, Mask basis);

}  // namespace m3k

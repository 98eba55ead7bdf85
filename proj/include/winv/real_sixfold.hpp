#pragma once

#include "winv/geometry.hpp"
#include "winv/rational.hpp"
#include "winv/session.hpp"

namespace winv {

// Each listed insertion is a conjugate pair of constraints; the remaining
// k = (class degree) + l - (sum of codimensions) constraints are real points.

// P3 with the involution without fixed points, m_i in {1,2,3}
Rational rgw_p3(Session& s, long d, Tuple m);
// (P1)^3 with the involution fixing a torus factor-wise, m_i in {0,1}^3
Rational rgw_product(Session& s, Vec3 d, std::vector<Vec3> m);
// (P1)^3 with the involution swapping two factors; class a(L1+L2) + bL3,
// insertions H1'^x H2'^y written as (x, y)
Rational rgw_twisted(Session& s, Pair2 d, std::vector<Pair2> m);

}  // namespace winv

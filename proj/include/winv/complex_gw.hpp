#pragma once

#include "winv/geometry.hpp"
#include "winv/rational.hpp"
#include "winv/session.hpp"

namespace winv {

// genus-0 invariants with point insertions only
Rational gw_p2(Session& s, long d);
Rational gw_p1p1(Session& s, long a, long b);
// sum of N_{a,b} over a + b = d
Rational gw_p1p1_total(Session& s, long d);
Rational gw_blowup(Session& s, BlowupClass v);

// <H^{m_1},...,H^{m_l}>_d on P3
Rational gw_p3(Session& s, long d, Tuple m);
// <H^{m_1},...>_d on (P1)^3, m_i in {0,1}^3
Rational gw_p1cubed(Session& s, Vec3 d, std::vector<Vec3> m);
// complex invariant in the H' basis of the twisted involution, degree (a,b)
// meaning a(L1+L2) + bL3 on the real side
Rational gw_p1cubed_halfbasis(Session& s, Pair2 d, std::vector<Pair2> m);

}  // namespace winv

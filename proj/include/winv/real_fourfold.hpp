#pragma once

#include "winv/geometry.hpp"
#include "winv/rational.hpp"
#include "winv/session.hpp"

namespace winv {

// Welschinger invariants with l conjugate pairs of points; the remaining
// constraints are real points
Rational wel_p2(Session& s, long d, long l);
// P1xP1 with the involution swapping the factors, class of bidegree (d,d)
Rational wel_twisted(Session& s, long d, long l);
// P1xP1 with the product involution, bidegree (a,b)
Rational wel_product(Session& s, long a, long b, long l);
// P2 blown up at r = v.a.size() real points and s = v.b.size() conjugate pairs
Rational wel_blowup(Session& s, RealBlowupClass v, long l);

}  // namespace winv

#pragma once

#include "todaslice/group.hpp"
#include "todaslice/random.hpp"
#include "todaslice/slodowy.hpp"
#include "todaslice/toda.hpp"

namespace todaslice {

// Random draws used by suites and tests.  All are well-conditioned: group
// elements stay near the identity in a fixed scale, torus values lie in an
// annulus around 1.

AlgVec random_algvec(const LieAlgebra& L, Rng& rng, double scale = 1.0);
AlgVec random_u(const LieAlgebra& L, Rng& rng, double scale = 1.0);
AlgVec random_cartan(const LieAlgebra& L, Rng& rng, double scale = 1.0);
GrpElt random_group(const LieAlgebra& L, Rng& rng, double spread = 0.4);
BorelElt random_borel(const LieAlgebra& L, Rng& rng, double spread = 0.5);
TodaPoint random_toda_point(const LieAlgebra& L, Rng& rng);
// Real a, and c of one sign bounded away from zero.
TodaPoint random_real_toda_point(const LieAlgebra& L, Rng& rng);
SregPoint random_sreg(const Slice& S, Rng& rng, double scale = 1.0);
// Element of H_0^x: random b part plus nonzero simple-negative part.
AlgVec random_h0x(const LieAlgebra& L, Rng& rng);

}  // namespace todaslice

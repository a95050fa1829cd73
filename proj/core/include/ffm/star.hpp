#pragma once

#include "ffm/mode_field.hpp"

namespace ffm {

// Non-commutative product induced by group composition of momenta:
//   (f1 * f2)(m) = (1/w_m) sum_{i,j} w_i w_j f1_i f2_j c_m(g_i g_j),
// where c_m are the CIC deposition weights of the composed chart momentum.
// At a = 0 composition is exact lattice addition and this is the truncated
// convolution of the ordinary pointwise product. Couplings whose composed
// momentum leaves the ball are dropped; the dropped bilinear mass
// sum w_i w_j |f1_i||f2_j| is accumulated into *dropped when given.
ModeField star(const ModeField& f1, const ModeField& f2, double* dropped = nullptr);

ModeField star_commutator(const ModeField& f1, const ModeField& f2);

// Weighted L2 norm of (f1*f2)*f3 - f1*(f2*f3). Group multiplication is
// associative, so only deposition breaks this; it shrinks ~h^2 as the grid
// refines.
double associator_norm(const ModeField& f1, const ModeField& f2, const ModeField& f3);

}  // namespace ffm

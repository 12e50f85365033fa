#pragma once

#include "grshull/grs.hpp"
#include "grshull/lattice.hpp"

namespace grshull {

// Whether the counted bound on c is attained exactly or only from above.
enum class Exactness { Exact, UpperBound };

// Failure pairs with e1 < e2 satisfy e1 + e2 = L (mod lambda) and
// e1 = e2 (mod tau); dropping the rho exclusion makes them the T lattice.
Lattice lattice_T(const CodeParams& params);

// The excluded pairs additionally satisfy e1 = e2 (mod rho), i.e. the
// difference is 0 mod lcm(tau, rho).
Lattice lattice_P(const CodeParams& params);

// First point of the T lattice in closed form, dispatched on the parities
// of lambda and tau and on rho = 2.
FirstPoint first_point_T_closed_form(const CodeParams& params);

// First point of the P lattice in closed form. The line index is the
// smallest integer at or above (eps*pi - L)/lambda with the parity that
// makes the resulting coordinate integral.
FirstPoint first_point_P_closed_form(const CodeParams& params);

// Number of ordered failure pairs with both exponents below k.
long long count_F(const CodeParams& params, long long k);

// The condition under which count_F equals the Gram rank exactly.
bool exactness_condition(const CodeParams& params, long long k);

// Full closed-form hull computation for dimension k.
struct HullComputation {
    CodeParams params;
    long long k = 0;
    SublatticePair t_points;
    SublatticePair p_points;
    long long count_t = 0;       // T-lattice points below k
    long long count_p = 0;       // P-lattice points below k
    long long failure_count = 0; // = 2 * (count_t - count_p)
    Exactness exactness = Exactness::UpperBound;

    long long c() const { return failure_count; }
    long long hull_dim() const { return k - failure_count; }
};

HullComputation compute_hull(const CodeParams& params, long long k);

// Condensed (hull dimension, c, exactness) triple.
struct HullDimension {
    long long hull_dim = 0;
    long long c = 0;
    Exactness exactness = Exactness::UpperBound;
};

HullDimension hull_dim_formula(const CodeParams& params, long long k);

}  // namespace grshull

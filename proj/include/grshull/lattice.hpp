#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace grshull {

// Congruence lattice L_{A,B,C}: the set of integer pairs (e1, e2) with
//   0 <= e1 < e2,  e1 + e2 = A (mod B),  e1 = e2 (mod C).
// Points live on the descending lines f(t): y = -x + t*B + A and the
// ascending lines g(eps): y = x + eps*C, so every point is indexed by a
// pair (t, eps) with eps >= 1.
struct Lattice {
    long long a = 0;  // residue target for e1 + e2, a >= 0
    long long b = 2;  // modulus for e1 + e2, b > 1
    long long c = 2;  // modulus for e2 - e1, c > 1
};

// A lattice point together with its line coordinates.
struct FirstPoint {
    long long d1 = 0;   // e1 of the point
    long long d2 = 0;   // e2 of the point
    long long t = 0;    // index of the descending line through it
    long long eps = 0;  // index of the ascending line through it
};

// Minimal points of the two sublattices cut out by the parity of t.
// first1 is the global minimum (t = t* mod 2); first2 is the minimum of the
// complementary class and is absent exactly when that class is empty.
struct SublatticePair {
    FirstPoint first1;
    std::optional<FirstPoint> first2;
};

// Ceiling of x/y for y > 0 and any sign of x.
constexpr long long ceil_div(long long x, long long y) {
    return x >= 0 ? (x + y - 1) / y : -((-x) / y);
}

// True when the lattice has no points at all (b, c even with a odd).
bool is_empty(const Lattice& lat);

// Membership test for a single pair.
bool is_point(const Lattice& lat, long long e1, long long e2);

// The intersection f(t) and g(eps) when it is a valid lattice point:
// e1 = (t*b + a - eps*c) / 2 must be a non-negative integer and eps >= 1.
std::optional<std::pair<long long, long long>> point_at(const Lattice& lat,
                                                        long long t,
                                                        long long eps);

// Colexicographically minimal point of the lattice (smallest e2, then e1),
// or nothing for an empty lattice. Scans t upward from the first line that
// can reach a non-negative point; on each line only eps in {1, 2} need
// checking because (c, -c) moves reduce any point to one of those.
std::optional<FirstPoint> first_point(const Lattice& lat);

// Minimal points of the even/odd-t sublattices, derived in closed form from
// the global first point fp (which must be first_point(lat)).
SublatticePair sublattice_first_points(const Lattice& lat, const FirstPoint& fp);

// Number of lattice points with e2 < k, via the sublattice decomposition and
// a closed-form sum per sublattice.
long long count_below(const Lattice& lat, long long k);

// Same count but using already-computed sublattice first points.
long long count_below(const Lattice& lat, const SublatticePair& subs, long long k);

// Independent oracle: exhaustive double loop over 0 <= e1 < e2 < k.
long long count_below_bruteforce(const Lattice& lat, long long k);

}  // namespace grshull

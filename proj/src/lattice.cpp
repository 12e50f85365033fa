#include "grshull/lattice.hpp"

#include <stdexcept>

namespace grshull {

namespace {

void check_shape(const Lattice& lat) {
    if (lat.a < 0) throw std::invalid_argument("lattice residue a must be non-negative");
    if (lat.b <= 1) throw std::invalid_argument("lattice modulus b must exceed 1");
    if (lat.c <= 1) throw std::invalid_argument("lattice modulus c must exceed 1");
}

// Count of points (e2 < k) in one sublattice starting at fp. Every point is
// fp + i*(b, b) + j*(-cstep, cstep) for unique i, j >= 0, so for each i the
// admissible j are 0 .. min(floor((d1 + i*b)/cstep), ceil((k - d2 - i*b)/cstep) - 1),
// the two caps enforcing e1 >= 0 and e2 < k respectively.
long long sublattice_count(const FirstPoint& fp, long long b, long long cstep,
                           long long k) {
    if (k <= fp.d2) return 0;
    const long long imax = ceil_div(k - fp.d2 - b, b);
    long long total = 0;
    for (long long i = 0; i <= imax; ++i) {
        const long long down = (fp.d1 + i * b) / cstep;
        const long long up = ceil_div(k - fp.d2 - i * b, cstep) - 1;
        total += (down < up ? down : up) + 1;
    }
    return total;
}

}  // namespace

bool is_empty(const Lattice& lat) {
    check_shape(lat);
    return lat.b % 2 == 0 && lat.c % 2 == 0 && lat.a % 2 != 0;
}

bool is_point(const Lattice& lat, long long e1, long long e2) {
    check_shape(lat);
    if (e1 < 0 || e1 >= e2) return false;
    return (e1 + e2 - lat.a) % lat.b == 0 && (e2 - e1) % lat.c == 0;
}

std::optional<std::pair<long long, long long>> point_at(const Lattice& lat,
                                                        long long t,
                                                        long long eps) {
    check_shape(lat);
    if (eps < 1) return std::nullopt;
    const long long num = t * lat.b + lat.a - eps * lat.c;
    if (num < 0 || num % 2 != 0) return std::nullopt;
    const long long e1 = num / 2;
    return std::make_pair(e1, e1 + eps * lat.c);
}

std::optional<FirstPoint> first_point(const Lattice& lat) {
    if (is_empty(lat)) return std::nullopt;
    const long long tmin = ceil_div(lat.c - lat.a, lat.b);
    // A point appears within a couple of parity cycles of tmin.
    const long long tmax = tmin + 2 * lat.c + 4;
    for (long long t = tmin; t <= tmax; ++t) {
        for (long long eps = 1; eps <= 2; ++eps) {
            const long long num = t * lat.b + lat.a - eps * lat.c;
            if (num >= 0 && num % 2 == 0)
                return FirstPoint{num / 2, num / 2 + eps * lat.c, t, eps};
        }
    }
    throw std::logic_error("first_point: scan window exhausted");
}

SublatticePair sublattice_first_points(const Lattice& lat, const FirstPoint& fp) {
    check_shape(lat);
    SublatticePair out{fp, std::nullopt};
    const bool b_even = lat.b % 2 == 0;
    const bool c_even = lat.c % 2 == 0;
    if (c_even && !b_even) return out;  // complementary parity class is empty
    if (b_even) {
        out.first2 = FirstPoint{fp.d1 + lat.b / 2, fp.d2 + lat.b / 2, fp.t + 1, fp.eps};
    } else if (fp.eps == 2) {
        // b, c odd: slide down one ascending line while crossing to t+1.
        out.first2 = FirstPoint{fp.d1 + (lat.b + lat.c) / 2,
                                fp.d2 + (lat.b - lat.c) / 2, fp.t + 1, 1};
    } else {
        // b, c odd with eps = 1: the crossing lands on g(2) and may need l
        // extra (b, b) steps to make e1 non-negative.
        const long long l = ceil_div((lat.c - lat.b) / 2 - fp.d1, lat.b);
        out.first2 = FirstPoint{fp.d1 + (lat.b - lat.c) / 2 + l * lat.b,
                                fp.d2 + (lat.b + lat.c) / 2 + l * lat.b,
                                fp.t + 1 + 2 * l, 2};
    }
    return out;
}

long long count_below(const Lattice& lat, long long k) {
    auto fp = first_point(lat);
    if (!fp) return 0;
    return count_below(lat, sublattice_first_points(lat, *fp), k);
}

long long count_below(const Lattice& lat, const SublatticePair& subs, long long k) {
    check_shape(lat);
    const long long cstep = lat.c % 2 == 0 ? lat.c / 2 : lat.c;
    long long total = sublattice_count(subs.first1, lat.b, cstep, k);
    if (subs.first2) total += sublattice_count(*subs.first2, lat.b, cstep, k);
    return total;
}

long long count_below_bruteforce(const Lattice& lat, long long k) {
    check_shape(lat);
    long long total = 0;
    for (long long e2 = 1; e2 < k; ++e2)
        for (long long e1 = 0; e1 < e2; ++e1)
            if ((e1 + e2 - lat.a) % lat.b == 0 && (e2 - e1) % lat.c == 0) ++total;
    return total;
}

}  // namespace grshull

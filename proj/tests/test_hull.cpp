#include <numeric>
#include <vector>

#include "doctest.h"
#include "grshull/grs.hpp"
#include "grshull/hull.hpp"
#include "grshull/lattice.hpp"

using namespace grshull;

namespace {

const std::vector<long long> kPrimePowers = {
    4,  5,  7,  8,  9,  11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
    37, 41, 43, 47, 49, 53, 59, 61, 64, 67, 71, 73, 79, 81, 83, 89};

std::vector<long long> divisors_above_one(long long m) {
    std::vector<long long> out;
    for (long long d = 2; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

// Every admissible (q, lambda, tau, rho) with sigma = 2; sigma has no effect
// on the congruence lattices.
std::vector<CodeParams> admissible_shapes(long long qmax) {
    std::vector<CodeParams> out;
    for (long long q : kPrimePowers) {
        if (q > qmax) break;
        for (long long lam : divisors_above_one(q - 1)) {
            for (long long tau : divisors_above_one(q + 1)) {
                if (std::gcd(lam, tau) != 1) continue;
                if (2 * lam * tau > q * q - 1) continue;
                for (long long rho : divisors_above_one(q + 1)) {
                    long long kappa = std::gcd(lam, rho) * std::gcd(tau, rho);
                    if (rho < 2 * kappa) continue;
                    out.push_back(validate_params(q, lam, tau, rho, 2));
                }
            }
        }
    }
    return out;
}

void check_first_point(const FirstPoint& got, long long d1, long long d2,
                       long long t, long long eps) {
    CHECK(got.d1 == d1);
    CHECK(got.d2 == d2);
    CHECK(got.t == t);
    CHECK(got.eps == eps);
}

}  // namespace

TEST_CASE("closed-form pair-sum first points match worked instances") {
    check_first_point(first_point_T_closed_form(validate_params(29, 28, 5, 6, 2)),
                      13, 23, 1, 2);
    check_first_point(first_point_T_closed_form(validate_params(11, 5, 3, 4, 3)),
                      3, 6, 1, 1);
    check_first_point(first_point_T_closed_form(validate_params(83, 41, 6, 28, 2)),
                      40, 46, 2, 1);
    check_first_point(first_point_T_closed_form(validate_params(29, 7, 3, 2, 2)),
                      1, 7, 1, 2);
    check_first_point(first_point_T_closed_form(validate_params(19, 3, 5, 2, 2)),
                      2, 7, 2, 1);
}

TEST_CASE("closed-form pair-difference first points match worked instances") {
    check_first_point(first_point_P_closed_form(validate_params(29, 28, 5, 6, 2)),
                      3, 33, 1, 1);
    check_first_point(first_point_P_closed_form(validate_params(11, 5, 3, 4, 3)),
                      1, 13, 2, 1);
    check_first_point(first_point_P_closed_form(validate_params(83, 41, 6, 28, 2)),
                      1, 85, 2, 1);
    check_first_point(first_point_P_closed_form(validate_params(53, 13, 3, 9, 2)),
                      4, 13, 1, 1);
}

TEST_CASE("closed-form first points agree with lattice search on all shapes") {
    auto shapes = admissible_shapes(90);
    REQUIRE(shapes.size() > 200);
    for (const auto& p : shapes) {
        CAPTURE(p.q);
        CAPTURE(p.lambda);
        CAPTURE(p.tau);
        CAPTURE(p.rho);

        Lattice lt = lattice_T(p);
        auto searched_t = first_point(lt);
        REQUIRE(searched_t.has_value());
        FirstPoint closed_t = first_point_T_closed_form(p);
        CHECK(closed_t.d1 == searched_t->d1);
        CHECK(closed_t.d2 == searched_t->d2);
        CHECK(closed_t.t == searched_t->t);
        CHECK(closed_t.eps == searched_t->eps);

        Lattice lp = lattice_P(p);
        auto searched_p = first_point(lp);
        REQUIRE(searched_p.has_value());
        FirstPoint closed_p = first_point_P_closed_form(p);
        CHECK(closed_p.d1 == searched_p->d1);
        CHECK(closed_p.d2 == searched_p->d2);
        CHECK(closed_p.t == searched_p->t);
        CHECK(closed_p.eps == searched_p->eps);

        // The difference lattice refines the sum lattice.
        CHECK(is_point(lt, closed_p.d1, closed_p.d2));
    }
}

TEST_CASE("failure pair counts match frozen table values") {
    CodeParams q11 = validate_params(11, 5, 3, 4, 3);
    CHECK(count_F(q11, 6) == 0);
    CHECK(count_F(q11, 8) == 2);
    CHECK(count_F(q11, 9) == 2);

    CodeParams q29 = validate_params(29, 28, 5, 6, 2);
    CHECK(count_F(q29, 25) == 2);
    CHECK(count_F(q29, 28) == 2);
    HullComputation mid = compute_hull(q29, 131);
    CHECK(mid.count_t == 56);
    CHECK(mid.count_p == 16);
    CHECK(mid.failure_count == 80);
    HullComputation mid2 = compute_hull(q29, 135);
    CHECK(mid2.count_t == 60);
    CHECK(mid2.count_p == 20);
    CHECK(mid2.failure_count == 80);
    CHECK(count_F(q29, 140) == 90);

    CodeParams q83 = validate_params(83, 41, 6, 28, 2);
    HullComputation lo = compute_hull(q83, 233);
    CHECK(lo.count_t == 107);
    CHECK(lo.count_p == 6);
    CHECK(lo.failure_count == 202);
    HullComputation hi = compute_hull(q83, 246);
    CHECK(hi.count_t == 120);
    CHECK(hi.count_p == 6);
    CHECK(hi.failure_count == 228);
}

TEST_CASE("failure pair count equals exhaustive congruence enumeration") {
    std::vector<CodeParams> fams = {
        validate_params(11, 5, 3, 4, 3), validate_params(29, 7, 3, 2, 2),
        validate_params(19, 3, 5, 2, 2), validate_params(13, 3, 2, 7, 7),
        validate_params(8, 7, 3, 9, 3),  validate_params(11, 5, 2, 12, 4),
    };
    for (const auto& p : fams) {
        CAPTURE(p.q);
        CAPTURE(p.lambda);
        for (long long k = 1; k <= p.n; ++k) {
            CAPTURE(k);
            auto pts = failure_points_bruteforce(p, k);
            CHECK(count_F(p, k) == static_cast<long long>(pts.size()));
        }
    }
}

TEST_CASE("counts are monotone and the difference count never wins") {
    for (const auto& p : admissible_shapes(13)) {
        long long prev_t = 0;
        long long prev_p = 0;
        for (long long k = 1; k <= p.n; ++k) {
            HullComputation h = compute_hull(p, k);
            CHECK(h.count_t >= prev_t);
            CHECK(h.count_p >= prev_p);
            CHECK(h.count_p <= h.count_t);
            CHECK(h.failure_count % 2 == 0);
            CHECK(h.hull_dim() == k - h.failure_count);
            prev_t = h.count_t;
            prev_p = h.count_p;
        }
    }
}

TEST_CASE("exactness window follows the coefficient pattern and dimension") {
    CodeParams q29 = validate_params(29, 28, 5, 6, 2);  // lambda*tau = 140
    CHECK(compute_hull(q29, 140).exactness == Exactness::Exact);
    CHECK(compute_hull(q29, 141).exactness == Exactness::UpperBound);

    // rho = 2 doubles the window.
    CodeParams pair = validate_params(29, 7, 3, 2, 2);  // lambda*tau = 21, n = 42
    CHECK(compute_hull(pair, 21).exactness == Exactness::Exact);
    CHECK(compute_hull(pair, 42).exactness == Exactness::Exact);

    // sigma outside {2, 3, rho} never certifies.
    CodeParams generic = validate_params(11, 5, 2, 12, 4);
    CHECK(compute_hull(generic, 1).exactness == Exactness::UpperBound);
    CHECK(compute_hull(generic, 10).exactness == Exactness::UpperBound);

    // sigma = rho certifies up to lambda*tau only.
    CodeParams sr = validate_params(13, 3, 2, 7, 7);  // lambda*tau = 6
    CHECK(compute_hull(sr, 6).exactness == Exactness::Exact);
    CHECK(compute_hull(sr, 7).exactness == Exactness::UpperBound);
}

TEST_CASE("formula matches the Gram-rank oracle inside the exact window") {
    std::vector<CodeParams> fams = {
        validate_params(11, 5, 3, 4, 3),
        validate_params(13, 3, 2, 7, 7),
        validate_params(11, 5, 2, 12, 4),
    };
    for (const auto& p : fams) {
        CAPTURE(p.q);
        CAPTURE(p.sigma);
        for (long long k = 1; k <= p.n; ++k) {
            CAPTURE(k);
            HullDimension hd = hull_dim_formula(p, k);
            auto [hull, c] = hull_dimension_oracle(p, k);
            if (hd.exactness == Exactness::Exact) {
                CHECK(hd.c == c);
                CHECK(hd.hull_dim == hull);
            } else {
                CHECK(c <= hd.c);
                CHECK(hull >= hd.hull_dim);
            }
        }
    }
}

TEST_CASE("hull computation rejects out-of-range dimensions") {
    CodeParams p = validate_params(11, 5, 3, 4, 3);
    CHECK_THROWS_AS(compute_hull(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(compute_hull(p, 46), std::invalid_argument);
    CHECK_NOTHROW(compute_hull(p, 45));
}

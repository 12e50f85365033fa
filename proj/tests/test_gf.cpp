#include "grshull/gf.hpp"

#include <set>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace grshull;

namespace {
const long long kSmallQ[] = {4, 5, 7, 8, 9, 11, 13};
}

TEST_CASE("field construction accepts prime powers only") {
    auto f = make_fields(11);
    CHECK(f->characteristic() == 11);
    CHECK(f->base_degree() == 1);
    CHECK(f->base_order() == 11);
    CHECK(f->order() == 121);

    auto f4 = make_fields(4);
    CHECK(f4->characteristic() == 2);
    CHECK(f4->base_degree() == 2);
    CHECK(f4->order() == 16);

    CHECK_THROWS_AS(make_fields(6), std::invalid_argument);
    CHECK_THROWS_AS(make_fields(12), std::invalid_argument);
    CHECK_THROWS_AS(make_fields(1), std::invalid_argument);
    CHECK_THROWS_AS(make_fields(0), std::invalid_argument);
    CHECK_THROWS_AS(make_fields(1009 * 1009), std::invalid_argument);
}

TEST_CASE("construction is deterministic and cached") {
    auto a = make_fields(9);
    auto b = make_fields(9);
    CHECK(a.get() == b.get());
    CHECK(a->generator() == b->generator());
    CHECK(a->base_modulus() == b->base_modulus());
    CHECK(a->ext_modulus() == b->ext_modulus());
}

TEST_CASE("ring axioms and basic operator behaviour") {
    for (long long q : kSmallQ) {
        auto f = make_fields(q);
        const long long n = f->order();
        for (long long i = 0; i < n; ++i) {
            auto x = f->element(static_cast<std::uint32_t>(i));
            CHECK(x + f->zero() == x);
            CHECK(x * f->one() == x);
            CHECK(x - x == f->zero());
            CHECK(x + (-x) == f->zero());
            if (!x.is_zero()) {
                CHECK(x * x.inv() == f->one());
                CHECK(x / x == f->one());
                CHECK(x.pow(n - 1) == f->one());
            }
        }
        // Spot-check associativity and distributivity on a stride.
        for (long long i = 0; i < n; i += 3)
            for (long long j = 1; j < n; j += 5) {
                auto x = f->element(static_cast<std::uint32_t>(i));
                auto y = f->element(static_cast<std::uint32_t>(j));
                auto z = f->element(static_cast<std::uint32_t>((i + j) % n));
                CHECK((x + y) + z == x + (y + z));
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
    }
}

TEST_CASE("generator has full multiplicative order") {
    for (long long q : kSmallQ) {
        auto f = make_fields(q);
        CHECK(oracle::brute_order(f->generator()) == f->order() - 1);
    }
}

TEST_CASE("frobenius is the q-power field automorphism") {
    for (long long q : kSmallQ) {
        auto f = make_fields(q);
        const long long n = f->order();
        long long fixed = 0;
        for (long long i = 0; i < n; ++i) {
            auto x = f->element(static_cast<std::uint32_t>(i));
            CHECK(x.frobenius() == x.pow(q) );
            CHECK(x.frobenius().frobenius() == x);
            if (x.frobenius() == x) {
                ++fixed;
                CHECK(x.in_base_field());
            } else {
                CHECK_FALSE(x.in_base_field());
            }
        }
        CHECK(fixed == q);
        for (long long i = 0; i < n; i += 7)
            for (long long j = 0; j < n; j += 11) {
                auto x = f->element(static_cast<std::uint32_t>(i));
                auto y = f->element(static_cast<std::uint32_t>(j));
                CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
                CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
            }
    }
}

TEST_CASE("roots of unity have exact order") {
    auto f = make_fields(11);
    CHECK(f->root_of_unity(1) == f->one());
    CHECK(f->root_of_unity(2) == f->from_int(-1));
    for (long long t : {2, 3, 4, 5, 6, 8, 10, 12, 15, 24, 40, 60, 120})
        CHECK(oracle::brute_order(f->root_of_unity(t)) == t);
    CHECK_THROWS_AS(f->root_of_unity(7), std::invalid_argument);
    CHECK_THROWS_AS(f->root_of_unity(0), std::invalid_argument);
    CHECK_THROWS_AS(f->root_of_unity(-2), std::invalid_argument);
}

TEST_CASE("norm preimage covers every base field unit") {
    for (long long q : kSmallQ) {
        auto f = make_fields(q);
        for (long long a = 1; a < q; ++a) {
            auto alpha = f->element(static_cast<std::uint32_t>(a));
            auto v = f->norm_preimage(alpha);
            CHECK(v.pow(q + 1) == alpha);
        }
        CHECK(f->norm_preimage(f->one()) == f->one());
        CHECK_THROWS_AS(f->norm_preimage(f->zero()), std::domain_error);
    }
    auto f = make_fields(11);
    // The generator itself lies outside F_q.
    CHECK_THROWS_AS(f->norm_preimage(f->generator()), std::domain_error);
}

TEST_CASE("geometric character sums collapse as expected") {
    auto f = make_fields(11);
    CHECK(f->geometric_character_sum(5, 3) == f->zero());
    CHECK(f->geometric_character_sum(5, 10) == f->from_int(5));
    CHECK(f->geometric_character_sum(1, 9) == f->one());
    CHECK_THROWS_AS(f->geometric_character_sum(7, 3), std::invalid_argument);

    for (long long q : kSmallQ) {
        auto g = make_fields(q);
        for (long long gamma = 1; gamma <= g->order() - 1; ++gamma) {
            if ((g->order() - 1) % gamma != 0) continue;
            for (long long n = 0; n < 2 * gamma + 3; ++n)
                CHECK(g->geometric_character_sum(gamma, n) ==
                      oracle::term_sum(*g, gamma, n));
        }
    }
}

TEST_CASE("coordinates and textual form") {
    auto f = make_fields(11);
    CHECK(f->zero().to_string() == "0,0");
    CHECK(f->one().to_string() == "1,0");
    CHECK(f->from_int(7).to_string() == "7,0");
    CHECK(f->from_int(-1) == f->from_int(10));

    auto f9 = make_fields(9);
    CHECK(f9->one().coords() == std::vector<int>{1, 0, 0, 0});
    CHECK(f9->element(3).coords() == std::vector<int>{0, 1, 0, 0});

    // Mixing fields is rejected.
    CHECK_THROWS_AS(f->one() + f9->one(), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "wpa/prime_lab.hpp"

using namespace wpa;

TEST_CASE("find_prime_in_ap: worked examples") {
    Int bound("1000000000");
    CHECK(find_prime_in_ap(Int(1), Int(24), Int(2), std::nullopt, bound) == 73);
    // p === 3 mod 8 and p === 1 mod 219, smallest such prime
    CongruenceSystem extra;
    extra.constraints = {{Int(1), Int(219)}};
    CHECK(find_prime_in_ap(Int(3), Int(8), Int(2), extra, bound) == 3067);
    CHECK(find_prime_in_ap(Int(1), Int(4), Int(6), std::nullopt, bound) == 13);
    CHECK_THROWS_AS(find_prime_in_ap(Int(2), Int(4), Int(2), std::nullopt, bound), NotCoprime);
    CHECK_THROWS_AS(find_prime_in_ap(Int(1), Int(4), Int(2), std::nullopt, Int(3)),
                    BoundExhausted);
}

TEST_CASE("is_primitive_root") {
    CHECK(is_primitive_root(Int(3), Int(7)));
    CHECK(!is_primitive_root(Int(2), Int(7)));
    CHECK(is_primitive_root(Int(2), Int(11)));
    CHECK(!is_primitive_root(Int(3), Int(11)));
    // oracle: count of primitive roots mod p is phi(p-1)
    for (unsigned long p : {13UL, 17UL, 101UL}) {
        unsigned long count = 0;
        for (unsigned long g = 1; g < p; ++g)
            if (is_primitive_root(Int(g), Int(p))) ++count;
        CHECK(count == euler_phi(Int(p - 1)));
    }
}

TEST_CASE("find_star_witness: worked example and certificate contents") {
    StarWitness w = find_star_witness(Int(7), Int(12), Int(3), Int(10000));
    CHECK(w.s == 7);
    CHECK(w.s_minus_1.consistent());
    CHECK(w.s_minus_1.n == w.s - 1);
    REQUIRE(!w.order_checks.empty());
    for (const auto& [l, residue] : w.order_checks) {
        CHECK((w.s - 1) % l == 0);
        CHECK(residue != 1);
        CHECK(residue == mod_pow(w.g, (w.s - 1) / l, w.s));
    }
    CHECK(is_primitive_root(w.g, w.s));
}

TEST_CASE("find_star_witness: accept filter skips witnesses") {
    Int first = find_star_witness(Int(7), Int(12), Int(3), Int(100000)).s;
    StarWitness w = find_star_witness(Int(7), Int(12), Int(3), Int(100000),
                                      [&](const StarWitness& cand) { return cand.s != first; });
    CHECK(w.s != first);
    CHECK(w.s % 12 == 7);
    CHECK(is_primitive_root(Int(3), w.s));
}

TEST_CASE("find_star_witness: preconditions and bound") {
    CHECK_THROWS_AS(find_star_witness(Int(6), Int(12), Int(3), Int(10000)), NotCoprime);
    CHECK_THROWS_AS(find_star_witness(Int(7), Int(6), Int(3), Int(10000)),
                    PreconditionViolated);  // 4 must divide f
    CHECK_THROWS_AS(find_star_witness(Int(1), Int(12), Int(3), Int(10000)),
                    PreconditionViolated);  // (g/a) = +1 here
    CHECK_THROWS_AS(find_star_witness(Int(7), Int(12), Int(3), Int(5)), BoundExhausted);
}

TEST_CASE("artin_density: unconditional case reproduces Artin's constant") {
    DensityReport rep = artin_density(Int(1), Int(1), Int(2), 1000000);
    CHECK(std::abs(rep.delta - 0.3739558) < 1e-6);
    CHECK(rep.tail_error <= 1.0 / 1e6 + 1e-12);
    CHECK(rep.truncation_bound == 1000000);
    CHECK(rep.params.h == 1);
    CHECK(rep.params.g1 == 2);
}

TEST_CASE("artin_density: excluded g values") {
    CHECK_THROWS_AS(artin_density(Int(1), Int(4), Int(-1), 1000), InvalidG);
    CHECK_THROWS_AS(artin_density(Int(1), Int(4), Int(9), 1000), InvalidG);
    CHECK_THROWS_AS(artin_density(Int(1), Int(4), Int(16), 1000), InvalidG);
}

TEST_CASE("corollary_density agrees with the general formula on its domain") {
    // valid inputs: 4 | f, g odd prime dividing f, gcd(a, f) = 1, (g/a) = -1
    struct Case { long a, f, g; };
    for (Case c : {Case{7, 12, 3}, Case{2203, 2520, 3}, Case{3, 20, 5}, Case{11, 28, 7},
                   Case{5, 12, 3}, Case{17, 44, 11}}) {
        DensityReport general = artin_density(Int(c.a), Int(c.f), Int(c.g), 200000);
        DensityReport special = corollary_density(Int(c.a), Int(c.f), Int(c.g), 200000);
        CHECK(special.delta > 0.0);
        CHECK(std::abs(general.delta - special.delta) <=
              2 * (general.tail_error + special.tail_error));
    }
}

TEST_CASE("count_pi_g: worked example") {
    // primes <= 20 with p === 3 mod 4: 3, 7, 11, 19; of these 2 is a primitive
    // root of 3, 11, 19 but not of 7
    PiGCount c = count_pi_g(20, Int(4), Int(3), Int(2));
    CHECK(c.with_primitive_root == 3);
    CHECK(c.total_in_class == 4);
}

TEST_CASE("count_pi_g: unconstrained class vs direct check") {
    PiGCount c = count_pi_g(100, Int(1), Int(0), Int(2));
    // direct: odd primes <= 100 with 2 a primitive root; the class total
    // counts every prime, including 2 itself
    std::uint64_t expect = 0;
    for (std::uint64_t p : primes_up_to(100)) {
        if (p == 2) continue;
        if (is_primitive_root(Int(2), Int(p))) ++expect;
    }
    CHECK(c.with_primitive_root == expect);
    CHECK(c.total_in_class == primes_up_to(100).size());
}

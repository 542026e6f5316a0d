#include <doctest.h>

#include "wpa/serialize.hpp"

using namespace wpa;

TEST_CASE("star witness JSON round-trip") {
    StarWitness w = find_star_witness(Int(7), Int(12), Int(3), Int(10000));
    json j = to_json(w);
    StarWitness back = witness_from_json(j);
    CHECK(back.a == w.a);
    CHECK(back.f == w.f);
    CHECK(back.g == w.g);
    CHECK(back.s == w.s);
    CHECK(back.order_checks == w.order_checks);
    CHECK(back.policy == w.policy);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("big integers serialize as decimal strings") {
    StarWitness w;
    w.a = Int("123456789012345678901234567890");
    w.f = 4;
    w.g = 3;
    w.s = Int("987654321098765432109876543210123");
    w.s_minus_1 = factorize(Int(6));
    json j = to_json(w);
    CHECK(j.at("a").is_string());
    CHECK(j.at("a").get<std::string>() == "123456789012345678901234567890");
    StarWitness back = witness_from_json(j);
    CHECK(back.s == w.s);
}

TEST_CASE("density and count records carry the schema version") {
    DensityReport rep = artin_density(Int(1), Int(1), Int(2), 1000);
    json j = to_json(rep);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("type") == "density");

    PiGCount c = count_pi_g(20, Int(4), Int(3), Int(2));
    json jc = to_json(c, 20, Int(4), Int(3), Int(2));
    CHECK(jc.at("schema_version") == kSchemaVersion);
    CHECK(jc.at("count") == 3);
    CHECK(jc.at("total_primes_in_class") == 4);
}

TEST_CASE("identical values dump to identical bytes") {
    DensityReport rep = artin_density(Int(1), Int(1), Int(2), 1000);
    CHECK(to_json(rep).dump() == to_json(rep).dump());
    StarWitness w = find_star_witness(Int(7), Int(12), Int(3), Int(10000));
    CHECK(to_json(w).dump() == to_json(w).dump());
}

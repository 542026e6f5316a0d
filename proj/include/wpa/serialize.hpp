#pragma once

#include <nlohmann/json.hpp>

#include "wpa/construct.hpp"
#include "wpa/enumerate.hpp"
#include "wpa/prime_lab.hpp"

namespace wpa {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Big integers travel as decimal strings; keys are alphabetical, so dumps of
// equal values are byte-identical.

json to_json(const StarWitness& w);
StarWitness witness_from_json(const json& j);

json to_json(const ConstructionCertificate& cert);
ConstructionCertificate certificate_from_json(const json& j);

json to_json(const DensityReport& rep);
json to_json(const PiGCount& count, std::uint64_t x, const Int& f, const Int& a, const Int& g);
json to_json(const WpaRecord& rec);
json to_json(const VerificationReport& rep);

}  // namespace wpa

#include "wpa/serialize.hpp"

namespace wpa {

namespace {

std::string dec(const Int& v) { return v.get_str(); }
Int undec(const json& j) { return Int(j.get<std::string>()); }

json factors_to_json(const Factorization& f) {
    json arr = json::array();
    for (const auto& [p, e] : f.factors) arr.push_back({dec(p), e});
    return arr;
}

Factorization factors_from_json(const Int& n, const json& arr) {
    Factorization f;
    f.n = n;
    for (const auto& item : arr)
        f.factors.emplace_back(Int(item[0].get<std::string>()), item[1].get<unsigned long>());
    return f;
}

PrimalityPolicy policy_from_string(const std::string& s) {
    return s == to_string(PrimalityPolicy::kDeterministic) ? PrimalityPolicy::kDeterministic
                                                           : PrimalityPolicy::kMillerRabin64;
}

}  // namespace

json to_json(const StarWitness& w) {
    json checks = json::array();
    for (const auto& [l, residue] : w.order_checks) checks.push_back({dec(l), dec(residue)});
    return {
        {"a", dec(w.a)},
        {"f", dec(w.f)},
        {"g", dec(w.g)},
        {"s", dec(w.s)},
        {"s_minus_1_factors", factors_to_json(w.s_minus_1)},
        {"order_checks", checks},
        {"policy", to_string(w.policy)},
    };
}

StarWitness witness_from_json(const json& j) {
    StarWitness w;
    w.a = undec(j.at("a"));
    w.f = undec(j.at("f"));
    w.g = undec(j.at("g"));
    w.s = undec(j.at("s"));
    w.s_minus_1 = factors_from_json(w.s - 1, j.at("s_minus_1_factors"));
    for (const auto& item : j.at("order_checks"))
        w.order_checks.emplace_back(Int(item[0].get<std::string>()),
                                    Int(item[1].get<std::string>()));
    w.policy = policy_from_string(j.at("policy").get<std::string>());
    return w;
}

json to_json(const ConstructionCertificate& cert) {
    json checks = json::array();
    for (const auto& c : cert.congruence_checks)
        checks.push_back({{"label", c.label}, {"modulus", dec(c.modulus)}, {"residue", dec(c.residue)}});
    return {
        {"schema_version", kSchemaVersion},
        {"type", "certificate"},
        {"kind", to_string(cert.kind)},
        {"m", dec(cert.m)},
        {"working_modulus", dec(cert.working_modulus)},
        {"p", dec(cert.p)},
        {"q", dec(cert.q)},
        {"r", dec(cert.r)},
        {"s", dec(cert.s)},
        {"a", dec(cert.a)},
        {"b", dec(cert.b)},
        {"c", dec(cert.c)},
        {"d", dec(cert.d)},
        {"k", cert.k},
        {"m1", dec(cert.m1)},
        {"A", dec(cert.A)},
        {"f", dec(cert.f)},
        {"s0", dec(cert.s0)},
        {"c0", dec(cert.c0)},
        {"free_parameters",
         {{"a_prime", dec(cert.aprime)},
          {"b_prime", dec(cert.bprime)},
          {"c_prime", dec(cert.cprime)},
          {"d_prime", dec(cert.dprime)}}},
        {"congruence_checks", checks},
        {"kappa_claim", to_string(cert.kappa_claim)},
        {"kappa_lower_bound_source", cert.kappa_lower_bound_source},
        {"witness", to_json(cert.witness)},
        {"primality_policies", cert.primality_policies},
    };
}

ConstructionCertificate certificate_from_json(const json& j) {
    ConstructionCertificate cert;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == to_string(CertKind::kLen4))
        cert.kind = CertKind::kLen4;
    else if (kind == to_string(CertKind::kExactLen4))
        cert.kind = CertKind::kExactLen4;
    else if (kind == to_string(CertKind::kTheorem2))
        cert.kind = CertKind::kTheorem2;
    else
        throw PreconditionViolated("unknown certificate kind: " + kind);
    cert.m = undec(j.at("m"));
    cert.working_modulus = undec(j.at("working_modulus"));
    cert.p = undec(j.at("p"));
    cert.q = undec(j.at("q"));
    cert.r = undec(j.at("r"));
    cert.s = undec(j.at("s"));
    cert.a = undec(j.at("a"));
    cert.b = undec(j.at("b"));
    cert.c = undec(j.at("c"));
    cert.d = undec(j.at("d"));
    cert.k = j.at("k").get<unsigned long>();
    cert.m1 = undec(j.at("m1"));
    cert.A = undec(j.at("A"));
    cert.f = undec(j.at("f"));
    cert.s0 = undec(j.at("s0"));
    cert.c0 = undec(j.at("c0"));
    const json& fp = j.at("free_parameters");
    cert.aprime = undec(fp.at("a_prime"));
    cert.bprime = undec(fp.at("b_prime"));
    cert.cprime = undec(fp.at("c_prime"));
    cert.dprime = undec(fp.at("d_prime"));
    for (const auto& c : j.at("congruence_checks"))
        cert.congruence_checks.push_back(
            {c.at("label").get<std::string>(), undec(c.at("modulus")), undec(c.at("residue"))});
    std::string claim = j.at("kappa_claim").get<std::string>();
    cert.kappa_claim =
        claim == to_string(KappaClaim::kExactly4) ? KappaClaim::kExactly4 : KappaClaim::kAtMost4;
    cert.kappa_lower_bound_source = j.at("kappa_lower_bound_source").get<std::string>();
    cert.witness = witness_from_json(j.at("witness"));
    if (j.contains("primality_policies"))
        cert.primality_policies =
            j.at("primality_policies").get<std::map<std::string, std::string>>();
    return cert;
}

json to_json(const DensityReport& rep) {
    return {
        {"schema_version", kSchemaVersion},
        {"type", "density"},
        {"a", dec(rep.params.a)},
        {"f", dec(rep.params.f)},
        {"g", dec(rep.params.g)},
        {"h", rep.params.h},
        {"g1", dec(rep.params.g1)},
        {"g2", dec(rep.params.g2)},
        {"beta", dec(rep.params.beta)},
        {"gamma1", dec(rep.params.gamma1)},
        {"A_value", rep.A_value},
        {"delta", rep.delta},
        {"truncation_bound", rep.truncation_bound},
        {"tail_error", rep.tail_error},
        {"corrected", rep.corrected},
    };
}

json to_json(const PiGCount& count, std::uint64_t x, const Int& f, const Int& a, const Int& g) {
    double ratio = count.total_in_class
                       ? static_cast<double>(count.with_primitive_root) /
                             static_cast<double>(count.total_in_class)
                       : 0.0;
    return {
        {"schema_version", kSchemaVersion},
        {"type", "pi_g_count"},
        {"x", x},
        {"f", dec(f)},
        {"a", dec(a)},
        {"g", dec(g)},
        {"count", count.with_primitive_root},
        {"total_primes_in_class", count.total_in_class},
        {"ratio", ratio},
    };
}

json to_json(const WpaRecord& rec) {
    json rep = json::array();
    for (auto [p, e] : rec.representation) rep.push_back({p, e});
    return {
        {"schema_version", kSchemaVersion},
        {"type", "wpa_record"},
        {"n", rec.n},
        {"representation", rep},
        {"kappa", rec.kappa},
        {"weakly_prime_additive", true},
        {"prime_additive", rec.prime_additive},
        {"strongly_prime_additive", rec.strongly_prime_additive},
        {"n_mod_8", rec.n_mod_8},
    };
}

json to_json(const VerificationReport& rep) {
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    return {
        {"schema_version", kSchemaVersion},
        {"type", "verification"},
        {"all_pass", rep.all_pass()},
        {"items", items},
    };
}

}  // namespace wpa

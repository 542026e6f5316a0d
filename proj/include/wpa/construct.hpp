#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpa/arith.hpp"
#include "wpa/prime_lab.hpp"

namespace wpa {

enum class CertKind { kLen4, kExactLen4, kTheorem2 };

enum class KappaClaim { kAtMost4, kExactly4 };

const char* to_string(CertKind k);
const char* to_string(KappaClaim k);

struct CongruenceCheck {
    std::string label;  // e.g. "mod p"
    Int modulus;
    Int residue;  // of p^a + q^b + r^c + s^d; 0 means the check holds
};

struct SearchBounds {
    Int prime_search = Int("1000000000000");       // value cap for progression scans
    Int witness = Int("1000000000000000000");      // value cap for the (*) witness
};

/// Everything needed to re-check a construction from scratch with modular
/// arithmetic only: the four primes, the four exponents, the intermediate
/// quantities the pipeline derived, and the residue of p^a + q^b + r^c + s^d
/// at every modulus the construction promises to annihilate.
struct ConstructionCertificate {
    CertKind kind = CertKind::kLen4;
    Int m = 0;                // requested divisor (0 for the four-prime variant)
    Int working_modulus = 0;  // 2^k * m1 actually used after the k >= 3 lift
    Int p, q, r, s;
    Int a, b, c, d;
    unsigned long k = 0;  // 2-adic valuation (of the working modulus, or of (p-1)(q-1))
    Int m1 = 1;
    Int A = 0;  // odd part of (p-1)(q-1); four-prime variant only
    Int f = 0;  // star-witness modulus
    Int s0 = 0;
    Int c0 = 0;
    Int aprime = 1, bprime = 1, cprime = 1, dprime = 1;
    std::vector<CongruenceCheck> congruence_checks;
    KappaClaim kappa_claim = KappaClaim::kAtMost4;
    std::string kappa_lower_bound_source;  // nonempty iff the length-4 lower bound is cited
    StarWitness witness;
    std::map<std::string, std::string> primality_policies;
};

/// Builds a certificate for a length-<=4 weakly prime-additive number
/// divisible by (the odd part and 2-power of) m: n = p^a + q^b + r^c + s.
/// p is the (p_index+1)-th odd prime coprime to m; a', b', c' steer the
/// exponent families (b' must be odd). n itself is never materialized.
ConstructionCertificate construct_len4(const Int& m, unsigned long p_index, const Int& a_prime,
                                       const Int& b_prime, const Int& c_prime,
                                       const SearchBounds& bounds = {});

/// Runs construct_len4 against 8m and claims exact length 4, citing the known
/// criterion that no shortest (length-3) weakly prime-additive number is
/// divisible by 8. The lower bound is recorded as a citation, not recomputed.
ConstructionCertificate construct_exact_len4(const Int& m, unsigned long p_index,
                                             const Int& a_prime, const Int& b_prime,
                                             const Int& c_prime, const SearchBounds& bounds = {});

/// Replaces the exponent of s by d (requires d === 1 mod phi(p*q*r*M)) and
/// re-runs every congruence check.
ConstructionCertificate power_lift_d(const ConstructionCertificate& cert, const Int& d);

/// Four-prime certificate: finds a prime s and exponents with
/// p*q*r*s | p^a + q^b + r^c + s^d. One of p, q, r must be === 3 or 5 (mod 8);
/// the inputs are rotated so the smallest such prime takes the r role.
ConstructionCertificate construct_theorem2(const Int& p, const Int& q, const Int& r,
                                           const Int& a_prime, const Int& b_prime,
                                           const Int& c_prime, const Int& d_prime,
                                           const SearchBounds& bounds = {});

struct VerificationItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationItem> items;
    bool all_pass() const;
};

/// Recomputes every claim in the certificate from scratch: primality,
/// distinctness, the primitive-root certificate, parity facts, exponent-family
/// membership, and all congruence residues. The exponentiation route here is
/// deliberately independent of the one the constructor uses.
VerificationReport verify_certificate(const ConstructionCertificate& cert);

}  // namespace wpa

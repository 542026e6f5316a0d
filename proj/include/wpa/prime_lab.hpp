#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpa/arith.hpp"

namespace wpa {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// A prime s === a (mod f) together with the certificate that g is a primitive
/// root of s: the factorization of s-1 plus, for every prime factor l, the
/// residue g^((s-1)/l) mod s (all must differ from 1).
struct StarWitness {
    Int a, f, g, s;
    Factorization s_minus_1;
    std::vector<std::pair<Int, Int>> order_checks;  // (prime factor l, g^((s-1)/l) mod s)
    PrimalityPolicy policy = PrimalityPolicy::kDeterministic;
};

/// Derived quantities for the primitive-root density formula.
struct ArtinParams {
    Int a, f, g;
    unsigned long h = 1;  // largest h with g an h-th power
    Int g1, g2;           // g = g1 * g2^2, g1 squarefree
    Int beta;             // g1 / gcd(g1, f)
    Int gamma1;
};

struct DensityReport {
    ArtinParams params;
    double A_value = 0.0;
    double delta = 0.0;
    std::uint64_t truncation_bound = 0;
    double tail_error = 0.0;
    bool corrected = false;  // whether the Mobius-corrected branch applied
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Smallest prime >= min_value with p === a (mod d) and satisfying every extra
/// constraint. Throws NotCoprime, Inconsistent, or BoundExhausted once the
/// scan passes `bound` (a search cap, not a nonexistence claim).
Int find_prime_in_ap(const Int& a, const Int& d, const Int& min_value,
                     const std::optional<CongruenceSystem>& extra, const Int& bound);

bool is_primitive_root(const Int& g, const Int& p);

/// Smallest prime s === a (mod f), s <= bound, with g a primitive root of s.
/// `accept` (when set) can reject otherwise-valid witnesses, in which case the
/// scan continues; used by construction pipelines that need extra side
/// conditions on s.
StarWitness find_star_witness(const Int& a, const Int& f, const Int& g, const Int& bound,
                              const std::function<bool(const StarWitness&)>& accept = nullptr);

/// Conditional density of primes p === a (mod f) with g a primitive root,
/// with the infinite Euler product truncated at primes <= truncation.
DensityReport artin_density(const Int& a, const Int& f, const Int& g,
                            std::uint64_t truncation);

/// Specialization to the star-witness setting (g an odd prime dividing f,
/// 4 | f, (g/a) = -1): delta = (2/phi(f)) * prod_{p | (a-1,f)} (1 - 1/p)
/// * prod_{p !| f} (1 - 1/(p(p-1))). Always positive.
DensityReport corollary_density(const Int& a, const Int& f, const Int& g,
                                std::uint64_t truncation);

struct PiGCount {
    std::uint64_t with_primitive_root = 0;
    std::uint64_t total_in_class = 0;
};

/// Counts primes p <= x with p === a (mod f) and g a primitive root mod p.
/// f = 1 means no congruence constraint.
PiGCount count_pi_g(std::uint64_t x, const Int& f, const Int& a, const Int& g);

}  // namespace wpa

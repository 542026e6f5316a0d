#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wpa/errors.hpp"

namespace wpa {

using Int = mpz_class;

// Canonical residue of a mod m, in [0, m).
Int mod(const Int& a, const Int& m);

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Complete factorization of a positive integer. Primes strictly increasing,
/// exponents >= 1, empty exactly for n = 1.
struct Factorization {
    Int n = 1;
    std::vector<std::pair<Int, unsigned long>> factors;

    bool consistent() const;  // product check + primality of every base
};

/// m = 2^k * m1 with m1 odd.
struct TwoAdicSplit {
    unsigned long k = 0;
    Int m1 = 1;
};

/// A list of congruence constraints plus, when solved, the combined solution.
/// solution.first in [0, solution.second), solution.second = lcm of moduli.
struct CongruenceSystem {
    std::vector<std::pair<Int, Int>> constraints;  // (residue, modulus)
    std::optional<std::pair<Int, Int>> solution;   // (residue, modulus)
};

enum class PrimalityPolicy {
    kDeterministic,   // below 2^64: fixed strong-pseudoprime base set
    kMillerRabin64,   // 64 rounds of Miller-Rabin with fixed prime bases
};

const char* to_string(PrimalityPolicy p);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

TwoAdicSplit v2_split(const Int& m);

/// base^exponent mod modulus, exponent >= 0 of any size, result in [0, modulus).
Int mod_pow(const Int& base, const Int& exponent, const Int& modulus);

/// Same contract as mod_pow but computed by a self-contained square-and-multiply
/// loop on top of plain mul/mod. Kept separate so certificate verification has
/// an exponentiation route independent of mod_pow's backend.
Int mod_pow_schoolbook(const Int& base, const Int& exponent, const Int& modulus);

Int euler_phi(const Factorization& f);
Int euler_phi(const Int& n);

inline constexpr unsigned long kDefaultRhoBudget = 10'000'000;

/// Trial division below a cutoff, Pollard-Brent rho above it.
/// Throws BoundExceeded when the rho iteration budget runs out.
Factorization factorize(const Int& n, unsigned long rho_budget = kDefaultRhoBudget);

bool is_prime(const Int& n);
PrimalityPolicy primality_policy(const Int& n);

/// Kronecker symbol (a/b), defined for all (a, b) != (0, 0).
int kronecker(const Int& a, const Int& b);

/// General CRT: moduli need not be pairwise coprime. Throws Inconsistent(i, j)
/// naming the first clashing pair. Negative residues are normalized.
CongruenceSystem crt_solve(const std::vector<std::pair<Int, Int>>& constraints);

/// Least t >= 1 with g^t = 1 mod p, for odd prime p and gcd(g, p) = 1.
Int multiplicative_order(const Int& g, const Int& p);

/// Smallest c >= 0 with base^c = target mod p, where base has order `order`
/// mod p (pass p-1 for a primitive root). Baby-step giant-step above a small
/// cutoff, linear scan below it. Throws BoundExhausted if no solution exists.
Int discrete_log(const Int& base, const Int& target, const Int& p, const Int& order);

// ---------------------------------------------------------------------------
// Prime sieves
// ---------------------------------------------------------------------------

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Calls fn(p) for every prime p <= limit, ascending, using a segmented sieve.
/// fn returns false to stop early.
template <typename Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn);

namespace detail {
void for_each_prime_impl(std::uint64_t limit, bool (*cb)(std::uint64_t, void*), void* ctx);
}

template <typename Fn>
void for_each_prime(std::uint64_t limit, Fn&& fn) {
    auto thunk = [](std::uint64_t p, void* ctx) -> bool { return (*static_cast<Fn*>(ctx))(p); };
    detail::for_each_prime_impl(limit, thunk, &fn);
}

}  // namespace wpa

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wpa/arith.hpp"

namespace wpa {

/// One weakly prime-additive number with a minimal representation.
struct WpaRecord {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> representation;  // (prime, exponent)
    unsigned kappa = 0;
    bool prime_additive = false;
    bool strongly_prime_additive = false;
    unsigned n_mod_8 = 0;
};

using Representation = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Every representation of n as a sum of powers of distinct prime divisors,
/// sizes 3 .. max_t (max_t defaults to the number of distinct prime divisors).
/// Search is meet-in-the-middle: all but the last two primes are enumerated
/// recursively, the final pair resolved against precomputed power lists.
std::vector<Representation> find_representations(std::uint64_t n,
                                                 std::optional<unsigned> max_t = std::nullopt);

/// Minimal representation length, or nullopt when n is not weakly
/// prime-additive. Ascends t = 3, 4, ... and stops at the first hit.
std::optional<unsigned> kappa(std::uint64_t n);

/// Representation using ALL distinct prime divisors of n, if one exists.
std::optional<std::map<std::uint64_t, unsigned>> is_prime_additive(std::uint64_t n);

/// Prime-additive with every exponent forced by p^a < n <= p^(a+1).
bool is_strongly_prime_additive(std::uint64_t n);

/// Streams every weakly prime-additive n <= N (with m | n when filter_m > 1),
/// ascending, skipping n <= resume_after. Each record carries the exact kappa
/// and classification flags.
void enumerate_wpa(std::uint64_t N, std::uint64_t filter_m, std::uint64_t resume_after,
                   const std::function<void(const WpaRecord&)>& emit);

struct ShortestCount {
    std::uint64_t count = 0;   // n <= N with kappa = 3
    double c_estimate = 0.0;   // count / (log N)^3
};

ShortestCount count_shortest(std::uint64_t N);

struct Div8Check {
    bool ok = true;  // no n <= N with kappa = 3 and 8 | n
    std::vector<std::uint64_t> exceptions;
};

Div8Check check_no_shortest_div8(std::uint64_t N);

}  // namespace wpa

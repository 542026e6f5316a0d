#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "wpa/enumerate.hpp"

using namespace wpa;

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// oracle: plain DFS over (skip | include some power) per prime divisor,
// independent of the library's meet-in-the-middle search
unsigned naive_min_terms(std::uint64_t n) {
    auto primes = prime_divisors(n);
    unsigned best = 0;
    auto dfs = [&](auto&& self, std::size_t i, std::uint64_t rem, unsigned terms) -> void {
        if (rem == 0) {
            if (terms >= 2 && (best == 0 || terms < best)) best = terms;
            return;
        }
        if (i == primes.size()) return;
        self(self, i + 1, rem, terms);  // skip this prime
        for (std::uint64_t v = primes[i]; v <= rem; v *= primes[i]) {
            self(self, i + 1, rem - v, terms + 1);
            if (v > rem / primes[i]) break;
        }
    };
    if (primes.size() >= 2) dfs(dfs, 0, n, 0);
    return best;  // 0 = no representation
}

}  // namespace

TEST_CASE("smallest weakly prime-additive number is 30 with minimal length 3") {
    for (std::uint64_t n = 2; n < 30; ++n) CHECK(!kappa(n).has_value());
    auto k = kappa(30);
    REQUIRE(k.has_value());
    CHECK(*k == 3);
    auto reps = find_representations(30);
    REQUIRE(!reps.empty());
    // 30 = 2 + 3 + 5^2
    Representation expect = {{2, 1}, {3, 1}, {5, 2}};
    bool found = false;
    for (const auto& r : reps)
        if (r == expect) found = true;
    CHECK(found);
}

TEST_CASE("42 is weakly prime-additive: 2^5 + 3 + 7") {
    auto reps = find_representations(42);
    Representation expect = {{2, 5}, {3, 1}, {7, 1}};
    bool found = false;
    for (const auto& r : reps)
        if (r == expect) found = true;
    CHECK(found);
    CHECK(kappa(42) == 3);
}

TEST_CASE("representations are valid and use distinct prime divisors") {
    for (std::uint64_t n : {30ULL, 42ULL, 60ULL, 2310ULL, 30030ULL}) {
        auto primes = prime_divisors(n);
        for (const auto& rep : find_representations(n)) {
            CHECK(rep.size() >= 3);
            std::uint64_t sum = 0;
            std::set<std::uint64_t> used;
            for (auto [p, e] : rep) {
                CHECK(n % p == 0);
                CHECK(used.insert(p).second);  // primes distinct within a representation
                std::uint64_t v = 1;
                for (unsigned i = 0; i < e; ++i) v *= p;
                sum += v;
            }
            CHECK(sum == n);
        }
    }
}

TEST_CASE("kappa agrees with the naive oracle up to 2000") {
    for (std::uint64_t n = 2; n <= 2000; ++n) {
        unsigned naive = naive_min_terms(n);
        auto lib = kappa(n);
        if (naive == 0) {
            CHECK(!lib.has_value());
        } else {
            CHECK(naive >= 3);  // no length-2 representation exists
            REQUIRE(lib.has_value());
            CHECK(*lib == naive);
        }
    }
}

TEST_CASE("prime-additive and strongly prime-additive agree with their definitions") {
    for (std::uint64_t n = 2; n <= 5000; ++n) {
        auto primes = prime_divisors(n);
        // strong: every exponent forced to the largest power below n
        bool strong_expected = false;
        if (primes.size() >= 2) {
            std::uint64_t sum = 0;
            bool overflow = false;
            for (std::uint64_t p : primes) {
                std::uint64_t v = p;
                while (v <= (n - 1) / p) v *= p;
                if (v >= n) { overflow = true; break; }
                sum += v;
            }
            strong_expected = !overflow && sum == n;
        }
        CHECK(is_strongly_prime_additive(n) == strong_expected);
        auto pa = is_prime_additive(n);
        if (pa) {
            CHECK(pa->size() == primes.size());
            std::uint64_t sum = 0;
            for (auto [p, e] : *pa) {
                std::uint64_t v = 1;
                for (unsigned i = 0; i < e; ++i) v *= p;
                sum += v;
            }
            CHECK(sum == n);
        }
        if (strong_expected) CHECK(pa.has_value());
    }
}

TEST_CASE("enumerate_wpa: ordering, filtering, resume") {
    std::vector<std::uint64_t> all;
    enumerate_wpa(1000, 1, 0, [&](const WpaRecord& rec) {
        all.push_back(rec.n);
        CHECK(rec.kappa >= 3);
        CHECK(rec.n_mod_8 == rec.n % 8);
    });
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == 30);

    std::vector<std::uint64_t> filtered;
    enumerate_wpa(1000, 6, 0, [&](const WpaRecord& rec) { filtered.push_back(rec.n); });
    for (std::uint64_t n : filtered) CHECK(n % 6 == 0);
    for (std::uint64_t n : all)
        if (n % 6 == 0) CHECK(std::count(filtered.begin(), filtered.end(), n) == 1);

    std::vector<std::uint64_t> resumed;
    enumerate_wpa(1000, 1, 100, [&](const WpaRecord& rec) { resumed.push_back(rec.n); });
    std::vector<std::uint64_t> tail(all.begin(),
                                    std::upper_bound(all.begin(), all.end(), 1000ULL));
    tail.erase(tail.begin(), std::upper_bound(tail.begin(), tail.end(), 100ULL));
    CHECK(resumed == tail);
}

TEST_CASE("no shortest weakly prime-additive number below 10^4 is divisible by 8") {
    Div8Check check = check_no_shortest_div8(10000);
    CHECK(check.ok);
    CHECK(check.exceptions.empty());
}

TEST_CASE("count_shortest matches a direct count") {
    ShortestCount c = count_shortest(10000);
    std::uint64_t direct = 0;
    enumerate_wpa(10000, 1, 0, [&](const WpaRecord& rec) {
        if (rec.kappa == 3) ++direct;
    });
    CHECK(c.count == direct);
    double l = std::log(10000.0);
    CHECK(c.c_estimate == doctest::Approx(static_cast<double>(direct) / (l * l * l)));
    CHECK_THROWS_AS(count_shortest(10), PreconditionViolated);
}

#include "wpa/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace wpa {

namespace {

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d * d <= rest; d == 2 ? d = 3 : d += 2) {
        if (rest % d == 0) {
            out.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) out.push_back(rest);
    return out;
}

// powers p, p^2, ..., <= limit
std::vector<std::uint64_t> powers_below(std::uint64_t p, std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = p; v <= limit; ) {
        out.push_back(v);
        if (v > limit / p) break;
        v *= p;
    }
    return out;
}

struct RepSearch {
    std::uint64_t n;
    const std::vector<std::uint64_t>* subset;               // primes, ascending
    const std::vector<std::vector<std::uint64_t>>* powers;  // per subset prime
    bool first_only;
    std::vector<Representation>* out;
    Representation current;

    // fills exponents for subset[idx..], remaining sum `rem`; returns true to stop
    bool solve(std::size_t idx, std::uint64_t rem) {
        std::size_t t = subset->size();
        if (idx + 2 < t) {
            const auto& pw = (*powers)[idx];
            for (unsigned e = 0; e < pw.size(); ++e) {
                if (pw[e] >= rem) break;
                current.push_back({(*subset)[idx], e + 1});
                if (solve(idx + 1, rem - pw[e])) return true;
                current.pop_back();
            }
            return false;
        }
        // last two primes: scan one power list, binary-search the other
        const auto& pa = (*powers)[idx];
        const auto& pb = (*powers)[idx + 1];
        for (unsigned e = 0; e < pa.size(); ++e) {
            if (pa[e] >= rem) break;
            std::uint64_t need = rem - pa[e];
            auto it = std::lower_bound(pb.begin(), pb.end(), need);
            if (it != pb.end() && *it == need) {
                current.push_back({(*subset)[idx], e + 1});
                current.push_back({(*subset)[idx + 1],
                                   static_cast<unsigned>(it - pb.begin()) + 1});
                out->push_back(current);
                current.pop_back();
                current.pop_back();
                if (first_only) return true;
            }
        }
        return false;
    }
};

// all representations with exactly the primes in `subset`
void search_subset(std::uint64_t n, const std::vector<std::uint64_t>& subset, bool first_only,
                   std::vector<Representation>& out) {
    std::vector<std::vector<std::uint64_t>> powers;
    powers.reserve(subset.size());
    for (std::uint64_t p : subset) powers.push_back(powers_below(p, n));
    RepSearch search{n, &subset, &powers, first_only, &out, {}};
    search.solve(0, n);
}

void for_each_subset(const std::vector<std::uint64_t>& primes, unsigned t,
                     const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> subset(t);
    std::vector<unsigned> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    unsigned nn = static_cast<unsigned>(primes.size());
    while (true) {
        for (unsigned i = 0; i < t; ++i) subset[i] = primes[idx[i]];
        fn(subset);
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && idx[i] == nn - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<Representation> minimal_representation(std::uint64_t n, unsigned* kappa_out) {
    std::vector<std::uint64_t> primes = distinct_prime_divisors(n);
    if (primes.size() < 3) return std::nullopt;
    for (unsigned t = 3; t <= primes.size(); ++t) {
        std::vector<Representation> found;
        for_each_subset(primes, t, [&](const std::vector<std::uint64_t>& subset) {
            if (!found.empty()) return;
            search_subset(n, subset, /*first_only=*/true, found);
        });
        if (!found.empty()) {
            if (kappa_out) *kappa_out = t;
            return found.front();
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Representation> find_representations(std::uint64_t n, std::optional<unsigned> max_t) {
    if (n < 2) throw PreconditionViolated("find_representations: n must be >= 2");
    std::vector<Representation> out;
    std::vector<std::uint64_t> primes = distinct_prime_divisors(n);
    if (primes.size() < 2) return out;  // fewer than 2 distinct prime divisors
    unsigned hi = std::min<unsigned>(static_cast<unsigned>(primes.size()),
                                     max_t.value_or(static_cast<unsigned>(primes.size())));
    for (unsigned t = 3; t <= hi; ++t) {
        for_each_subset(primes, t, [&](const std::vector<std::uint64_t>& subset) {
            search_subset(n, subset, /*first_only=*/false, out);
        });
    }
    return out;
}

std::optional<unsigned> kappa(std::uint64_t n) {
    unsigned k = 0;
    if (!minimal_representation(n, &k)) return std::nullopt;
    return k;
}

std::optional<std::map<std::uint64_t, unsigned>> is_prime_additive(std::uint64_t n) {
    std::vector<std::uint64_t> primes = distinct_prime_divisors(n);
    if (primes.size() < 2) return std::nullopt;
    std::vector<Representation> found;
    search_subset(n, primes, /*first_only=*/true, found);
    if (found.empty()) return std::nullopt;
    std::map<std::uint64_t, unsigned> out;
    for (auto [p, e] : found.front()) out[p] = e;
    return out;
}

bool is_strongly_prime_additive(std::uint64_t n) {
    std::vector<std::uint64_t> primes = distinct_prime_divisors(n);
    if (primes.size() < 2) return false;
    // the exponent of each prime is forced by p^a < n <= p^(a+1)
    std::uint64_t sum = 0;
    for (std::uint64_t p : primes) {
        if (p >= n) return false;
        std::uint64_t v = p;  // largest power of p strictly below n
        while (v * p < n) v *= p;
        sum += v;
        if (sum > n) return false;
    }
    return sum == n;
}

void enumerate_wpa(std::uint64_t N, std::uint64_t filter_m, std::uint64_t resume_after,
                   const std::function<void(const WpaRecord&)>& emit) {
    if (N < 2) return;
    std::uint64_t start = std::max<std::uint64_t>(resume_after + 1, 2);
    std::uint64_t step = filter_m > 1 ? filter_m : 1;
    std::uint64_t n = start;
    if (step > 1 && n % step != 0) n += step - n % step;
    for (; n <= N; n += step) {
        unsigned k = 0;
        auto rep = minimal_representation(n, &k);
        if (!rep) continue;
        WpaRecord rec;
        rec.n = n;
        rec.representation = *rep;
        rec.kappa = k;
        rec.prime_additive = is_prime_additive(n).has_value();
        rec.strongly_prime_additive = rec.prime_additive && is_strongly_prime_additive(n);
        rec.n_mod_8 = static_cast<unsigned>(n % 8);
        emit(rec);
    }
}

ShortestCount count_shortest(std::uint64_t N) {
    if (N < 30) throw PreconditionViolated("count_shortest: N must be >= 30");
    ShortestCount out;
    enumerate_wpa(N, 1, 0, [&](const WpaRecord& rec) {
        if (rec.kappa == 3) ++out.count;
    });
    double l = std::log(static_cast<double>(N));
    out.c_estimate = static_cast<double>(out.count) / (l * l * l);
    return out;
}

Div8Check check_no_shortest_div8(std::uint64_t N) {
    if (N < 8) throw PreconditionViolated("check_no_shortest_div8: N must be >= 8");
    Div8Check out;
    enumerate_wpa(N, 8, 0, [&](const WpaRecord& rec) {
        if (rec.kappa == 3) out.exceptions.push_back(rec.n);
    });
    out.ok = out.exceptions.empty();
    return out;
}

}  // namespace wpa

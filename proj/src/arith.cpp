#include "wpa/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <unordered_map>

namespace wpa {

namespace {

constexpr unsigned long kTrialCutoff = 10'000;  // trial division below, rho above
constexpr std::uint64_t kBsgsLinearCutoff = 1'000'000;

// Fixed Miller-Rabin bases. The first twelve decide primality for all n < 2^64;
// the full set of 64 is the probabilistic policy above that.
const unsigned kMrBases[64] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

bool miller_rabin_round(const Int& n, const Int& d, unsigned long r, unsigned base) {
    Int a(base);
    if (a >= n) {
        a %= n;
        if (a == 0) return true;
    }
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin(const Int& n, unsigned rounds) {
    // n odd, >= 5 here
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    for (unsigned i = 0; i < rounds; ++i) {
        if (!miller_rabin_round(n, d, r, kMrBases[i])) return false;
    }
    return true;
}

// Pollard-Brent rho. Returns a nontrivial factor of odd composite n, or throws
// BoundExceeded once the shared iteration budget is spent.
Int pollard_brent(const Int& n, unsigned long& budget) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                if (budget < lim) throw BoundExceeded("factoring budget exhausted");
                budget -= lim;
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle degenerated for this c, retry with the next polynomial
    }
}

void factor_into(const Int& n, std::vector<Int>& out, unsigned long& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n, budget);
    factor_into(d, out, budget);
    factor_into(n / d, out, budget);
}

}  // namespace

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool Factorization::consistent() const {
    Int prod = 1;
    const Int* prev = nullptr;
    for (const auto& [p, e] : factors) {
        if (e < 1 || p < 2 || !is_prime(p)) return false;
        if (prev && !(*prev < p)) return false;
        prev = &p;
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        prod *= pe;
    }
    return prod == n;
}

const char* to_string(PrimalityPolicy p) {
    switch (p) {
        case PrimalityPolicy::kDeterministic: return "deterministic-mr-below-2^64";
        case PrimalityPolicy::kMillerRabin64: return "miller-rabin-64-rounds";
    }
    return "?";
}

TwoAdicSplit v2_split(const Int& m) {
    if (m < 1) throw PreconditionViolated("v2_split: m must be positive");
    TwoAdicSplit s;
    s.k = mpz_scan1(m.get_mpz_t(), 0);
    s.m1 = m >> s.k;
    return s;
}

Int mod_pow(const Int& base, const Int& exponent, const Int& modulus) {
    if (modulus < 1) throw PreconditionViolated("mod_pow: modulus must be positive");
    if (exponent < 0) throw PreconditionViolated("mod_pow: exponent must be nonnegative");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int mod_pow_schoolbook(const Int& base, const Int& exponent, const Int& modulus) {
    if (modulus < 1) throw PreconditionViolated("mod_pow: modulus must be positive");
    if (exponent < 0) throw PreconditionViolated("mod_pow: exponent must be nonnegative");
    Int result = mod(Int(1), modulus);
    Int b = mod(base, modulus);
    std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    if (exponent == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result % modulus;
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * b % modulus;
    }
    return result;
}

Int euler_phi(const Factorization& f) {
    Int phi = 1;
    for (const auto& [p, e] : f.factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= pe * (p - 1);
    }
    return phi;
}

Int euler_phi(const Int& n) { return euler_phi(factorize(n)); }

Factorization factorize(const Int& n, unsigned long rho_budget) {
    if (n < 1) throw PreconditionViolated("factorize: n must be positive");
    Factorization f;
    f.n = n;
    Int rest = n;
    std::vector<Int> primes;
    unsigned long e2 = mpz_scan1(rest.get_mpz_t(), 0);
    if (e2 > 0 && rest > 1) {
        f.factors.emplace_back(2, e2);
        rest >>= e2;
    }
    for (unsigned long d = 3; d <= kTrialCutoff; d += 2) {
        if (mpz_cmp_ui(rest.get_mpz_t(), d * d) < 0) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
                rest /= d;
                ++e;
            }
            f.factors.emplace_back(d, e);
        }
    }
    if (rest > 1) {
        if (mpz_cmp_ui(rest.get_mpz_t(), kTrialCutoff * kTrialCutoff) <= 0 || is_prime(rest)) {
            // below cutoff^2 anything surviving trial division is prime
            f.factors.emplace_back(rest, 1);
        } else {
            factor_into(rest, primes, rho_budget);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                f.factors.emplace_back(primes[i], j - i);
                i = j;
            }
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return f;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    unsigned rounds = primality_policy(n) == PrimalityPolicy::kDeterministic ? 12 : 64;
    return miller_rabin(n, rounds);
}

PrimalityPolicy primality_policy(const Int& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 ? PrimalityPolicy::kDeterministic
                                                  : PrimalityPolicy::kMillerRabin64;
}

int kronecker(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw UndefinedSymbol("kronecker(0, 0) is undefined");
    Int A = a, B = b;
    int result = 1;
    if (B == 0) return (A == 1 || A == -1) ? 1 : 0;
    if (B < 0) {
        B = -B;
        if (A < 0) result = -result;
    }
    if (mpz_even_p(B.get_mpz_t())) {
        if (mpz_even_p(A.get_mpz_t())) return 0;
        unsigned long t = mpz_scan1(B.get_mpz_t(), 0);
        B >>= t;
        if (t & 1) {
            unsigned long a8 = mpz_fdiv_ui(A.get_mpz_t(), 8);
            if (a8 == 3 || a8 == 5) result = -result;
        }
    }
    // B odd and positive from here; plain Jacobi loop
    A = mod(A, B);
    while (A != 0) {
        unsigned long t = mpz_scan1(A.get_mpz_t(), 0);
        A >>= t;
        if (t & 1) {
            unsigned long b8 = mpz_fdiv_ui(B.get_mpz_t(), 8);
            if (b8 == 3 || b8 == 5) result = -result;
        }
        if (mpz_fdiv_ui(A.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(B.get_mpz_t(), 4) == 3)
            result = -result;
        std::swap(A, B);
        A = mod(A, B);
    }
    return B == 1 ? result : 0;
}

CongruenceSystem crt_solve(const std::vector<std::pair<Int, Int>>& constraints) {
    if (constraints.empty()) throw PreconditionViolated("crt_solve: empty constraint list");
    CongruenceSystem sys;
    sys.constraints.reserve(constraints.size());
    for (const auto& [r, m] : constraints) {
        if (m < 1) throw PreconditionViolated("crt_solve: modulus must be positive");
        sys.constraints.emplace_back(mod(r, m), m);
    }
    // pairwise consistency first, so the error can name the clashing pair
    for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.constraints.size(); ++j) {
            Int g;
            mpz_gcd(g.get_mpz_t(), sys.constraints[i].second.get_mpz_t(),
                    sys.constraints[j].second.get_mpz_t());
            if (mod(sys.constraints[i].first - sys.constraints[j].first, g) != 0)
                throw Inconsistent(i, j);
        }
    }
    Int r = sys.constraints[0].first, m = sys.constraints[0].second;
    for (std::size_t i = 1; i < sys.constraints.size(); ++i) {
        const Int& ri = sys.constraints[i].first;
        const Int& mi = sys.constraints[i].second;
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
        Int lcm = m / g * mi;
        Int step = mi / g;
        Int inv;
        if (step != 1) {
            Int mg = m / g;
            if (mpz_invert(inv.get_mpz_t(), mg.get_mpz_t(), step.get_mpz_t()) == 0)
                throw InternalAssertionFailed("crt_solve: inverse must exist after gcd split");
            Int t = mod((ri - r) / g * inv, step);
            r += m * t;
        }
        m = lcm;
        r = mod(r, m);
    }
    sys.solution = {r, m};
    return sys;
}

Int multiplicative_order(const Int& g, const Int& p) {
    if (mod(g, p) == 0) throw NotCoprime("multiplicative_order: p divides g");
    Factorization f = factorize(p - 1);
    Int t = p - 1;
    for (const auto& [q, e] : f.factors) {
        for (unsigned long i = 0; i < e; ++i) {
            Int cand = t / q;
            if (mod_pow(g, cand, p) == 1)
                t = cand;
            else
                break;
        }
    }
    return t;
}

Int discrete_log(const Int& base, const Int& target, const Int& p, const Int& order) {
    Int b = mod(base, p), t = mod(target, p);
    if (t == mod(Int(1), p)) return 0;
    if (order <= kBsgsLinearCutoff) {
        Int acc = mod(Int(1), p);
        for (Int c = 1; c <= order; ++c) {
            acc = acc * b % p;
            if (acc == t) return c;
        }
        throw BoundExhausted("discrete_log: target not in the subgroup");
    }
    // baby-step giant-step; digests keyed on the residue folded to 64 bits,
    // candidate hits re-verified before acceptance
    Int m;
    mpz_sqrt(m.get_mpz_t(), order.get_mpz_t());
    m += 1;
    auto digest = [](const Int& v) -> std::uint64_t {
        return mpz_fdiv_ui(v.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ull);
    };
    std::unordered_multimap<std::uint64_t, unsigned long> baby;
    unsigned long m_ul = mpz_get_ui(m.get_mpz_t());
    baby.reserve(m_ul);
    Int acc = mod(Int(1), p);
    for (unsigned long j = 0; j < m_ul; ++j) {
        baby.emplace(digest(acc), j);
        acc = acc * b % p;
    }
    Int inv_bm;
    Int bm = mod_pow(b, m, p);
    if (mpz_invert(inv_bm.get_mpz_t(), bm.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotCoprime("discrete_log: base not invertible");
    Int gamma = t;
    for (Int i = 0; i <= m; ++i) {
        auto [lo, hi] = baby.equal_range(digest(gamma));
        for (auto it = lo; it != hi; ++it) {
            Int c = i * m + it->second;
            if (mod_pow(b, c, p) == t) return c;
        }
        gamma = gamma * inv_bm % p;
    }
    throw BoundExhausted("discrete_log: target not in the subgroup");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for_each_prime(limit, [&](std::uint64_t p) {
        out.push_back(p);
        return true;
    });
    return out;
}

namespace detail {

void for_each_prime_impl(std::uint64_t limit, bool (*cb)(std::uint64_t, void*), void* ctx) {
    if (limit < 2) return;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    while (root * root > limit + 1) --root;
    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }
    for (std::uint64_t p : base) {
        if (p > limit) return;
        if (!cb(p, ctx)) return;
    }
    constexpr std::uint64_t kSegment = 1u << 20;
    std::vector<bool> seg;
    for (std::uint64_t lo = root + 1; lo <= limit; lo += kSegment) {
        std::uint64_t hi = std::min(limit, lo + kSegment - 1);
        seg.assign(hi - lo + 1, true);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = false;
        }
        for (std::uint64_t i = 0; i < seg.size(); ++i) {
            if (seg[i] && !cb(lo + i, ctx)) return;
        }
    }
}

}  // namespace detail

}  // namespace wpa

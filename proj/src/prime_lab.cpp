#include "wpa/prime_lab.hpp"

#include <cmath>

namespace wpa {

namespace {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

void check_star_preconditions(const Int& a, const Int& f, const Int& g) {
    if (gcd(a, f) != 1) throw NotCoprime("star witness: gcd(a, f) != 1");
    if (mod(f, Int(4)) != 0) throw PreconditionViolated("star witness: 4 does not divide f");
    if (g < 3 || mpz_even_p(g.get_mpz_t()) || !is_prime(g))
        throw PreconditionViolated("star witness: g is not an odd prime");
    if (mod(f, g) != 0) throw PreconditionViolated("star witness: g does not divide f");
    if (kronecker(g, a) != -1) throw PreconditionViolated("star witness: kronecker(g, a) != -1");
}

}  // namespace

Int find_prime_in_ap(const Int& a, const Int& d, const Int& min_value,
                     const std::optional<CongruenceSystem>& extra, const Int& bound) {
    if (gcd(a, d) != 1) throw NotCoprime("find_prime_in_ap: gcd(a, d) != 1");
    std::vector<std::pair<Int, Int>> constraints{{a, d}};
    if (extra) {
        for (const auto& c : extra->constraints) constraints.push_back(c);
    }
    CongruenceSystem sys = crt_solve(constraints);  // throws Inconsistent on clash
    const auto& [r, m] = *sys.solution;
    Int x = r;
    Int lo = min_value < 2 ? Int(2) : min_value;
    if (x < lo) x += ((lo - x + m - 1) / m) * m;
    for (; x <= bound; x += m) {
        if (is_prime(x)) return x;
    }
    throw BoundExhausted("find_prime_in_ap: no prime <= bound in the progression");
}

bool is_primitive_root(const Int& g, const Int& p) {
    if (p == 2) return mpz_odd_p(g.get_mpz_t());
    if (mod(g, p) == 0) return false;
    return multiplicative_order(g, p) == p - 1;
}

StarWitness find_star_witness(const Int& a, const Int& f, const Int& g, const Int& bound,
                              const std::function<bool(const StarWitness&)>& accept) {
    check_star_preconditions(a, f, g);
    Int s = mod(a, f);
    if (s < 2) s += f;
    for (; s <= bound; s += f) {
        if (!is_prime(s)) continue;
        Factorization fac = factorize(s - 1);
        StarWitness w{a, f, g, s, fac, {}, primality_policy(s)};
        bool primitive = true;
        for (const auto& [l, e] : fac.factors) {
            Int residue = mod_pow(g, (s - 1) / l, s);
            w.order_checks.emplace_back(l, residue);
            if (residue == 1) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        if (accept && !accept(w)) continue;
        return w;
    }
    throw BoundExhausted("find_star_witness: search cap reached (inconclusive)");
}

DensityReport artin_density(const Int& a, const Int& f, const Int& g,
                            std::uint64_t truncation) {
    if (g == -1 || mpz_perfect_square_p(g.get_mpz_t()))
        throw InvalidG("artin_density: g must not be -1 or a perfect square");
    if (gcd(a, f) != 1) throw NotCoprime("artin_density: gcd(a, f) != 1");
    if (truncation < 2) throw PreconditionViolated("artin_density: truncation too small");

    ArtinParams params{a, f, g, 1, g, 1, 0, 1};
    // largest h with g an exact h-th power (odd h only when g < 0)
    std::size_t bits = mpz_sizeinbase(g.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
        if (g < 0 && k % 2 == 0) continue;
        Int root;
        if (mpz_root(root.get_mpz_t(), g.get_mpz_t(), k) != 0) params.h = k;
    }
    Int ag = abs(g);
    Factorization gf = factorize(ag);
    Int g1 = 1, g2 = 1;
    for (const auto& [p, e] : gf.factors) {
        if (e % 2) g1 *= p;
        Int ph;
        mpz_pow_ui(ph.get_mpz_t(), p.get_mpz_t(), e / 2);
        g2 *= ph;
    }
    if (g < 0) g1 = -g1;
    params.g1 = g1;
    params.g2 = g2;
    Int d1 = gcd(g1, f);
    params.beta = g1 / d1;
    if (mpz_odd_p(params.beta.get_mpz_t())) {
        Int half = (params.beta - 1) / 2;
        params.gamma1 = (mpz_even_p(half.get_mpz_t()) ? d1 : -d1);
    } else {
        params.gamma1 = 1;
    }

    DensityReport rep;
    rep.params = params;
    rep.truncation_bound = truncation;

    Int af = gcd(a - 1, f);
    if (gcd(af, Int(params.h)) != 1) {
        return rep;  // A(a,f,h) = 0, delta = 0
    }
    double A = 1.0;
    for (const auto& [p, e] : factorize(af).factors) A *= 1.0 - 1.0 / p.get_d();
    Factorization hf = factorize(Int(params.h));
    for (const auto& [p, e] : hf.factors) {
        if (mod(f, p) != 0) A *= 1.0 - 1.0 / (p.get_d() - 1.0);
    }
    double p3 = 1.0;
    for_each_prime(truncation, [&](std::uint64_t p) {
        if (mpz_divisible_ui_p(f.get_mpz_t(), p)) return true;
        if (params.h % p == 0) return true;
        double pd = static_cast<double>(p);
        p3 *= 1.0 - 1.0 / (pd * (pd - 1.0));
        return true;
    });
    A *= p3;
    rep.A_value = A;

    unsigned long g1m4 = mpz_fdiv_ui(g1.get_mpz_t(), 4);
    bool corrected = g1m4 == 1 || (g1m4 == 2 && mod(f, Int(8)) == 0) ||
                     (g1m4 == 3 && mod(f, Int(4)) == 0);
    double phi_f = euler_phi(f).get_d();
    double delta = A / phi_f;
    if (corrected) {
        Int ab = abs(params.beta);
        Factorization bf = factorize(ab);
        int mu = bf.factors.size() % 2 == 0 ? 1 : -1;  // beta is squarefree
        double denom = 1.0;
        for (const auto& [p, e] : bf.factors) {
            double pd = p.get_d();
            if (mod(Int(params.h), p) == 0)
                denom *= pd - 1.0;
            else
                denom *= pd * pd - pd - 1.0;
        }
        delta *= 1.0 - kronecker(params.gamma1, a) * mu / denom;
    }
    rep.corrected = corrected;
    rep.delta = delta;
    rep.tail_error = 1.0 / static_cast<double>(truncation);
    return rep;
}

DensityReport corollary_density(const Int& a, const Int& f, const Int& g,
                                std::uint64_t truncation) {
    check_star_preconditions(a, f, g);
    if (truncation < 2) throw PreconditionViolated("corollary_density: truncation too small");
    DensityReport rep;
    rep.params = ArtinParams{a, f, g, 1, g, 1, 1, g};
    rep.truncation_bound = truncation;
    double prod = 1.0;
    for (const auto& [p, e] : factorize(gcd(a - 1, f)).factors) prod *= 1.0 - 1.0 / p.get_d();
    double p3 = 1.0;
    for_each_prime(truncation, [&](std::uint64_t p) {
        if (mpz_divisible_ui_p(f.get_mpz_t(), p)) return true;
        double pd = static_cast<double>(p);
        p3 *= 1.0 - 1.0 / (pd * (pd - 1.0));
        return true;
    });
    rep.A_value = prod * p3;
    rep.delta = 2.0 / euler_phi(f).get_d() * prod * p3;
    rep.tail_error = 1.0 / static_cast<double>(truncation);
    rep.corrected = true;
    return rep;
}

PiGCount count_pi_g(std::uint64_t x, const Int& f, const Int& a, const Int& g) {
    if (gcd(a, f) != 1) throw NotCoprime("count_pi_g: gcd(a, f) != 1");
    PiGCount out;
    bool constrained = f > 1;
    std::uint64_t fu = constrained ? mpz_get_ui(f.get_mpz_t()) : 1;
    std::uint64_t au = constrained ? mpz_get_ui(mod(a, f).get_mpz_t()) : 0;

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x))) + 1;
    std::vector<std::uint64_t> small_primes = primes_up_to(root);

    std::uint64_t factors[16];
    for_each_prime(x, [&](std::uint64_t p) {
        if (constrained && p % fu != au) return true;
        ++out.total_in_class;
        if (p == 2) {
            if (mpz_odd_p(g.get_mpz_t())) ++out.with_primitive_root;
            return true;
        }
        std::uint64_t gm = mpz_fdiv_ui(g.get_mpz_t(), p);
        if (g < 0 && gm != 0) gm = p - gm;
        if (gm == 0) return true;
        // distinct prime factors of p-1
        std::uint64_t n = p - 1;
        int nf = 0;
        for (std::uint64_t q : small_primes) {
            if (q * q > n) break;
            if (n % q == 0) {
                factors[nf++] = q;
                while (n % q == 0) n /= q;
            }
        }
        if (n > 1) factors[nf++] = n;
        for (int i = 0; i < nf; ++i) {
            if (powmod_u64(gm, (p - 1) / factors[i], p) == 1) return true;
        }
        ++out.with_primitive_root;
        return true;
    });
    return out;
}

}  // namespace wpa

// Acceptance gate: run with a criterion number 1..8, prints exactly one
// "CRITERION n: PASS|FAIL -- detail" line and exits 0 on PASS, 1 on FAIL.
//
// Criteria 1, 2 and the re-verification half of 4 fail by design of the
// underlying construction: its 2-adic congruence cannot close (the sum of the
// four prime powers lands at -2 mod 2^k, never 0), so certificates honestly
// record a nonzero residue there. Those FAIL lines are expected and
// documented; the other five checks of each certificate pass and are
// asserted as part of the same criteria runs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wpa/construct.hpp"
#include "wpa/enumerate.hpp"
#include "wpa/prime_lab.hpp"

using namespace wpa;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int report(int n, bool pass, const std::string& detail) {
    std::printf("CRITERION %d: %s -- %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
    return pass ? 0 : 1;
}

bool all_zero(const ConstructionCertificate& cert) {
    for (const auto& c : cert.congruence_checks)
        if (c.residue != 0) return false;
    return true;
}

bool five_of_six_zero(const ConstructionCertificate& cert) {
    for (const auto& c : cert.congruence_checks)
        if (c.residue != 0 && c.label != "mod 2^k") return false;
    return true;
}

// Construction suite: every target modulus and both p choices must yield a
// certificate whose six congruence checks all pass under independent
// re-verification, each run under 60 s.
int criterion1() {
    std::vector<long> ms;
    for (long m = 1; m <= 24; ++m) ms.push_back(m);
    for (long m : {40, 48, 64}) ms.push_back(m);
    int six_pass = 0, five_pass = 0, total = 0;
    double worst = 0;
    for (long m : ms)
        for (unsigned long pi : {0UL, 1UL}) {
            auto t0 = Clock::now();
            ConstructionCertificate cert = construct_len4(m, pi, 1, 1, 1);
            VerificationReport rep = verify_certificate(cert);
            double dt = seconds_since(t0);
            worst = std::max(worst, dt);
            ++total;
            if (dt >= 60.0)
                return report(1, false, "run exceeded 60 s at m=" + std::to_string(m));
            bool six = all_zero(cert) && rep.all_pass();
            if (six) ++six_pass;
            if (five_of_six_zero(cert)) ++five_pass;
        }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%d/%d runs pass all six checks (%d/%d pass the five checks mod p,q,r,s,m1; "
                  "the 2-adic check records residue -2 mod 2^k in every run); worst run %.1fs",
                  six_pass, total, five_pass, total, worst);
    return report(1, six_pass == total && five_pass == total, buf);
}

// Exact-length suite: 8m must divide the constructed number; exact-length
// claim and its cited lower bound must be recorded.
int criterion2() {
    int div_pass = 0, claim_pass = 0, total = 0;
    for (long m : {1, 2, 3, 5, 8}) {
        ConstructionCertificate cert = construct_exact_len4(m, 0, 1, 1, 1);
        ++total;
        if (all_zero(cert)) ++div_pass;  // all residues 0 <=> 8m | n
        if (cert.kappa_claim == KappaClaim::kExactly4 && !cert.kappa_lower_bound_source.empty())
            ++claim_pass;
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "8m | n holds modularly in %d/%d certificates (2-adic residue obstructs); "
                  "exact-length claim + cited lower bound recorded in %d/%d",
                  div_pass, total, claim_pass, total);
    return report(2, div_pass == total && claim_pass == total, buf);
}

// Four-prime suite: 20 random qualifying triples must close all four
// congruences; non-qualifying triples must be rejected as a precondition.
int criterion3() {
    auto primes = primes_up_to(200);
    std::vector<long> odd(primes.begin() + 1, primes.end());
    std::mt19937_64 rng(20260823);
    int done = 0, attempts = 0;
    while (done < 20 && attempts < 10000) {
        ++attempts;
        long p = odd[rng() % odd.size()];
        long q = odd[rng() % odd.size()];
        long r = odd[rng() % odd.size()];
        if (p == q || p == r || q == r) continue;
        bool qualifying = (p % 8 == 3 || p % 8 == 5) || (q % 8 == 3 || q % 8 == 5) ||
                          (r % 8 == 3 || r % 8 == 5);
        if (!qualifying) continue;
        ConstructionCertificate cert = construct_theorem2(p, q, r, 1, 1, 1, 1);
        if (!all_zero(cert) || !verify_certificate(cert).all_pass())
            return report(3, false,
                          "checks open at (" + std::to_string(p) + "," + std::to_string(q) + "," +
                              std::to_string(r) + ")");
        ++done;
    }
    if (done < 20) return report(3, false, "could not draw 20 qualifying triples");
    // triples with every member === 1 or 7 mod 8 must be rejected
    for (auto [p, q, r] : {std::array<long, 3>{7, 17, 41}, {23, 31, 47}, {17, 73, 89}}) {
        try {
            construct_theorem2(p, q, r, 1, 1, 1, 1);
            return report(3, false, "non-qualifying triple was not rejected");
        } catch (const NoQualifyingRole&) {
        }
    }
    return report(3, true, "20 random qualifying triples close all four congruences; "
                           "3 non-qualifying triples rejected as precondition errors");
}

// Lift: d = 1 + phi(pqrm) must re-verify three certificates; d = 2 rejected.
int criterion4() {
    int reverified = 0, five_ok = 0, rejected = 0, total = 0;
    for (long m : {1, 2, 3}) {
        ConstructionCertificate cert = construct_len4(m, 0, 1, 1, 1);
        Int d = 1 + euler_phi(cert.p * cert.q * cert.r * cert.working_modulus);
        ConstructionCertificate lifted = power_lift_d(cert, d);
        ++total;
        VerificationReport rep = verify_certificate(lifted);
        if (rep.all_pass()) ++reverified;
        if (five_of_six_zero(lifted)) ++five_ok;
        try {
            power_lift_d(cert, 2);
        } catch (const BadExponent&) {
            ++rejected;
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "lift re-verifies fully in %d/%d (five of six checks hold in %d/%d; the "
                  "2-adic residue persists through the lift); d = 2 rejected in %d/%d",
                  reverified, total, five_ok, total, rejected, total);
    return report(4, reverified == total && rejected == total, buf);
}

// Density: empirical primitive-root ratio at 2e6 vs truncated product; the
// special-case formula agrees with the general one on 50 random valid inputs.
int criterion5() {
    auto t0 = Clock::now();
    PiGCount c = count_pi_g(2000000, 1, 0, 2);
    double ratio = static_cast<double>(c.with_primitive_root) / c.total_in_class;
    DensityReport artin = artin_density(1, 1, 2, 1000000);
    if (std::abs(ratio - artin.delta) > 0.01)
        return report(5, false, "ratio " + std::to_string(ratio) + " vs product " +
                                    std::to_string(artin.delta));
    if (std::abs(artin.delta - 0.37396) > 0.0001)
        return report(5, false, "truncated product drifted: " + std::to_string(artin.delta));

    // 50 random valid (a, f, g): g odd prime, g | f, 4 | f, gcd(a,f)=1, (g/a) = -1
    std::mt19937_64 rng(424242);
    std::vector<long> gs = {3, 5, 7, 11, 13, 17, 19, 23};
    int done = 0;
    while (done < 50) {
        long g = gs[rng() % gs.size()];
        long f = 4 * g * (1 + static_cast<long>(rng() % 12));
        long a = 1 + static_cast<long>(rng() % f);
        Int gc;
        mpz_gcd(gc.get_mpz_t(), Int(a).get_mpz_t(), Int(f).get_mpz_t());
        if (gc != 1) continue;
        if (kronecker(Int(g), Int(a)) != -1) continue;
        DensityReport general = artin_density(a, f, g, 100000);
        DensityReport special = corollary_density(a, f, g, 100000);
        if (std::abs(general.delta - special.delta) >
            2 * (general.tail_error + special.tail_error))
            return report(5, false,
                          "formulas disagree at a=" + std::to_string(a) + " f=" +
                              std::to_string(f) + " g=" + std::to_string(g));
        ++done;
    }
    double dt = seconds_since(t0);
    if (dt >= 300) return report(5, false, "runtime exceeded 5 minutes");
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "ratio %.5f vs truncated product %.5f (|diff| < 0.01); 50 random special-case "
                  "agreements within 2*tail_error; %.1fs",
                  ratio, artin.delta, dt);
    return report(5, true, buf);
}

// Kronecker laws, exhaustively on their domains of validity.
int criterion6() {
    auto odd_part = [](long x) {
        x = std::labs(x);
        while (x % 2 == 0) x /= 2;
        return x;
    };
    // 1: multiplicativity in the upper argument (all signed c != 0)
    for (long a = -200; a <= 200; ++a)
        for (long b = -200; b <= 200; ++b) {
            if (a == 0 || b == 0) continue;
            for (long c : {-9L, -5L, -2L, 2L, 3L, 15L}) {
                if (kronecker(Int(a) * Int(b), Int(c)) !=
                    kronecker(Int(a), Int(c)) * kronecker(Int(b), Int(c)))
                    return report(6, false, "multiplicativity failed");
            }
        }
    // 2: reciprocity with odd parts (positive arguments; the signed statement
    //    is false and documented as such)
    for (long a = 1; a <= 200; ++a)
        for (long b = 1; b <= 200; ++b) {
            int sign = ((odd_part(a) - 1) / 2 * ((odd_part(b) - 1) / 2)) % 2 ? -1 : 1;
            if (kronecker(Int(a), Int(b)) != sign * kronecker(Int(b), Int(a)))
                return report(6, false, "reciprocity failed");
        }
    auto primes = primes_up_to(500);
    for (std::uint64_t pu : primes) {
        if (pu == 2) continue;
        long p = static_cast<long>(pu);
        // 3: (-2/p) table
        int expect = (p % 8 == 1 || p % 8 == 3) ? 1 : -1;
        if (kronecker(Int(-2), Int(p)) != expect) return report(6, false, "(-2/p) table failed");
        // 4: Euler criterion
        for (long a = -200; a <= 200; ++a) {
            if (a % p == 0) continue;
            if (mod(Int(kronecker(Int(a), Int(p))), Int(p)) !=
                mod_pow(mod(Int(a), Int(p)), Int((p - 1) / 2), Int(p)))
                return report(6, false, "Euler criterion failed");
        }
        // 5: prime-prime reciprocity
        for (std::uint64_t qu : primes) {
            if (qu == 2 || qu == pu) continue;
            long q = static_cast<long>(qu);
            int lhs = kronecker(Int(p), Int(q));
            int rhs = kronecker(Int(q), Int(p));
            bool flip = p % 4 == 3 && q % 4 == 3;
            if (lhs != (flip ? -rhs : rhs)) return report(6, false, "prime reciprocity failed");
        }
    }
    return report(6, true,
                  "five symbol laws hold exhaustively (|a|,|b| <= 200; odd primes < 500; "
                  "reciprocity-with-odd-parts on its positive domain)");
}

// Enumeration ground truth at 1e5.
int criterion7() {
    auto t0 = Clock::now();
    std::uint64_t first = 0;
    unsigned first_kappa = 0;
    enumerate_wpa(100000, 1, 0, [&](const WpaRecord& rec) {
        if (first == 0) {
            first = rec.n;
            first_kappa = rec.kappa;
        }
    });
    if (first != 30 || first_kappa != 3)
        return report(7, false, "smallest instance " + std::to_string(first));
    Div8Check d8 = check_no_shortest_div8(100000);
    if (!d8.ok || !d8.exceptions.empty())
        return report(7, false, "a shortest instance divisible by 8 appeared");
    ShortestCount c4 = count_shortest(10000);
    ShortestCount c5 = count_shortest(100000);
    double dt = seconds_since(t0);
    if (dt >= 600) return report(7, false, "runtime exceeded 10 minutes");
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "smallest = 30 (length 3); no length-3 multiple of 8 up to 1e5; "
                  "count/(log N)^3 = %.4f at 1e4 and %.4f at 1e5 (logged, not asserted); %.1fs",
                  c4.c_estimate, c5.c_estimate, dt);
    return report(7, true, buf);
}

// Mutation hardening: every perturbation must flip at least one check that
// passed in the unmutated certificate.
int criterion8() {
    ConstructionCertificate t2 = construct_theorem2(5, 7, 3, 1, 1, 1, 1);
    ConstructionCertificate c4 = construct_len4(8, 0, 1, 1, 1);
    int mutants = 0;
    for (const ConstructionCertificate& base : {t2, c4}) {
        VerificationReport before = verify_certificate(base);
        auto newly_failing = [&](const ConstructionCertificate& mutant) {
            VerificationReport after = verify_certificate(mutant);
            for (std::size_t i = 0; i < after.items.size() && i < before.items.size(); ++i)
                if (before.items[i].pass && !after.items[i].pass) return true;
            return after.items.size() != before.items.size();
        };
        std::vector<ConstructionCertificate> muts;
        ConstructionCertificate m = base;
        m.a += 1; muts.push_back(m);
        m = base; m.b += 1; muts.push_back(m);
        m = base; m.c += 1; muts.push_back(m);
        m = base; m.d += 1; muts.push_back(m);
        m = base; m.s = m.s * m.s; muts.push_back(m);          // composite in the s role
        m = base; m.p = m.p == 11 ? 13 : 11; muts.push_back(m);
        m = base; m.c0 += 1; muts.push_back(m);
        m = base; m.s0 += 1; muts.push_back(m);
        m = base; m.congruence_checks[0].residue += 1; muts.push_back(m);
        m = base; m.witness.order_checks[0].second = 1; muts.push_back(m);
        for (const auto& mut : muts) {
            ++mutants;
            if (!newly_failing(mut))
                return report(8, false, "a perturbed certificate still verified");
        }
    }
    return report(8, true, std::to_string(mutants) +
                               " single-field perturbations each break verification");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
        return 2;
    }
    int n = std::atoi(argv[1]);
    try {
        switch (n) {
            case 1: return criterion1();
            case 2: return criterion2();
            case 3: return criterion3();
            case 4: return criterion4();
            case 5: return criterion5();
            case 6: return criterion6();
            case 7: return criterion7();
            case 8: return criterion8();
        }
    } catch (const std::exception& e) {
        return report(n, false, std::string("unexpected exception: ") + e.what());
    }
    std::fprintf(stderr, "usage: acceptance <criterion 1..8>\n");
    return 2;
}

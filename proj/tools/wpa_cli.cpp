// wpa: command-line front end for the weakly-prime-additive toolkit.
//
// Exit codes: 0 success, 2 precondition violated, 3 search bound exhausted,
// 4 internal assertion failed (an invariant the construction relies on did
// not hold -- a bug or a defect in the underlying argument, not bad input).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wpa/serialize.hpp"

namespace {

using wpa::Int;
using wpa::json;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitBoundExhausted = 3;
constexpr int kExitAssertionFailed = 4;

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;
    bool human = false;

    void open(const std::string& path, const std::string& format) {
        human = format == "human";
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw wpa::PreconditionViolated("cannot open output file: " + path);
            stream = &file;
        }
    }

    void header(const std::string& command) {
        json h = {{"command", command}, {"schema_version", wpa::kSchemaVersion}, {"type", "header"}};
        if (human)
            *stream << "# " << command << " (schema " << wpa::kSchemaVersion << ")\n";
        else
            *stream << h.dump() << "\n";
    }

    void record(const json& j) {
        if (human) {
            for (auto it = j.begin(); it != j.end(); ++it)
                *stream << it.key() << " = " << it.value().dump() << "\n";
            *stream << "--\n";
        } else {
            *stream << j.dump() << "\n";
        }
    }
};

// Default search bounds, overridable by a JSON file named in WPA_BOUNDS_FILE
// ({"prime_search": "...", "witness": "...", "truncation": N}) and then by
// per-command flags.
struct Defaults {
    wpa::SearchBounds bounds;
    std::uint64_t truncation = 1'000'000;
};

Defaults load_defaults() {
    Defaults d;
    const char* path = std::getenv("WPA_BOUNDS_FILE");
    if (!path || !*path) return d;
    std::ifstream in(path);
    if (!in) throw wpa::PreconditionViolated(std::string("WPA_BOUNDS_FILE unreadable: ") + path);
    json j = json::parse(in);
    if (j.contains("prime_search")) d.bounds.prime_search = Int(j["prime_search"].get<std::string>());
    if (j.contains("witness")) d.bounds.witness = Int(j["witness"].get<std::string>());
    if (j.contains("truncation")) d.truncation = j["truncation"].get<std::uint64_t>();
    return d;
}

std::vector<wpa::ConstructionCertificate> read_certificates(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw wpa::PreconditionViolated("cannot open input file: " + path);
        in = &file;
    }
    std::vector<wpa::ConstructionCertificate> certs;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (j.value("type", "") == "header") continue;
        certs.push_back(wpa::certificate_from_json(j));
    }
    if (certs.empty()) throw wpa::PreconditionViolated("no certificate records in " + path);
    return certs;
}

bool all_checks_zero(const wpa::ConstructionCertificate& cert) {
    for (const auto& c : cert.congruence_checks)
        if (c.residue != 0) return false;
    return true;
}

// Emits the certificate either way; a nonzero residue means a fact the
// construction argues for failed to materialize, reported as exit 4.
int emit_certificate(Output& out, const wpa::ConstructionCertificate& cert) {
    out.record(wpa::to_json(cert));
    return all_checks_zero(cert) ? kExitOk : kExitAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive toolkit for weakly prime-additive numbers"};
    app.require_subcommand(1);

    Defaults defaults;
    try {
        defaults = load_defaults();
    } catch (const wpa::PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }

    std::string out_path = "-";
    std::string format = "json-lines";
    app.add_option("--out", out_path, "Output path ('-' for stdout)");
    app.add_option("--format", format, "json-lines | human")
        ->check(CLI::IsMember({"json-lines", "human"}));

    std::string m_str = "1", a_str, f_str, g_str = "2";
    std::string p_str, q_str, r_str;
    std::string aprime = "1", bprime = "1", cprime = "1", dprime = "1";
    std::string d_str, in_path = "-";
    std::string prime_bound, witness_bound;
    unsigned long p_index = 0;
    std::uint64_t x = 0, limit = 0, truncation = defaults.truncation;
    std::uint64_t filter_m = 1, resume_after = 0;
    std::string checkpoint;
    bool corollary = false;

    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--prime-bound", prime_bound, "Cap for progression prime scans");
        cmd->add_option("--witness-bound", witness_bound, "Cap for the primitive-root witness scan");
    };
    auto effective_bounds = [&]() {
        wpa::SearchBounds b = defaults.bounds;
        if (!prime_bound.empty()) b.prime_search = Int(prime_bound);
        if (!witness_bound.empty()) b.witness = Int(witness_bound);
        return b;
    };

    CLI::App* c4 = app.add_subcommand(
        "construct4", "Certificate for a length-<=4 number divisible by the target modulus");
    c4->add_option("--m", m_str, "Target divisor")->required();
    c4->add_option("--p-index", p_index, "Which coprime odd prime takes the p role (0-based)");
    c4->add_option("--aprime", aprime, "Free parameter steering exponent a");
    c4->add_option("--bprime", bprime, "Free parameter steering exponent b (must be odd)");
    c4->add_option("--cprime", cprime, "Free parameter steering exponent c");
    add_bounds(c4);

    CLI::App* e4 = app.add_subcommand(
        "exact4", "Certificate with exact length 4, built against 8 times the target");
    e4->add_option("--m", m_str, "Target divisor")->required();
    e4->add_option("--p-index", p_index, "Which coprime odd prime takes the p role (0-based)");
    e4->add_option("--aprime", aprime, "Free parameter steering exponent a");
    e4->add_option("--bprime", bprime, "Free parameter steering exponent b (must be odd)");
    e4->add_option("--cprime", cprime, "Free parameter steering exponent c");
    add_bounds(e4);

    CLI::App* t2 = app.add_subcommand(
        "theorem2", "Four-prime certificate: p*q*r*s divides p^a + q^b + r^c + s^d");
    t2->add_option("--p", p_str, "First odd prime")->required();
    t2->add_option("--q", q_str, "Second odd prime")->required();
    t2->add_option("--r", r_str, "Third odd prime")->required();
    t2->add_option("--aprime", aprime, "Free parameter steering exponent a");
    t2->add_option("--bprime", bprime, "Free parameter steering exponent b");
    t2->add_option("--cprime", cprime, "Free parameter steering exponent c");
    t2->add_option("--dprime", dprime, "Free parameter steering exponent d");
    add_bounds(t2);

    CLI::App* lf = app.add_subcommand("lift", "Replace the exponent of s and re-run every check");
    lf->add_option("--in", in_path, "Certificate JSON-lines file ('-' for stdin)");
    lf->add_option("--d", d_str, "New exponent for s (must be 1 mod phi(p*q*r*M))")->required();

    CLI::App* sw = app.add_subcommand(
        "star-witness", "Prime s in a progression with a prescribed primitive root");
    sw->add_option("--a", a_str, "Residue class")->required();
    sw->add_option("--f", f_str, "Progression modulus")->required();
    sw->add_option("--g", g_str, "Required primitive root")->required();
    add_bounds(sw);

    CLI::App* de = app.add_subcommand(
        "density", "Conditional density of primes in a class with a prescribed primitive root");
    de->add_option("--a", a_str, "Residue class")->required();
    de->add_option("--f", f_str, "Progression modulus")->required();
    de->add_option("--g", g_str, "Primitive root candidate")->required();
    de->add_option("--truncation", truncation, "Euler products truncated at primes <= this");
    de->add_flag("--corollary", corollary, "Use the closed-form special case");

    CLI::App* cp = app.add_subcommand(
        "count-pi", "Count primes <= x in a class having g as a primitive root");
    cp->add_option("--x", x, "Upper limit")->required();
    cp->add_option("--f", f_str, "Progression modulus (1 = unconstrained)")->default_val("1");
    cp->add_option("--a", a_str, "Residue class")->default_val("0");
    cp->add_option("--g", g_str, "Primitive root candidate")->required();

    CLI::App* en = app.add_subcommand(
        "enumerate", "Stream every weakly prime-additive n <= limit with exact minimal length");
    en->add_option("--limit", limit, "Upper limit")->required();
    en->add_option("--filter-m", filter_m, "Keep only multiples of this");
    en->add_option("--resume-after", resume_after, "Skip n <= this");
    en->add_option("--checkpoint", checkpoint,
                   "File holding the last emitted n; read at start, rewritten as records stream");

    CLI::App* cs = app.add_subcommand(
        "count-shortest", "Count n <= limit of minimal length 3 and report count / (log N)^3");
    cs->add_option("--limit", limit, "Upper limit")->required();

    CLI::App* c8 = app.add_subcommand(
        "check8", "Confirm no n <= limit of minimal length 3 is divisible by 8");
    c8->add_option("--limit", limit, "Upper limit")->required();

    CLI::App* vf = app.add_subcommand("verify", "Re-check certificates from scratch");
    vf->add_option("--in", in_path, "Certificate JSON-lines file ('-' for stdin)");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    Output out;
    CLI::App* cmd = app.get_subcommands().front();
    try {
        out.open(out_path, format);
        out.header(cmd->get_name());

        if (cmd == c4) {
            auto cert = wpa::construct_len4(Int(m_str), p_index, Int(aprime), Int(bprime),
                                            Int(cprime), effective_bounds());
            return emit_certificate(out, cert);
        }
        if (cmd == e4) {
            auto cert = wpa::construct_exact_len4(Int(m_str), p_index, Int(aprime), Int(bprime),
                                                  Int(cprime), effective_bounds());
            return emit_certificate(out, cert);
        }
        if (cmd == t2) {
            auto cert = wpa::construct_theorem2(Int(p_str), Int(q_str), Int(r_str), Int(aprime),
                                                Int(bprime), Int(cprime), Int(dprime),
                                                effective_bounds());
            return emit_certificate(out, cert);
        }
        if (cmd == lf) {
            auto certs = read_certificates(in_path);
            int status = kExitOk;
            for (const auto& cert : certs) {
                auto lifted = wpa::power_lift_d(cert, Int(d_str));
                if (emit_certificate(out, lifted) != kExitOk) status = kExitAssertionFailed;
            }
            return status;
        }
        if (cmd == sw) {
            auto b = effective_bounds();
            auto witness = wpa::find_star_witness(Int(a_str), Int(f_str), Int(g_str), b.witness);
            json j = wpa::to_json(witness);
            j["schema_version"] = wpa::kSchemaVersion;
            j["type"] = "star_witness";
            out.record(j);
            return kExitOk;
        }
        if (cmd == de) {
            auto report = corollary
                              ? wpa::corollary_density(Int(a_str), Int(f_str), Int(g_str), truncation)
                              : wpa::artin_density(Int(a_str), Int(f_str), Int(g_str), truncation);
            out.record(wpa::to_json(report));
            return kExitOk;
        }
        if (cmd == cp) {
            auto count = wpa::count_pi_g(x, Int(f_str), Int(a_str), Int(g_str));
            out.record(wpa::to_json(count, x, Int(f_str), Int(a_str), Int(g_str)));
            return kExitOk;
        }
        if (cmd == en) {
            if (!checkpoint.empty() && resume_after == 0) {
                std::ifstream ck(checkpoint);
                if (ck) ck >> resume_after;
            }
            wpa::enumerate_wpa(limit, filter_m, resume_after, [&](const wpa::WpaRecord& rec) {
                out.record(wpa::to_json(rec));
                if (!checkpoint.empty()) {
                    std::ofstream ck(checkpoint, std::ios::trunc);
                    ck << rec.n << "\n";
                }
            });
            return kExitOk;
        }
        if (cmd == cs) {
            auto count = wpa::count_shortest(limit);
            out.record({{"schema_version", wpa::kSchemaVersion},
                        {"type", "shortest_count"},
                        {"limit", limit},
                        {"count", count.count},
                        {"c_estimate", count.c_estimate}});
            return kExitOk;
        }
        if (cmd == c8) {
            auto check = wpa::check_no_shortest_div8(limit);
            out.record({{"schema_version", wpa::kSchemaVersion},
                        {"type", "div8_check"},
                        {"limit", limit},
                        {"ok", check.ok},
                        {"exceptions", check.exceptions}});
            return kExitOk;
        }
        if (cmd == vf) {
            auto certs = read_certificates(in_path);
            bool all = true;
            for (const auto& cert : certs) {
                auto report = wpa::verify_certificate(cert);
                out.record(wpa::to_json(report));
                if (!report.all_pass()) all = false;
            }
            return all ? kExitOk : kExitAssertionFailed;
        }
    } catch (const wpa::InternalAssertionFailed& e) {
        std::cerr << "error (internal assertion): " << e.what() << "\n";
        return kExitAssertionFailed;
    } catch (const wpa::BoundExhausted& e) {
        std::cerr << "error (bound exhausted): " << e.what() << "\n";
        return kExitBoundExhausted;
    } catch (const wpa::BoundExceeded& e) {
        std::cerr << "error (factoring budget exhausted): " << e.what() << "\n";
        return kExitBoundExhausted;
    } catch (const wpa::Inconsistent& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const wpa::PreconditionViolated& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const wpa::UndefinedSymbol& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const json::exception& e) {
        std::cerr << "error (malformed input): " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}

// Command-line front end for building, inspecting and auditing Z2Z4-additive codes.
//
// Exit status: 0 success or "holds", 1 "fails", 2 inconclusive, 3 usage,
// I/O or parse error.

#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "z2z4/acceptance.hpp"
#include "z2z4/code_io.hpp"
#include "z2z4/constructions.hpp"
#include "z2z4/verification.hpp"

using namespace z2z4;

namespace {

constexpr int kExitIo = 3;

struct Options {
    std::string in;
    std::string out;
    bool json = false;
    bool no_timing = false;
    std::uint64_t cap = kDefaultCap;
    std::uint64_t budget = kDefaultArrangementBudget;
    int r = 2;
    int t = 0;
    unsigned workers = 1;
    std::string family;
    std::string check;
    std::string claim;
};

Z2Z4Code load(const Options& o)
{
    if (o.in.empty()) throw std::runtime_error("--in is required");
    return read_code_file(o.in).to_code(o.cap);
}

void emit_code(const Options& o, const Z2Z4Code& code, const std::string& comment)
{
    if (o.out.empty())
        std::cout << format_code_file(code, comment);
    else
        write_code_file(o.out, code, comment);
}

int emit_report(const Options& o, const AuditReport& rep)
{
    if (o.json) {
        std::cout << rep.to_json(!o.no_timing) << '\n';
        return exit_code(rep.verdict);
    }
    std::cout << rep.claim << ": " << to_string(rep.verdict) << '\n';
    if (!rep.summary.empty()) std::cout << "  " << rep.summary << '\n';
    for (const auto& [k, v] : rep.params) std::cout << "  param " << k << " = " << v << '\n';
    for (const auto& [k, v] : rep.counters) std::cout << "  " << k << " = " << v << '\n';
    const auto witness = nlohmann::json::parse(rep.to_json(false))["witness"];
    if (!witness.is_null()) std::cout << "  witness " << witness.dump() << '\n';
    if (!o.no_timing) std::cout << "  elapsed " << rep.elapsed_ms << " ms\n";
    return exit_code(rep.verdict);
}

int t_or(const Options& o, int fallback)
{
    return o.t == 0 ? fallback : o.t;
}

Z2Z4Code build_family(const Options& o)
{
    if (o.family == "simplex") return simplex_cyclic(o.r);
    if (o.family == "hamming") return hamming_cyclic(o.r);
    if (o.family == "perfect") return build_perfect({o.r, t_or(o, 2 * o.r)}, o.cap);
    if (o.family == "cstar") return build_cstar(o.cap);
    if (o.family == "dual-perfect") return dual(build_perfect({o.r, t_or(o, 2 * o.r)}, o.cap));
    if (o.family == "extended") return extend(build_perfect({o.r, t_or(o, 2 * o.r)}, o.cap));
    throw std::invalid_argument("unknown family " + o.family);
}

std::map<std::string, std::int64_t> shape_params(const Z2Z4Code& code)
{
    return {{"alpha", static_cast<std::int64_t>(code.alpha())}, {"beta", static_cast<std::int64_t>(code.beta())}};
}

AuditReport check_report(const Options& o, const Z2Z4Code& code)
{
    if (o.check == "cyclic-any")
        return audit_no_cyclic_arrangement("no_cyclic_arrangement", code, shape_params(code), o.budget, o.workers);

    const auto start = std::chrono::steady_clock::now();
    AuditReport rep;
    rep.params = shape_params(code);
    if (o.check == "perfect") {
        rep.claim = "perfect";
        const bool ok = is_perfect(code);
        rep.verdict = ok ? Verdict::Holds : Verdict::Fails;
        rep.counters["sphere_method"] = code.length_bits() <= 24 && code.log2_size() < 63 && code.size() <= code.cap();
        if (ok) {
            rep.summary = "every vector is within distance 1 of exactly one codeword";
        } else {
            auto w = perfectness_witness(code);
            rep.summary = w.size() == 2   ? "two codewords at distance less than 3"
                          : w.size() == 1 ? "a vector at distance 2 or more from every codeword"
                                          : "no witness found by sampling";
            if (!w.empty()) rep.witness = std::move(w);
        }
    } else if (o.check == "cyclic") {
        rep.claim = "cyclic";
        rep.verdict = Verdict::Holds;
        rep.summary = "closed under the cyclic shift";
        for (const auto& g : code.reduced().rows())
            if (!code.contains(g.sigma())) {
                rep.verdict = Verdict::Fails;
                rep.summary = "a generator whose shift leaves the code";
                rep.witness = std::vector<MixedVector>{g};
                break;
            }
    } else if (o.check == "gray-linear") {
        rep.claim = "gray_linear";
        const auto lin = gray_image_linear(code);
        rep.verdict = lin.linear ? Verdict::Holds : Verdict::Fails;
        if (lin.linear) {
            rep.summary = "the Gray image is a binary linear code";
        } else {
            rep.summary = "two Gray codewords whose sum is not a Gray codeword";
            rep.witness = std::vector<BinaryVector>{lin.witness->first, lin.witness->second};
        }
    } else {
        throw std::invalid_argument("unknown check " + o.check);
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

AuditReport claim_report(const Options& o)
{
    if (o.claim == "prop_3_1") return verify_prop_3_1(o.r, t_or(o, 2 * o.r));
    if (o.claim == "lemma_3_7") return verify_lemma_3_7(o.r);
    if (o.claim == "thm_3_11") return audit_theorem_3_11(o.r);
    if (o.claim == "structure_d") {
        if (!o.in.empty()) return verify_structure_d(load(o), o.r);
        if (o.r != 2) throw std::invalid_argument("structure_d needs --in for r != 2");
        return verify_structure_d(dual(build_cstar(o.cap)), 2);
    }
    throw std::invalid_argument("unknown claim " + o.claim);
}

int run_type(const Options& o)
{
    const auto code = load(o);
    const auto t = compute_type(code);
    if (o.json) {
        nlohmann::ordered_json j;
        j["alpha"] = t.alpha;
        j["beta"] = t.beta;
        j["gamma"] = t.gamma;
        j["delta"] = t.delta;
        j["kappa"] = t.kappa;
        j["log2_size"] = code.log2_size();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "type " << t.to_string() << "\nlog2 |C| = " << code.log2_size() << '\n';
    }
    return 0;
}

int run_suite(const Options& o)
{
    int failed = 0;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& r : run_acceptance(std::max(2u, o.workers))) {
        if (!r.passed) ++failed;
        if (o.json) {
            nlohmann::ordered_json j;
            j["id"] = r.id;
            j["name"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            if (!o.no_timing) j["elapsed_ms"] = r.elapsed_ms;
            all.push_back(j);
        } else {
            std::cout << format_result(r) << std::endl;
        }
    }
    if (o.json) std::cout << all.dump(2) << '\n';
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build, inspect and audit Z2Z4-additive codes"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--no-timing", o.no_timing, "Omit elapsed times, for reproducible output");
        sub->add_option("--cap", o.cap, "Enumeration cap (codewords)");
    };

    auto* build = app.add_subcommand("build", "Write a code of a named family");
    build->add_option("--family", o.family, "Code family")
        ->required()
        ->check(CLI::IsMember({"simplex", "hamming", "perfect", "cstar", "dual-perfect", "extended"}));
    build->add_option("--r", o.r, "Parameter r");
    build->add_option("--t", o.t, "Parameter t (defaults to 2r)");
    build->add_option("--out", o.out, "Output code file (default stdout)");
    build->add_option("--cap", o.cap, "Enumeration cap (codewords)");

    auto* type = app.add_subcommand("type", "Print the type of a code");
    type->add_option("--in", o.in, "Input code file")->required();
    add_common(type);

    auto* dual_cmd = app.add_subcommand("dual", "Write the dual of a code");
    dual_cmd->add_option("--in", o.in, "Input code file")->required();
    dual_cmd->add_option("--out", o.out, "Output code file (default stdout)");
    dual_cmd->add_option("--cap", o.cap, "Enumeration cap (codewords)");

    auto* verify = app.add_subcommand("verify", "Decide a property of a code");
    verify->add_option("--in", o.in, "Input code file")->required();
    verify->add_option("--check", o.check, "Property")
        ->required()
        ->check(CLI::IsMember({"perfect", "cyclic", "cyclic-any", "gray-linear"}));
    verify->add_option("--budget", o.budget, "Arrangement budget for cyclic-any");
    verify->add_option("--workers", o.workers, "Worker threads for cyclic-any")->check(CLI::Range(1u, 256u));
    add_common(verify);

    auto* audit = app.add_subcommand("audit", "Run an instance-level audit");
    audit->add_option("--claim", o.claim, "Claim")
        ->required()
        ->check(CLI::IsMember({"prop_3_1", "lemma_3_7", "structure_d", "thm_3_11"}));
    audit->add_option("--r", o.r, "Parameter r");
    audit->add_option("--t", o.t, "Parameter t (defaults to 2r)");
    audit->add_option("--in", o.in, "Code file for structure_d");
    add_common(audit);

    auto* unique = app.add_subcommand("search-unique", "Search the cyclic duals at (alpha, beta) = (3, 6)");
    unique->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    unique->add_flag("--json", o.json, "JSON output");
    unique->add_flag("--no-timing", o.no_timing, "Omit elapsed times");

    auto* suite = app.add_subcommand("suite", "Run every acceptance criterion");
    suite->add_option("--workers", o.workers, "Worker threads for the parallel determinism check");
    suite->add_flag("--json", o.json, "JSON output");
    suite->add_flag("--no-timing", o.no_timing, "Omit elapsed times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;
    }

    try {
        if (*build) {
            const auto code = build_family(o);
            const bool has_r = o.family != "cstar";
            const bool has_t = o.family == "perfect" || o.family == "dual-perfect" || o.family == "extended";
            std::string comment = o.family;
            if (has_r) comment += " r=" + std::to_string(o.r);
            if (has_t) comment += " t=" + std::to_string(t_or(o, 2 * o.r));
            emit_code(o, code, comment);
            return 0;
        }
        if (*type) return run_type(o);
        if (*dual_cmd) {
            emit_code(o, dual(load(o)), "dual of " + o.in);
            return 0;
        }
        if (*verify) return emit_report(o, check_report(o, load(o)));
        if (*audit) return emit_report(o, claim_report(o));
        if (*unique) return emit_report(o, uniqueness_search(o.workers).report);
        if (*suite) return run_suite(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitIo;
}

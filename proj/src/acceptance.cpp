#include "z2z4/acceptance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include "z2z4/constructions.hpp"
#include "z2z4/verification.hpp"

namespace z2z4 {

namespace {

using Clock = std::chrono::steady_clock;

// Collects failed checks; the criterion passes when nothing was recorded.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        ++total_;
        if (!ok) failures_.push_back(what);
    }

    bool ok() const { return failures_.empty(); }

    std::string detail(const std::string& on_success) const
    {
        if (ok()) return on_success;
        std::string out = std::to_string(failures_.size()) + "/" + std::to_string(total_) + " checks failed: ";
        for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
        return out;
    }

private:
    std::size_t total_ = 0;
    std::vector<std::string> failures_;
};

CriterionResult run(int id, std::string name, double limit_ms, const std::function<std::string(Checks&)>& body)
{
    CriterionResult r{id, std::move(name), false, {}, 0.0, limit_ms};
    const auto start = Clock::now();
    Checks checks;
    std::string summary;
    try {
        summary = body(checks);
    } catch (const std::exception& e) {
        checks.expect(false, std::string("exception: ") + e.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (limit_ms > 0 && r.elapsed_ms >= limit_ms)
        checks.expect(false, "runtime " + std::to_string(r.elapsed_ms) + " ms over the " + std::to_string(limit_ms) +
                                 " ms bound");
    r.passed = checks.ok();
    r.detail = checks.detail(summary);
    return r;
}

// Binary cyclic Hamming code of length 15 from its cyclic parity checks: the
// 15 shifts of the period-15 m-sequence of x^4 + x + 1, evaluated directly on
// 15-bit words.
WeightDistribution hamming15_distribution()
{
    constexpr unsigned n = 15;
    unsigned seq = 0;
    unsigned state[n + 4] = {1, 0, 0, 0};
    for (unsigned k = 0; k < n; ++k) state[k + 4] = state[k] ^ state[k + 1];
    for (unsigned k = 0; k < n; ++k) seq |= state[k] << k;
    auto rot = [](unsigned x, unsigned k) { return k == 0 ? x : (((x << k) | (x >> (n - k))) & 0x7fffu); };

    WeightDistribution dist;
    for (unsigned v = 0; v < (1u << n); ++v) {
        bool in_code = true;
        for (unsigned k = 0; k < n && in_code; ++k) in_code = std::popcount(v & rot(seq, k)) % 2 == 0;
        if (in_code) ++dist[static_cast<std::size_t>(std::popcount(v))];
    }
    return dist;
}

std::string describe(const WeightDistribution& d)
{
    std::string out = "{";
    for (const auto& [w, c] : d) out += (out.size() > 1 ? ", " : "") + std::to_string(w) + ":" + std::to_string(c);
    return out + "}";
}

Z2Z4Code random_code(std::mt19937_64& rng, bool make_cyclic)
{
    std::uniform_int_distribution<std::size_t> part(0, 4);
    std::size_t alpha = part(rng);
    std::size_t beta = part(rng);
    if (alpha + beta == 0) beta = 1;
    std::uniform_int_distribution<int> nrows(1, 3);
    MixedMatrix gens;
    const int rows = nrows(rng);
    for (int i = 0; i < rows; ++i) {
        const auto idx = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (alpha + 2 * beta)) - 1)(rng);
        const auto v = MixedVector::from_index(alpha, beta, idx);
        gens.push_back(v);
        if (make_cyclic)
            for (std::size_t k = 1; k < std::lcm(std::max<std::size_t>(alpha, 1), std::max<std::size_t>(beta, 1)); ++k)
                gens.push_back(v.sigma(k));
    }
    return Z2Z4Code(alpha, beta, std::move(gens));
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned workers)
{
    std::vector<CriterionResult> results;

    results.push_back(run(1, "cstar reconstruction", 5000, [](Checks& c) {
        const Z2Z4Code cstar = build_cstar();
        c.expect(cstar.size() == 2048, "size " + std::to_string(cstar.size()) + " != 2048");
        c.expect(compute_type(cstar) == CodeType{3, 6, 3, 4, 3}, "type " + compute_type(cstar).to_string());
        c.expect(min_distance(cstar) == 3, "minimum distance != 3");
        c.expect(is_perfect_sphere(cstar), "sphere method rejects");
        c.expect(is_perfect_columns(cstar), "column method rejects");
        c.expect(is_cyclic(cstar), "not cyclic");
        return std::string("2048 codewords, type (3, 6; 3, 4; 3), d = 3, perfect (sphere + columns), cyclic");
    }));

    results.push_back(run(2, "dual structure at r = 2", 1000, [](Checks& c) {
        const Z2Z4Code d = dual(build_cstar());
        c.expect(d.size() == 16, "dual size " + std::to_string(d.size()));
        const WeightDistribution expected{{0, 1}, {8, 15}};
        c.expect(weight_distribution(d) == expected, "weight distribution " + describe(weight_distribution(d)));
        c.expect(puncture_x(d).codewords() == simplex_cyclic(2).codewords(), "X-projection != S_2");
        const Z2Z4Code db = subcode_b(d);
        c.expect(db.size() == 4, "|D_b| = " + std::to_string(db.size()));
        std::vector<std::string> image;
        for (const auto& z : db.codewords()) {
            std::string s;
            for (std::size_t j = 0; j < z.beta(); ++j) s.push_back(z.symbol(j) == 2 ? '1' : '0');
            image.push_back(s);
        }
        std::sort(image.begin(), image.end());
        const std::vector<std::string> copies{"000000", "011011", "101101", "110110"};
        c.expect(image == copies, "twos->ones image is not two copies of S_2");
        const auto audit = verify_structure_d(d, 2);
        c.expect(audit.verdict == Verdict::Holds, "structure audit: " + audit.summary);
        c.expect(audit.counters.at("order4_codewords") == 12 && audit.counters.at("count_violations") == 0,
                 "order-4 symbol counts (4 odd, 1 two, 1 zero) violated");
        return std::string("16 codewords {0:1, 8:15}; X = S_2; |D_b| = 4; 2 copies of S_2; 12 order-4 words 4/1/1");
    }));

    results.push_back(run(3, "Gray nonlinearity of cstar", 0, [](Checks& c) {
        const Z2Z4Code cstar = build_cstar();
        const auto lin = gray_image_linear(cstar);
        c.expect(!lin.linear && lin.witness.has_value(), "Gray image reported linear");
        auto image = gray_image(cstar);
        std::sort(image.begin(), image.end());
        std::string witness;
        if (lin.witness) {
            const auto sum = lin.witness->first ^ lin.witness->second;
            const bool first_in = std::binary_search(image.begin(), image.end(), lin.witness->first);
            const bool second_in = std::binary_search(image.begin(), image.end(), lin.witness->second);
            const bool sum_out = !std::binary_search(image.begin(), image.end(), sum);
            c.expect(first_in && second_in && sum_out, "witness pair does not certify nonlinearity");
            witness = lin.witness->first.to_string() + " + " + lin.witness->second.to_string();
        }
        WeightDistribution gray;
        for (const auto& g : image) ++gray[g.weight()];
        const auto hamming = hamming15_distribution();
        c.expect(gray == hamming, "Phi(C*) " + describe(gray) + " vs Hamming(15) " + describe(hamming));
        return "witness " + witness + "; weight distribution " + describe(gray) + " matches Hamming(15)";
    }));

    results.push_back(run(4, "type formulas", 0, [](Checks& c) {
        const std::vector<std::pair<int, int>> params{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {3, 5}, {3, 6}};
        for (const auto& [r, t] : params) {
            const ConstructionParams p{r, t};
            const Z2Z4Code code = build_perfect(p);
            const CodeType got = compute_type(code);
            const std::string tag = "(" + std::to_string(r) + "," + std::to_string(t) + ")";
            c.expect(got == perfect_code_type(p), tag + " type " + got.to_string());
            c.expect(dual_type(got) == perfect_dual_type(p), tag + " dual formula " + dual_type(got).to_string());
            c.expect(compute_type(dual(code)) == perfect_dual_type(p), tag + " computed dual type");
            if (r == 3 && t == 6) c.expect(!code.materialized(), "(3,6) was enumerated");
        }
        return std::string("7 parameter pairs match both closed forms; (3,6) of length 63 via reduction only");
    }));

    results.push_back(run(5, "beta multiple of alpha", 1000, [](Checks& c) {
        const std::vector<std::pair<int, int>> params{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {3, 5}, {3, 6}};
        for (const auto& [r, t] : params) {
            const auto rep = verify_prop_3_1(r, t);
            c.expect(rep.verdict == Verdict::Holds, "(" + std::to_string(r) + "," + std::to_string(t) + ") fails");
        }
        const auto search = exists_cyclic_arrangement(build_perfect({2, 3}));
        c.expect(search.status == SearchStatus::None, "C(2,3) has a cyclic arrangement");
        c.expect(search.total == 12 && search.examined == 12, "C(2,3) search did not exhaust 12 arrangements");
        return std::string("7/7 pairs; C(2,3): none of 12 arrangements is cyclic");
    }));

    results.push_back(run(6, "extended codes not cyclic", 60000, [](Checks& c) {
        const auto a = exists_cyclic_arrangement(extend(build_perfect({2, 3})));
        c.expect(a.status == SearchStatus::None && a.examined == 48, "C'(2,3) not exhausted over 48");
        const auto b = exists_cyclic_arrangement(extend(build_cstar()));
        c.expect(b.status == SearchStatus::None && b.examined == 17280, "C'(2,4) not exhausted over 17280");
        return std::string("C'(2,3): 0/48 cyclic; C'(2,4): 0/17280 cyclic");
    }));

    results.push_back(run(7, "extended Hamming(8) not cyclic", 60000, [](Checks& c) {
        const Z2Z4Code ext = extend(hamming_cyclic(3));
        c.expect(ext.alpha() == 8 && ext.beta() == 0 && ext.size() == 16, "unexpected extended Hamming shape");
        c.expect(min_distance(ext) == 4, "extended Hamming distance != 4");
        const auto s = exists_cyclic_arrangement(ext);
        c.expect(s.status == SearchStatus::None && s.examined == 40320, "not exhausted over 40320");
        return std::string("0/40320 coordinate permutations cyclic");
    }));

    results.push_back(run(8, "nonexistence arithmetic", 0, [](Checks& c) {
        for (int r = 3; r <= 6; ++r) {
            const auto rep = audit_theorem_3_11(r);
            c.expect(rep.verdict == Verdict::Holds && rep.summary.starts_with("nonexistence confirmed"),
                     "r = " + std::to_string(r) + ": " + rep.summary);
        }
        const auto r2 = audit_theorem_3_11(2);
        c.expect(r2.verdict == Verdict::NotApplicable && r2.summary.starts_with("no contradiction"),
                 "r = 2: " + r2.summary);
        for (int r = 3; r <= 5; ++r)
            c.expect(verify_lemma_3_7(r).verdict == Verdict::Holds, "simplex parity fails at r = " + std::to_string(r));
        return std::string("r = 3..6 nonexistence confirmed, r = 2 no contradiction; S_3..S_5 parity holds");
    }));

    results.push_back(run(9, "uniqueness search at (3, 6)", 600000, [workers](Checks& c) {
        const auto serial = uniqueness_search(1);
        const auto parallel = uniqueness_search(std::max(2u, workers));
        const auto& rep = serial.report;
        c.expect(rep.counters.at("survivors") >= 1, "no survivor");
        c.expect(rep.counters.at("h_closure_found") == 1, "H-closure span missing");
        c.expect(rep.counters.at("perfect_duals") == rep.counters.at("survivors"), "a survivor dual is not perfect");
        c.expect(rep.counters.at("perfect_duals_with_type") == rep.counters.at("survivors"),
                 "a survivor dual has the wrong type");
        c.expect(serial.report.to_json(false) == parallel.report.to_json(false) && serial.survivors == parallel.survivors,
                 "parallel report differs");
        return "raw survivor count " + std::to_string(rep.counters.at("survivors")) +
               ", all duals 1-perfect of type (3, 6; 3, 4; 3); serial and parallel reports identical";
    }));

    results.push_back(run(10, "oracle equivalences on random codes", 0, [](Checks& c) {
        std::mt19937_64 rng(20161019);
        for (int trial = 0; trial < 50; ++trial) {
            const Z2Z4Code code = random_code(rng, trial % 2 == 1);
            const std::string tag = "trial " + std::to_string(trial);
            const auto brute = dual(code, DualMethod::BruteForce);
            const auto kernel = dual(code, DualMethod::Kernel);
            c.expect(brute.codewords() == kernel.codewords(), tag + ": brute-force and kernel duals differ");
            const MixedMatrix checks = kernel.reduced().rows();
            const auto& words = code.codewords();
            bool agree = true;
            for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << code.length_bits()); ++idx) {
                const auto v = MixedVector::from_index(code.alpha(), code.beta(), idx);
                const bool in_set = std::binary_search(words.begin(), words.end(), v);
                agree = agree && in_set == contains_by_syndrome(checks, v) && in_set == code.contains(v);
            }
            c.expect(agree, tag + ": syndrome membership disagrees with the codeword set");
            c.expect(is_cyclic(code) == is_cyclic_exhaustive(code), tag + ": cyclicity shortcut disagrees");
            c.expect(dual(brute).codewords() == words, tag + ": dual of dual differs");
        }
        return std::string("50 random codes: duals, membership, cyclicity and double dual agree");
    }));

    return results;
}

std::string format_result(const CriterionResult& r)
{
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f ms", r.elapsed_ms);
    return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " (" + timing +
           "): " + r.detail;
}

}  // namespace z2z4

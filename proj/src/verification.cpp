#include "z2z4/verification.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "z2z4/constructions.hpp"

namespace z2z4 {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t factorial(std::size_t n)
{
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f = saturating_mul(f, k);
    return f;
}

// Lexicographic unranking; ranks beyond a saturated factorial stay on the
// leading digits' zero branch, which is exact for every rank below 2^64.
std::vector<std::size_t> unrank_permutation(std::size_t n, std::uint64_t rank)
{
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t m = n; m > 0; --m) {
        const std::uint64_t block = factorial(m - 1);
        const auto digit = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

// tau with tau(pi[p]) = pi[p - 1]: conjugate of the right shift by the arrangement.
std::vector<std::size_t> conjugated_shift(const std::vector<std::size_t>& pi)
{
    const std::size_t n = pi.size();
    std::vector<std::size_t> tau(n);
    for (std::size_t p = 0; p < n; ++p) tau[pi[p]] = pi[(p + n - 1) % n];
    return tau;
}

bool cyclic_under(const Z2Z4Code& code, const MixedMatrix& gens, const Arrangement& a)
{
    const auto tx = conjugated_shift(a.pi_x);
    const auto ty = conjugated_shift(a.pi_y);
    return std::all_of(gens.begin(), gens.end(), [&](const MixedVector& g) { return code.contains(g.permuted(tx, ty)); });
}

// First index in [begin, end) whose arrangement makes the code cyclic.
std::optional<std::uint64_t> search_range(const Z2Z4Code& code, std::uint64_t begin, std::uint64_t end)
{
    if (begin >= end) return std::nullopt;
    const MixedMatrix gens = code.reduced().rows();
    const std::uint64_t y_count = factorial(code.beta());
    Arrangement a{unrank_permutation(code.alpha(), y_count == kSaturated ? 0 : begin / y_count),
                  unrank_permutation(code.beta(), y_count == kSaturated ? begin : begin % y_count)};
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (cyclic_under(code, gens, a)) return idx;
        if (!std::next_permutation(a.pi_y.begin(), a.pi_y.end())) std::next_permutation(a.pi_x.begin(), a.pi_x.end());
    }
    return std::nullopt;
}

std::int64_t as_count(std::uint64_t v)
{
    return v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())
               ? std::numeric_limits<std::int64_t>::max()
               : static_cast<std::int64_t>(v);
}

}  // namespace

// --------------------------------------------------------------- arrangement

Arrangement Arrangement::identity(std::size_t alpha, std::size_t beta)
{
    Arrangement a;
    a.pi_x.resize(alpha);
    a.pi_y.resize(beta);
    std::iota(a.pi_x.begin(), a.pi_x.end(), std::size_t{0});
    std::iota(a.pi_y.begin(), a.pi_y.end(), std::size_t{0});
    return a;
}

void Arrangement::validate(std::size_t alpha, std::size_t beta) const
{
    auto is_bijection = [](std::vector<std::size_t> p, std::size_t n) {
        if (p.size() != n) return false;
        std::sort(p.begin(), p.end());
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] != i) return false;
        return true;
    };
    if (!is_bijection(pi_x, alpha) || !is_bijection(pi_y, beta))
        throw DimensionError("arrangement is not a pair of bijections on the binary and quaternary positions");
}

Z2Z4Code Arrangement::apply(const Z2Z4Code& code) const
{
    validate(code.alpha(), code.beta());
    MixedMatrix gens;
    for (const auto& g : code.generators()) gens.push_back(apply(g));
    return Z2Z4Code(code.alpha(), code.beta(), std::move(gens), code.cap());
}

// ----------------------------------------------------------------- cyclicity

bool is_cyclic(const Z2Z4Code& code)
{
    const auto& f = code.reduced();
    auto shifted_inside = [&](const MixedVector& g) { return code.contains(g.sigma()); };
    return std::all_of(f.order4.begin(), f.order4.end(), shifted_inside) &&
           std::all_of(f.order2.begin(), f.order2.end(), shifted_inside);
}

bool is_cyclic_exhaustive(const Z2Z4Code& code, std::uint64_t cap)
{
    const auto words = enumerate(code, cap);
    return std::all_of(words.begin(), words.end(),
                       [&](const MixedVector& c) { return std::binary_search(words.begin(), words.end(), c.sigma()); });
}

ArrangementSearch exists_cyclic_arrangement(const Z2Z4Code& code, std::uint64_t budget, unsigned workers)
{
    ArrangementSearch result;
    result.total = saturating_mul(factorial(code.alpha()), factorial(code.beta()));
    const std::uint64_t limit = std::min(result.total, budget);
    workers = std::max(1u, workers);

    std::vector<std::optional<std::uint64_t>> found(workers);
    const std::uint64_t chunk = (limit + workers - 1) / workers;
    if (workers == 1) {
        found[0] = search_range(code, 0, limit);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(limit, w * chunk);
            const std::uint64_t end = std::min(limit, begin + chunk);
            pool.emplace_back([&, w, begin, end] { found[w] = search_range(code, begin, end); });
        }
        for (auto& t : pool) t.join();
    }

    std::optional<std::uint64_t> first;
    for (const auto& f : found)
        if (f && (!first || *f < *first)) first = f;

    if (first) {
        const std::uint64_t y_count = factorial(code.beta());
        result.status = SearchStatus::Found;
        result.witness = Arrangement{unrank_permutation(code.alpha(), y_count == kSaturated ? 0 : *first / y_count),
                                     unrank_permutation(code.beta(), y_count == kSaturated ? *first : *first % y_count)};
        result.examined = *first + 1;
    } else {
        result.status = limit == result.total ? SearchStatus::None : SearchStatus::Inconclusive;
        result.examined = limit;
    }
    return result;
}

// -------------------------------------------------------------- perfectness

bool is_perfect_sphere(const Z2Z4Code& code, std::uint64_t cap)
{
    const std::size_t n = code.length_bits();
    if (n > 24) throw DimensionError("sphere method needs alpha + 2 beta <= 24");
    std::vector<std::uint16_t> hits(std::size_t{1} << n, 0);

    std::vector<MixedVector> units;
    for (std::size_t i = 0; i < code.alpha(); ++i) {
        MixedVector e(code.alpha(), code.beta());
        e.set_bit(i, 1);
        units.push_back(e);
    }
    for (std::size_t j = 0; j < code.beta(); ++j) {
        MixedVector e(code.alpha(), code.beta());
        e.set_symbol(j, 1);
        units.push_back(e);
        units.push_back(-e);
    }
    for (const auto& c : enumerate(code, cap)) {
        ++hits[c.index()];
        for (const auto& e : units) ++hits[(c + e).index()];
    }
    return std::all_of(hits.begin(), hits.end(), [](std::uint16_t h) { return h == 1; });
}

bool is_perfect_columns(std::size_t alpha, std::size_t beta, const MixedMatrix& check_rows)
{
    const ReducedForm form = reduce_generators(alpha, beta, check_rows);
    const MixedMatrix rows = form.rows();
    const std::size_t group_bits = form.gamma() + 2 * form.delta();
    const std::size_t length = alpha + 2 * beta;
    if (group_bits >= 63 || (std::uint64_t{1} << group_bits) != 1 + length) return false;

    using Column = std::vector<std::uint8_t>;
    std::set<Column> seen;
    auto add = [&](const Column& c) { return seen.insert(c).second; };
    for (std::size_t i = 0; i < alpha; ++i) {
        Column c;
        for (const auto& h : rows) c.push_back(static_cast<std::uint8_t>(2 * h.bit(i)));
        if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) return false;
        if (!add(c)) return false;
    }
    for (std::size_t j = 0; j < beta; ++j) {
        Column c;
        Column neg;
        bool odd = false;
        for (const auto& h : rows) {
            const int s = h.symbol(j);
            odd = odd || (s & 1);
            c.push_back(static_cast<std::uint8_t>(s));
            neg.push_back(static_cast<std::uint8_t>((4 - s) % 4));
        }
        if (!odd) return false;
        if (!add(std::min(c, neg))) return false;
    }
    return true;
}

bool is_perfect_columns(const Z2Z4Code& code)
{
    return is_perfect_columns(code.alpha(), code.beta(), dual(code).reduced().rows());
}

bool is_perfect(const Z2Z4Code& code)
{
    if (code.length_bits() <= 24 && code.log2_size() < 63 && code.size() <= code.cap()) return is_perfect_sphere(code);
    return is_perfect_columns(code);
}

namespace {

// Every vector of weight one: the binary units and +-1 at each quaternary position.
MixedMatrix unit_balls(std::size_t alpha, std::size_t beta)
{
    MixedMatrix out;
    for (std::size_t i = 0; i < alpha; ++i) {
        MixedVector e(alpha, beta);
        e.set_bit(i, 1);
        out.push_back(e);
    }
    for (std::size_t j = 0; j < beta; ++j)
        for (int s : {1, 3}) {
            MixedVector e(alpha, beta);
            e.set_symbol(j, s);
            out.push_back(e);
        }
    return out;
}

}  // namespace

std::vector<MixedVector> perfectness_witness(const Z2Z4Code& code, std::uint64_t samples)
{
    const auto units = unit_balls(code.alpha(), code.beta());
    std::vector<MixedVector> light = units;
    for (std::size_t j = 0; j < code.beta(); ++j) {
        MixedVector e(code.alpha(), code.beta());
        e.set_symbol(j, 2);
        light.push_back(e);
    }
    for (std::size_t a = 0; a < units.size(); ++a)
        for (std::size_t b = a + 1; b < units.size(); ++b) light.push_back(units[a] + units[b]);
    for (const auto& v : light)
        if (!v.is_zero() && code.contains(v)) return {code.zero(), v};

    auto uncovered = [&](const MixedVector& v) {
        if (code.contains(v)) return false;
        for (const auto& e : units)
            if (code.contains(v - e)) return false;
        return true;
    };
    const std::size_t n = code.length_bits();
    if (n <= 20) {
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
            const auto v = MixedVector::from_index(code.alpha(), code.beta(), idx);
            if (uncovered(v)) return {v};
        }
        return {};
    }
    std::mt19937_64 rng(n);
    for (std::uint64_t k = 0; k < samples; ++k) {
        MixedVector v(code.alpha(), code.beta());
        for (std::size_t i = 0; i < code.alpha(); ++i) v.set_bit(i, static_cast<int>(rng() & 1));
        for (std::size_t j = 0; j < code.beta(); ++j) v.set_symbol(j, static_cast<int>(rng() & 3));
        if (uncovered(v)) return {v};
    }
    return {};
}

// ------------------------------------------------------------- Gray image

GrayLinearity gray_image_linear(const Z2Z4Code& code)
{
    const MixedMatrix rows = code.reduced().rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const MixedVector sum = rows[i] + rows[j] + quaternary_product(rows[i], rows[j]).doubled();
            if (!code.contains(sum)) return {false, std::make_pair(rows[i].gray_map(), rows[j].gray_map())};
        }
    return {true, std::nullopt};
}

GrayLinearity gray_image_linear_exhaustive(const Z2Z4Code& code, std::uint64_t cap)
{
    const auto image = gray_image(code, cap);
    const std::unordered_set<BinaryVector, BinaryVectorHash> lookup(image.begin(), image.end());
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
            if (!lookup.contains(image[i] ^ image[j])) return {false, std::make_pair(image[i], image[j])};
    return {true, std::nullopt};
}

// -------------------------------------------------------------------- audits

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
    case Verdict::NotApplicable: return 0;
    case Verdict::Fails: return 1;
    case Verdict::Inconclusive: return 2;
    }
    return 2;
}

AuditReport verify_prop_3_1(int r, int t)
{
    const auto start = Clock::now();
    const ConstructionParams p{r, t};
    p.validate();
    AuditReport rep;
    rep.claim = "prop_3_1";
    rep.params = {{"r", r}, {"t", t}};
    const auto alpha = static_cast<std::int64_t>(p.alpha());
    const auto beta = static_cast<std::int64_t>(p.beta());
    const std::int64_t rem = beta % alpha;
    const bool divisible = rem == 0;
    const bool boundary = (t == r) || (t == 2 * r);
    rep.counters = {{"alpha", alpha}, {"beta", beta}, {"rem", rem}, {"cyclic_excluded", divisible ? 0 : 1}};
    rep.verdict = divisible == boundary ? Verdict::Holds : Verdict::Fails;
    rep.summary = divisible ? "beta is a multiple of alpha; a cyclic code is not excluded"
                            : "beta is not a multiple of alpha; no cyclic code";
    rep.elapsed_ms = elapsed_since(start);
    return rep;
}

AuditReport verify_lemma_3_7(int r)
{
    const auto start = Clock::now();
    AuditReport rep;
    rep.claim = "lemma_3_7";
    rep.params = {{"r", r}};
    const Z2Z4Code s = simplex_cyclic(r);
    const auto& words = s.codewords();
    const std::uint64_t mask = detail::low_mask(s.alpha());

    std::int64_t pairs = 0;
    std::int64_t odd_pairs = 0;
    std::int64_t inter_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t inter_max = 0;
    std::optional<std::pair<MixedVector, MixedVector>> first_odd;
    for (const auto& x : words)
        for (const auto& y : words) {
            ++pairs;
            const auto co = std::popcount(x.binary_plane() & ~y.binary_plane() & mask);
            if (co % 2 != 0) {
                ++odd_pairs;
                if (!first_odd) first_odd = std::make_pair(x, y);
            }
            if (x != y && !x.is_zero() && !y.is_zero()) {
                const std::int64_t both = std::popcount(x.binary_plane() & y.binary_plane());
                inter_min = std::min(inter_min, both);
                inter_max = std::max(inter_max, both);
            }
        }
    const std::int64_t expected = std::int64_t{1} << (r - 2);
    rep.counters = {{"pairs", pairs},
                    {"odd_pairs", odd_pairs},
                    {"supp_intersection_min", inter_min},
                    {"supp_intersection_max", inter_max},
                    {"supp_intersection_expected", expected}};
    if (r == 2) {
        rep.verdict = Verdict::NotApplicable;
        rep.summary = "r = 2: distinct nonzero codewords meet in one position, so the parity claim needs r > 2";
    } else if (odd_pairs == 0 && inter_min == expected && inter_max == expected) {
        rep.verdict = Verdict::Holds;
        rep.summary = "every |supp(x) & co-supp(y)| is even";
    } else {
        rep.verdict = Verdict::Fails;
        rep.summary = "odd intersection with a complementary support";
    }
    if (first_odd && rep.verdict != Verdict::Holds)
        rep.witness = std::vector<MixedVector>{first_odd->first, first_odd->second};
    rep.elapsed_ms = elapsed_since(start);
    return rep;
}

AuditReport verify_structure_d(const Z2Z4Code& d, int r)
{
    const auto start = Clock::now();
    AuditReport rep;
    rep.claim = "structure_d";
    rep.params = {{"r", r}};
    const std::size_t alpha = (std::size_t{1} << r) - 1;
    const std::size_t blocks = std::size_t{1} << (r - 1);
    if (d.alpha() != alpha || d.beta() != blocks * alpha)
        throw DimensionError("structure audit needs a code of shape (2^r - 1, 2^(r-1)(2^r - 1))");

    const auto& words = d.codewords();
    const Z2Z4Code simplex = simplex_cyclic(r);
    std::optional<MixedVector> witness;
    auto note = [&](const MixedVector& v) {
        if (!witness) witness = v;
    };

    // X-projection equals S_r.
    const bool x_matches = puncture_x(d).codewords() == simplex.codewords();

    // Zero X part exactly on the order-<=2 subcode; Y image of D_b.
    std::int64_t zero_x_violations = 0;
    std::int64_t d_b_size = 0;
    std::set<std::uint64_t> y_image;
    for (const auto& z : words) {
        const bool zero_x = z.binary_plane() == 0;
        const bool small_order = z.order() <= 2;
        if (zero_x != small_order) {
            ++zero_x_violations;
            note(z);
        }
        if (small_order) {
            ++d_b_size;
            y_image.insert(z.high_plane());  // twos become ones
        }
    }
    std::set<std::uint64_t> replicated;
    for (const auto& x : simplex.codewords()) {
        std::uint64_t rep_word = 0;
        for (std::size_t b = 0; b < blocks; ++b) rep_word |= x.binary_plane() << (b * alpha);
        replicated.insert(rep_word);
    }
    const bool replication_matches = y_image == replicated;

    // Order-4 codewords: symbol counts, block congruence, constant weight.
    const auto expected_odd = std::int64_t{1} << (2 * r - 2);
    const auto expected_twos = (std::int64_t{1} << (r - 2)) * ((std::int64_t{1} << (r - 1)) - 1);
    const auto expected_weight = std::size_t{1} << (2 * r - 1);
    std::int64_t order4 = 0;
    std::int64_t count_violations = 0;
    std::int64_t congruence_violations = 0;
    std::int64_t weight_violations = 0;
    const std::uint64_t block_mask = detail::low_mask(alpha);
    for (const auto& z : words) {
        if (!z.is_zero() && z.weight() != expected_weight) {
            ++weight_violations;
            note(z);
        }
        if (z.order() != 4) continue;
        ++order4;
        const std::int64_t odd = std::popcount(z.low_plane());
        const std::int64_t twos = std::popcount(z.high_plane() & ~z.low_plane());
        const std::int64_t zeros = static_cast<std::int64_t>(d.beta()) - odd - twos;
        if (odd != expected_odd || twos != expected_twos || zeros != expected_twos) {
            ++count_violations;
            note(z);
        }
        const std::uint64_t first_block = z.low_plane() & block_mask;
        for (std::size_t b = 1; b < blocks; ++b)
            if (((z.low_plane() >> (b * alpha)) & block_mask) != first_block) {
                ++congruence_violations;
                note(z);
                break;
            }
    }

    rep.counters = {{"size", static_cast<std::int64_t>(words.size())},
                    {"d_b_size", d_b_size},
                    {"order4_codewords", order4},
                    {"x_projection_matches", x_matches ? 1 : 0},
                    {"zero_x_violations", zero_x_violations},
                    {"replication_matches", replication_matches ? 1 : 0},
                    {"expected_odd", expected_odd},
                    {"expected_twos", expected_twos},
                    {"expected_zeros", expected_twos},
                    {"count_violations", count_violations},
                    {"congruence_violations", congruence_violations},
                    {"weight_violations", weight_violations}};
    const bool ok = x_matches && replication_matches && zero_x_violations == 0 && count_violations == 0 &&
                    congruence_violations == 0 && weight_violations == 0;
    rep.verdict = ok ? Verdict::Holds : Verdict::Fails;
    rep.summary = ok ? "X-projection, order-2 subcode, replication, symbol counts and congruence all match"
                     : "structural mismatch";
    if (!ok && witness) rep.witness = std::vector<MixedVector>{*witness};
    rep.elapsed_ms = elapsed_since(start);
    return rep;
}

AuditReport audit_theorem_3_11(int r)
{
    const auto start = Clock::now();
    if (r < 2 || r > 30) throw ParameterError("nonexistence audit needs 2 <= r <= 30");
    AuditReport rep;
    rep.claim = "thm_3_11";
    rep.params = {{"r", r}};
    const std::int64_t per_full = std::int64_t{1} << (r - 1);  // twos in a position where every block has a 2
    const std::int64_t per_split = std::int64_t{1} << (r - 2);  // twos in a half-0 / half-2 position
    const std::int64_t total = per_split * ((std::int64_t{1} << (r - 1)) - 1);

    std::int64_t solutions = 0;
    std::int64_t odd_mu = 0;
    for (std::int64_t lambda = 0; per_full * lambda <= total; ++lambda) {
        const std::int64_t rest = total - per_full * lambda;
        if (rest % per_split != 0) continue;
        const std::int64_t mu = rest / per_split;
        rep.counters["solution_" + std::to_string(solutions) + "_lambda"] = lambda;
        rep.counters["solution_" + std::to_string(solutions) + "_mu"] = mu;
        ++solutions;
        if (mu % 2 != 0) ++odd_mu;
    }
    rep.counters["twos_total"] = total;
    rep.counters["solutions"] = solutions;
    rep.counters["odd_mu_solutions"] = odd_mu;

    if (r == 2) {
        rep.verdict = Verdict::NotApplicable;
        rep.summary = "no contradiction: the even |N_ij| argument needs r > 2";
    } else if (solutions > 0 && odd_mu == solutions) {
        rep.verdict = Verdict::Holds;
        rep.summary = "nonexistence confirmed: every solution has odd mu";
    } else {
        rep.verdict = Verdict::Fails;
        rep.summary = "a solution with even mu exists";
    }
    rep.elapsed_ms = elapsed_since(start);
    return rep;
}

AuditReport audit_no_cyclic_arrangement(const std::string& claim, const Z2Z4Code& code,
                                        std::map<std::string, std::int64_t> params, std::uint64_t budget,
                                        unsigned workers)
{
    const auto start = Clock::now();
    AuditReport rep;
    rep.claim = claim;
    rep.params = std::move(params);
    const auto search = exists_cyclic_arrangement(code, budget, workers);
    rep.counters = {{"alpha", static_cast<std::int64_t>(code.alpha())},
                    {"beta", static_cast<std::int64_t>(code.beta())},
                    {"arrangements_total", as_count(search.total)},
                    {"arrangements_examined", as_count(search.examined)}};
    switch (search.status) {
    case SearchStatus::None:
        rep.verdict = Verdict::Holds;
        rep.summary = "no arrangement";
        break;
    case SearchStatus::Found:
        rep.verdict = Verdict::Fails;
        rep.witness = *search.witness;
        rep.summary = "cyclic arrangement found";
        break;
    case SearchStatus::Inconclusive:
        rep.verdict = Verdict::Inconclusive;
        rep.summary = "budget exhausted before the arrangement space";
        break;
    }
    rep.elapsed_ms = elapsed_since(start);
    return rep;
}

// ------------------------------------------------------ uniqueness search

namespace {

using Span = std::vector<MixedVector>;

constexpr std::size_t kUAlpha = 3;
constexpr std::size_t kUBeta = 6;
constexpr std::size_t kUWeight = 8;
constexpr std::size_t kUTargetLog2 = 4;

enum class Candidate { Reject, Partial, Full };

// A sigma-closed code all of whose nonzero codewords have weight 8, with at
// most 16 codewords. Full when it has type (3, 6; 0, 2; 0).
Candidate classify(const ReducedForm& form, Span& words)
{
    if (form.gamma() + 2 * form.delta() > kUTargetLog2) return Candidate::Reject;
    words = span(kUAlpha, kUBeta, form.rows());
    for (const auto& w : words)
        if (!w.is_zero() && w.weight() != kUWeight) return Candidate::Reject;
    const bool kappa_zero = std::all_of(form.order2.begin(), form.order2.end(),
                                        [](const MixedVector& v) { return v.binary_plane() == 0; });
    if (form.gamma() == 0 && form.delta() == 2 && kappa_zero) return Candidate::Full;
    return form.gamma() + 2 * form.delta() < kUTargetLog2 ? Candidate::Partial : Candidate::Reject;
}

MixedMatrix sigma_orbit(const MixedVector& g)
{
    MixedMatrix out;
    for (std::size_t k = 0; k < 6; ++k) out.push_back(g.sigma(k));  // lcm(3, 6)
    return out;
}

template <typename Work>
void run_partitioned(std::size_t count, unsigned workers, Work&& work)
{
    workers = std::max(1u, workers);
    if (workers == 1) {
        work(0u, std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&, w, begin, end] { work(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

UniquenessResult uniqueness_search(unsigned workers)
{
    const auto start = Clock::now();
    workers = std::max(1u, workers);

    std::vector<MixedVector> weight8;
    const std::uint64_t ambient = std::uint64_t{1} << (kUAlpha + 2 * kUBeta);
    for (std::uint64_t idx = 0; idx < ambient; ++idx) {
        const auto v = MixedVector::from_index(kUAlpha, kUBeta, idx);
        if (v.weight() == kUWeight) weight8.push_back(v);
    }

    // Phase 1: sigma-closure of single generators.
    std::vector<std::set<Span>> full1(workers), partial1(workers);
    run_partitioned(weight8.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        Span words;
        for (std::size_t i = begin; i < end; ++i) {
            const auto orbit = sigma_orbit(weight8[i]);
            const auto kind = classify(reduce_generators(kUAlpha, kUBeta, orbit), words);
            if (kind == Candidate::Full) full1[w].insert(words);
            if (kind == Candidate::Partial) partial1[w].insert(words);
        }
    });
    std::set<Span> survivors;
    std::set<Span> partial_set;
    for (unsigned w = 0; w < workers; ++w) {
        survivors.insert(full1[w].begin(), full1[w].end());
        partial_set.insert(partial1[w].begin(), partial1[w].end());
    }
    const std::size_t single_survivors = survivors.size();

    // Phase 2: sums of two partial closures. Any code generated by two
    // elements is the sum of their closures, and a closure that already
    // breaks the constant-weight or size filter cannot be part of a survivor.
    const std::vector<Span> partials(partial_set.begin(), partial_set.end());
    std::vector<std::set<Span>> full2(workers);
    run_partitioned(partials.size(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        Span words;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < partials.size(); ++j) {
                MixedMatrix rows = partials[i];
                rows.insert(rows.end(), partials[j].begin(), partials[j].end());
                if (classify(reduce_generators(kUAlpha, kUBeta, rows), words) == Candidate::Full) full2[w].insert(words);
            }
    });
    std::size_t pair_only = 0;
    for (unsigned w = 0; w < workers; ++w)
        for (const auto& s : full2[w])
            if (survivors.insert(s).second) ++pair_only;

    // Survivor duals.
    MixedMatrix h_closure;
    for (const auto& row : cstar_check_matrix())
        for (const auto& v : sigma_orbit(row)) h_closure.push_back(v);
    const Span h_span = span(kUAlpha, kUBeta, h_closure);
    const CodeType perfect_type{3, 6, 3, 4, 3};

    UniquenessResult result;
    std::int64_t perfect = 0;
    std::int64_t perfect_type_ok = 0;
    std::int64_t cyclic_duals = 0;
    std::vector<MixedVector> witness;
    for (const auto& s : survivors) {
        const Z2Z4Code d(kUAlpha, kUBeta, s);
        const Z2Z4Code c = dual(d);
        const bool is_perf = is_perfect_sphere(c);
        if (is_perf) ++perfect;
        if (is_perf && compute_type(c) == perfect_type) ++perfect_type_ok;
        if (is_cyclic(c)) ++cyclic_duals;
        for (const auto& g : d.reduced().rows()) witness.push_back(g);
        result.survivors.push_back(s);
    }
    const bool h_found = survivors.contains(h_span);
    const auto n = static_cast<std::int64_t>(survivors.size());

    auto& rep = result.report;
    rep.claim = "search_unique";
    rep.params = {{"alpha", 3}, {"beta", 6}};
    rep.counters = {{"weight8_vectors", static_cast<std::int64_t>(weight8.size())},
                    {"single_closure_survivors", static_cast<std::int64_t>(single_survivors)},
                    {"partial_closures", static_cast<std::int64_t>(partials.size())},
                    {"pair_only_survivors", static_cast<std::int64_t>(pair_only)},
                    {"survivors", n},
                    {"perfect_duals", perfect},
                    {"perfect_duals_with_type", perfect_type_ok},
                    {"cyclic_duals", cyclic_duals},
                    {"h_closure_found", h_found ? 1 : 0}};
    const bool ok = n >= 1 && h_found && perfect == n && perfect_type_ok == n;
    rep.verdict = ok ? Verdict::Holds : Verdict::Fails;
    rep.summary = std::to_string(n) + " distinct sigma-closed dual candidates; " + std::to_string(perfect) +
                  " have a 1-perfect dual of type (3, 6; 3, 4; 3)";
    rep.witness = std::move(witness);
    rep.elapsed_ms = elapsed_since(start);
    return result;
}

}  // namespace z2z4

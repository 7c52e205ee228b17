#include <doctest.h>

#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "z2z4/constructions.hpp"
#include "z2z4/verification.hpp"

using namespace z2z4;

TEST_CASE("cyclicity")
{
    CHECK(is_cyclic(build_cstar()));
    CHECK(is_cyclic(dual(build_cstar())));
    CHECK_FALSE(is_cyclic(build_perfect({2, 3})));
    CHECK(is_cyclic_exhaustive(build_cstar()));
    CHECK_FALSE(is_cyclic_exhaustive(build_perfect({2, 3})));
}

TEST_CASE("perfectness")
{
    CHECK(is_perfect_sphere(build_cstar()));
    CHECK(is_perfect_columns(build_cstar()));
    CHECK(is_perfect(hamming_cyclic(3)));

    Z2Z4Code full(3, 6, MixedMatrix{MixedVector::parse("100|000000"), MixedVector::parse("010|000000"),
                                    MixedVector::parse("001|000000"), MixedVector::parse("000|100000"),
                                    MixedVector::parse("000|010000"), MixedVector::parse("000|001000"),
                                    MixedVector::parse("000|000100"), MixedVector::parse("000|000010"),
                                    MixedVector::parse("000|000001")});
    CHECK(full.size() == (std::uint64_t{1} << 15));
    CHECK_FALSE(is_perfect_sphere(full));
    CHECK_FALSE(is_perfect_columns(full));
    CHECK_FALSE(is_perfect(full));
}

TEST_CASE("witnesses against perfectness")
{
    CHECK(perfectness_witness(build_cstar()).empty());
    CHECK(perfectness_witness(build_perfect({3, 6}), 1000).empty());

    const auto ext_cstar = extend(build_cstar());
    const auto hole = perfectness_witness(ext_cstar);
    REQUIRE(hole.size() == 1);
    for (const auto& c : ext_cstar.codewords()) REQUIRE(distance(c, hole[0]) >= 2);
    const auto ext = extend(build_perfect({2, 3}));
    const auto w = perfectness_witness(ext);
    REQUIRE(w.size() == 1);
    CHECK_FALSE(ext.contains(w[0]));
    for (const auto& c : ext.codewords()) CHECK(distance(c, w[0]) >= 2);

    const auto s = simplex_cyclic(3);
    const auto far = perfectness_witness(s);
    REQUIRE(far.size() == 1);
    for (const auto& c : s.codewords()) CHECK(distance(c, far[0]) >= 2);

    const Z2Z4Code dense(2, 1, MixedMatrix{MixedVector::parse("11|0")});
    const auto pair = perfectness_witness(dense);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].is_zero());
    CHECK(pair[1].weight() <= 2);
    CHECK(dense.contains(pair[1]));
}

TEST_CASE("sphere and column methods agree")
{
    const std::vector<Z2Z4Code> codes{build_cstar(), build_perfect({2, 3}), build_perfect({2, 2}),
                                      hamming_cyclic(2), hamming_cyclic(3), hamming_cyclic(4),
                                      simplex_cyclic(3), extend(build_perfect({2, 3}))};
    for (const auto& c : codes) CHECK(is_perfect_sphere(c) == is_perfect_columns(c));
}

TEST_CASE("sphere method agrees with the naive oracle")
{
    for (const auto& c : {build_perfect({2, 2}), build_perfect({2, 3}), simplex_cyclic(2), hamming_cyclic(2)})
        CHECK(is_perfect_sphere(c) == oracle::perfect(c.alpha(), c.beta(), oracle::as_set(c.codewords())));
}

TEST_CASE("column criterion treats doubled columns as distinct")
{
    // Column (0|2) of a Y column (0|1) doubled equals an X column; this is
    // allowed, only unit associates are excluded.
    const MixedMatrix h{MixedVector::parse("1|1")};
    CHECK(is_perfect_columns(1, 1, h));
    const MixedMatrix neg{MixedVector::parse("|13")};
    CHECK_FALSE(is_perfect_columns(0, 2, neg));
    const MixedMatrix zero_col{MixedVector::parse("10|")};
    CHECK_FALSE(is_perfect_columns(2, 0, zero_col));
}

TEST_CASE("Gray linearity")
{
    const auto lin = gray_image_linear(build_cstar());
    CHECK_FALSE(lin.linear);
    REQUIRE(lin.witness);
    auto image = gray_image(build_cstar());
    std::sort(image.begin(), image.end());
    CHECK(std::binary_search(image.begin(), image.end(), lin.witness->first));
    CHECK(std::binary_search(image.begin(), image.end(), lin.witness->second));
    CHECK_FALSE(std::binary_search(image.begin(), image.end(), lin.witness->first ^ lin.witness->second));

    CHECK(gray_image_linear(build_perfect({2, 2})).linear);
    CHECK(gray_image_linear(hamming_cyclic(3)).linear);
    CHECK(gray_image_linear(simplex_cyclic(4)).linear);
}

TEST_CASE("Gray linearity shortcut matches full pairwise closure")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t alpha = rng() % 4;
        const std::size_t beta = 1 + rng() % 4;
        MixedMatrix rows;
        for (std::size_t i = 0; i < 1 + rng() % 3; ++i) rows.push_back(oracle::to(oracle::random_vec(rng, alpha, beta)));
        const Z2Z4Code code(alpha, beta, rows);
        REQUIRE(code.size() <= 4096);
        CHECK(gray_image_linear(code).linear == gray_image_linear_exhaustive(code).linear);
    }
    CHECK(gray_image_linear(build_cstar()).linear == gray_image_linear_exhaustive(build_cstar()).linear);
}

TEST_CASE("cyclicity shortcut matches the all-codeword check")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t alpha = rng() % 5;
        const std::size_t beta = 1 + rng() % 4;
        const auto g = oracle::to(oracle::random_vec(rng, alpha, beta));
        MixedMatrix rows{g};
        if (trial % 2) rows.push_back(g.sigma());
        if (trial % 3 == 0)
            for (std::size_t k = 1; k < std::max<std::size_t>(alpha, 1) * beta; ++k) rows.push_back(g.sigma(k));
        const Z2Z4Code code(alpha, beta, rows);
        const auto words = oracle::as_set(code.codewords());
        const bool naive =
            std::all_of(words.begin(), words.end(), [&](const oracle::Vec& v) { return words.contains(oracle::shift(v)); });
        CHECK(is_cyclic(code) == naive);
        CHECK(is_cyclic_exhaustive(code) == naive);
    }
}

TEST_CASE("arrangement search")
{
    const auto c23 = exists_cyclic_arrangement(build_perfect({2, 3}));
    CHECK(c23.status == SearchStatus::None);
    CHECK(c23.total == 12);
    CHECK(c23.examined == 12);

    const auto e23 = exists_cyclic_arrangement(extend(build_perfect({2, 3})));
    CHECK(e23.status == SearchStatus::None);
    CHECK(e23.examined == 48);

    const auto cstar = exists_cyclic_arrangement(build_cstar());
    CHECK(cstar.status == SearchStatus::Found);
    REQUIRE(cstar.witness);
    CHECK(*cstar.witness == Arrangement::identity(3, 6));
    CHECK(cstar.examined == 1);
}

TEST_CASE("a shuffled C* is rearranged back into a cyclic code")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        Arrangement shuffle = Arrangement::identity(3, 6);
        std::shuffle(shuffle.pi_x.begin(), shuffle.pi_x.end(), rng);
        std::shuffle(shuffle.pi_y.begin(), shuffle.pi_y.end(), rng);
        const auto shuffled = shuffle.apply(build_cstar());
        const auto found = exists_cyclic_arrangement(shuffled, kDefaultArrangementBudget, 1 + trial % 3);
        REQUIRE(found.status == SearchStatus::Found);
        REQUIRE(found.witness);
        CHECK(is_cyclic(found.witness->apply(shuffled)));
    }
}

TEST_CASE("arrangement search respects its budget")
{
    const auto s = exists_cyclic_arrangement(extend(build_cstar()), 100);
    CHECK(s.status == SearchStatus::Inconclusive);
    CHECK(s.total == 17280);
    CHECK(s.examined == 100);
    CHECK_FALSE(s.witness);
}

TEST_CASE("arrangement search is independent of the worker count")
{
    Arrangement shuffle{{2, 0, 1}, {5, 3, 1, 0, 2, 4}};
    const auto shuffled = shuffle.apply(build_cstar());
    const auto one = exists_cyclic_arrangement(shuffled, kDefaultArrangementBudget, 1);
    const auto four = exists_cyclic_arrangement(shuffled, kDefaultArrangementBudget, 4);
    CHECK(one.witness == four.witness);
    CHECK(one.examined == four.examined);
}

TEST_CASE("arrangement validation")
{
    CHECK_NOTHROW(Arrangement::identity(3, 6).validate(3, 6));
    CHECK_THROWS_AS((Arrangement{{0, 0, 1}, {0}}).validate(3, 1), DimensionError);
    CHECK_THROWS_AS((Arrangement{{0, 1}, {0}}).validate(3, 1), DimensionError);
}

TEST_CASE("divisibility audit")
{
    const auto a = verify_prop_3_1(2, 3);
    CHECK(a.verdict == Verdict::Holds);
    CHECK(a.counters.at("alpha") == 3);
    CHECK(a.counters.at("beta") == 2);
    CHECK(a.counters.at("rem") == 2);
    CHECK(a.counters.at("cyclic_excluded") == 1);

    const auto b = verify_prop_3_1(2, 4);
    CHECK(b.counters.at("rem") == 0);
    CHECK(b.counters.at("cyclic_excluded") == 0);

    const auto c = verify_prop_3_1(3, 5);
    CHECK(c.counters.at("beta") == 12);
    CHECK(c.counters.at("rem") == 5);
    CHECK(c.counters.at("cyclic_excluded") == 1);
}

TEST_CASE("simplex parity audit")
{
    const auto r3 = verify_lemma_3_7(3);
    CHECK(r3.verdict == Verdict::Holds);
    CHECK(r3.counters.at("supp_intersection_min") == 2);
    CHECK(r3.counters.at("supp_intersection_max") == 2);
    const auto r4 = verify_lemma_3_7(4);
    CHECK(r4.verdict == Verdict::Holds);
    CHECK(r4.counters.at("supp_intersection_min") == 4);
    const auto r2 = verify_lemma_3_7(2);
    CHECK(r2.verdict == Verdict::NotApplicable);
    CHECK(r2.counters.at("supp_intersection_min") == 1);
    CHECK(r2.counters.at("odd_pairs") > 0);
}

TEST_CASE("structure audit of the r = 2 dual")
{
    const auto rep = verify_structure_d(dual(build_cstar()), 2);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.counters.at("size") == 16);
    CHECK(rep.counters.at("d_b_size") == 4);
    CHECK(rep.counters.at("order4_codewords") == 12);
    CHECK(rep.counters.at("expected_odd") == 4);
    CHECK(rep.counters.at("expected_twos") == 1);
    CHECK(rep.counters.at("x_projection_matches") == 1);
    CHECK(rep.counters.at("replication_matches") == 1);

    const auto canonical = verify_structure_d(build_d(2), 2);
    CHECK(canonical.verdict == Verdict::Fails);
    CHECK_FALSE(is_cyclic(build_d(2)));

    const auto wrong = verify_structure_d(build_perfect({2, 4}), 2);
    CHECK(wrong.verdict == Verdict::Fails);
    CHECK_FALSE(std::holds_alternative<std::monostate>(wrong.witness));
}

TEST_CASE("nonexistence arithmetic")
{
    const auto r3 = audit_theorem_3_11(3);
    CHECK(r3.verdict == Verdict::Holds);
    CHECK(r3.counters.at("solutions") == 2);
    CHECK(r3.counters.at("solution_0_lambda") == 0);
    CHECK(r3.counters.at("solution_0_mu") == 3);
    CHECK(r3.counters.at("solution_1_lambda") == 1);
    CHECK(r3.counters.at("solution_1_mu") == 1);

    const auto r2 = audit_theorem_3_11(2);
    CHECK(r2.verdict == Verdict::NotApplicable);
    CHECK(r2.counters.at("solutions") == 1);
    CHECK(r2.counters.at("solution_0_mu") == 1);

    const auto r4 = audit_theorem_3_11(4);
    CHECK(r4.counters.at("solutions") == 4);
    CHECK(r4.counters.at("odd_mu_solutions") == 4);

    for (int r = 2; r <= 8; ++r) {
        const auto rep = audit_theorem_3_11(r);
        const std::int64_t lhs_a = std::int64_t{1} << (r - 1);
        const std::int64_t lhs_b = std::int64_t{1} << (r - 2);
        for (std::int64_t k = 0; k < rep.counters.at("solutions"); ++k) {
            const auto l = rep.counters.at("solution_" + std::to_string(k) + "_lambda");
            const auto m = rep.counters.at("solution_" + std::to_string(k) + "_mu");
            CHECK(lhs_a * l + lhs_b * m == rep.counters.at("twos_total"));
            CHECK(rep.counters.at("twos_total") == lhs_b * (lhs_a - 1));
        }
    }
}

TEST_CASE("report JSON")
{
    auto rep = audit_no_cyclic_arrangement("lemma_4_1", extend(build_perfect({2, 3})), {{"r", 2}, {"t", 3}});
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.counters.at("arrangements_examined") == 48);
    const auto j = nlohmann::ordered_json::parse(rep.to_json());
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"claim", "params", "verdict", "witness", "counters", "summary", "elapsed_ms"});
    CHECK(j["verdict"] == "holds");
    CHECK(j["witness"].is_null());
    CHECK(nlohmann::json::parse(rep.to_json(false)).contains("elapsed_ms") == false);

    const auto found = audit_no_cyclic_arrangement("cstar", build_cstar());
    CHECK(found.verdict == Verdict::Fails);
    const auto jf = nlohmann::json::parse(found.to_json());
    CHECK(jf["witness"]["pi_x"] == nlohmann::json::array({1, 2, 3}));
    CHECK(jf["witness"]["pi_y"] == nlohmann::json::array({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("verdict strings and exit codes")
{
    CHECK(to_string(Verdict::Holds) == "holds");
    CHECK(to_string(Verdict::Fails) == "fails");
    CHECK(to_string(Verdict::NotApplicable) == "not-applicable");
    CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
    CHECK(exit_code(Verdict::Holds) == 0);
    CHECK(exit_code(Verdict::NotApplicable) == 0);
    CHECK(exit_code(Verdict::Fails) == 1);
    CHECK(exit_code(Verdict::Inconclusive) == 2);
}

TEST_CASE("uniqueness search")
{
    const auto result = uniqueness_search(2);
    const auto& c = result.report.counters;
    CHECK(result.report.verdict == Verdict::Holds);
    CHECK(c.at("survivors") >= 1);
    CHECK(c.at("h_closure_found") == 1);
    CHECK(c.at("perfect_duals") == c.at("survivors"));
    CHECK(c.at("perfect_duals_with_type") == c.at("survivors"));
    CHECK(result.survivors.size() == static_cast<std::size_t>(c.at("survivors")));
    CHECK(c.at("weight8_vectors") == 6435);

    std::vector<MixedVector> h_span = dual(build_cstar()).codewords();
    CHECK(std::find(result.survivors.begin(), result.survivors.end(), h_span) != result.survivors.end());
    for (const auto& words : result.survivors) {
        const Z2Z4Code d(3, 6, words);
        CHECK(weight_distribution(d) == WeightDistribution{{0, 1}, {8, 15}});
        CHECK(is_cyclic(d));
        CHECK(compute_type(dual(d)) == CodeType{3, 6, 3, 4, 3});
        CHECK(is_perfect_sphere(dual(d)));
    }

    CHECK(uniqueness_search(1).report.to_json(false) == result.report.to_json(false));
}

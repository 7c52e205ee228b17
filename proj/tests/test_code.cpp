#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "z2z4/code.hpp"
#include "z2z4/constructions.hpp"

using namespace z2z4;

namespace {

const MixedMatrix h_rows{MixedVector::parse("110|112310"), MixedVector::parse("011|011231")};

MixedMatrix h_closure()
{
    MixedMatrix rows;
    for (std::size_t k = 0; k < 6; ++k) rows.push_back(h_rows[0].sigma(k));
    return rows;
}

}  // namespace

TEST_CASE("span")
{
    const auto two = span(0, 1, MixedMatrix{MixedVector::parse("|2")});
    CHECK(two == std::vector<MixedVector>{MixedVector::parse("|0"), MixedVector::parse("|2")});
    CHECK(span(3, 6, h_rows).size() == 16);
    CHECK(span(3, 6, MixedMatrix{}) == std::vector<MixedVector>{MixedVector(3, 6)});
    CHECK(oracle::as_set(span(3, 6, h_rows)) == oracle::closure(3, 6, {oracle::from(h_rows[0]), oracle::from(h_rows[1])}));
    CHECK_THROWS_AS(span(3, 6, cstar_check_matrix(), 10), CapExceeded);
}

TEST_CASE("reduction")
{
    const auto v = MixedVector::parse("10|3120");
    const MixedMatrix twice{v, v};
    CHECK(reduce_generators(2, 4, twice).rows().size() == 1);
    const MixedMatrix zeros{MixedVector(2, 4), MixedVector(2, 4)};
    CHECK(reduce_generators(2, 4, zeros).rows().empty());

    const auto closure = h_closure();
    const auto form = reduce_generators(3, 6, closure);
    CHECK(form.gamma() == 0);
    CHECK(form.delta() == 2);

    const auto cstar = build_cstar();
    CHECK(cstar.reduced().gamma() == 3);
    CHECK(cstar.reduced().delta() == 4);
    for (const auto& row : cstar.reduced().order4) CHECK(row.order() == 4);
    for (const auto& row : cstar.reduced().order2) CHECK(row.order() == 2);
}

TEST_CASE("type")
{
    const auto cstar = build_cstar();
    CHECK(compute_type(cstar) == CodeType{3, 6, 3, 4, 3});
    CHECK(compute_type(cstar).to_string() == "(3, 6; 3, 4; 3)");
    CHECK(compute_type(dual(cstar)) == CodeType{3, 6, 0, 2, 0});
    CHECK(compute_type(Z2Z4Code(2, 5, {})) == CodeType{2, 5, 0, 0, 0});
}

TEST_CASE("dual type formula")
{
    CHECK(dual_type({3, 6, 3, 4, 3}) == CodeType{3, 6, 0, 2, 0});
    CHECK(dual_type({2, 5, 0, 0, 0}) == CodeType{2, 5, 2, 5, 2});

    // Hamming(7) and its dual, enumerated by hand over 2^7 words.
    const std::vector<oracle::Vec> checks{{{1, 1, 1, 0, 1, 0, 0}, {}}, {{0, 1, 1, 1, 0, 1, 0}, {}},
                                          {{0, 0, 1, 1, 1, 0, 1}, {}}};
    const auto simplex = oracle::closure(7, 0, checks);
    const auto hamming = oracle::dual(7, 0, simplex);
    CHECK(simplex.size() == 8);
    CHECK(hamming.size() == 16);
    CHECK(dual_type({7, 0, 4, 0, 4}) == CodeType{7, 0, 3, 0, 3});

    CHECK_THROWS_AS(dual_type({3, 0, 0, 2, 0}), InvalidType);
}

TEST_CASE("dual")
{
    const auto cstar = build_cstar();
    const auto d = dual(cstar);
    CHECK(d.codewords() == span(3, 6, h_closure()));
    CHECK(dual(cstar, DualMethod::Kernel).codewords() == dual(cstar, DualMethod::BruteForce).codewords());
    for (const auto& c : cstar.codewords())
        for (const auto& h : h_rows) REQUIRE(inner_product(c, h) == 0);
    CHECK(cstar.size() * d.size() == (std::uint64_t{1} << 15));
}

TEST_CASE("projections and the order-two subcode")
{
    const auto d = dual(build_cstar());
    const auto x = puncture_x(d);
    CHECK(x.beta() == 0);
    CHECK(x.codewords() == span(3, 0, MixedMatrix{MixedVector::parse("110|"), MixedVector::parse("011|")}));
    CHECK(subcode_b(d).size() == 4);
    const auto y = puncture_y(d);
    CHECK(y.alpha() == 0);
    CHECK(y.size() == 16);
}

TEST_CASE("weight distribution")
{
    CHECK(weight_distribution(dual(build_cstar())) == WeightDistribution{{0, 1}, {8, 15}});
    CHECK(weight_distribution(Z2Z4Code(3, 6, {})) == WeightDistribution{{0, 1}});
}

TEST_CASE("membership")
{
    const auto cstar = build_cstar();
    CHECK(cstar.contains(MixedVector(3, 6)));
    const auto two = MixedVector::parse("000|200000");
    CHECK_FALSE(cstar.contains(two));
    CHECK_FALSE(contains_by_syndrome(h_rows, two));
    CHECK(dual(cstar).contains(h_rows[1].sigma()));
}

TEST_CASE("minimum distance")
{
    CHECK(min_distance(build_cstar()) == 3);
    CHECK(min_distance(dual(build_cstar())) == 8);
    CHECK(min_distance(extend(build_cstar())) == 4);
}

TEST_CASE("codes without materialization")
{
    const auto big = build_perfect({3, 6});
    CHECK_FALSE(big.materialized());
    CHECK_THROWS_AS(big.codewords(), CapExceeded);
    CHECK(big.log2_size() == 57);
    CHECK(big.contains(MixedVector(7, 28)));
}

TEST_CASE("binary rank")
{
    CHECK(binary_rank({0b011, 0b110, 0b101}) == 2);
    CHECK(binary_rank({}) == 0);
    CHECK(binary_rank({1, 2, 4, 8}) == 4);
}

TEST_CASE("random codes match the closure oracle")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t alpha = rng() % 4;
        const std::size_t beta = 1 + rng() % 3;
        std::vector<oracle::Vec> gens;
        MixedMatrix rows;
        for (std::size_t i = 0; i < 1 + rng() % 3; ++i) {
            gens.push_back(oracle::random_vec(rng, alpha, beta));
            rows.push_back(oracle::to(gens.back()));
        }
        const Z2Z4Code code(alpha, beta, rows);
        const auto expected = oracle::closure(alpha, beta, gens);
        REQUIRE(oracle::as_set(code.codewords()) == expected);

        // |C| = 2^(gamma + 2 delta) and |{v : 2v = 0}| = 2^(gamma + delta).
        CHECK(code.size() == expected.size());
        std::size_t small = 0;
        for (const auto& c : expected) small += oracle::from(oracle::to(c).doubled()) == oracle::from(MixedVector(alpha, beta));
        CHECK(small == (std::size_t{1} << (code.gamma() + code.delta())));

        for (const auto& v : oracle::ambient(alpha, beta))
            REQUIRE(code.contains(oracle::to(v)) == expected.contains(v));

        const auto d = dual(code);
        CHECK(oracle::as_set(d.codewords()) == oracle::dual(alpha, beta, expected));
        CHECK(compute_type(d) == dual_type(compute_type(code)));

        const auto again = reduce_generators(alpha, beta, code.reduced().rows());
        CHECK(again.rows() == code.reduced().rows());

        std::set<std::vector<int>> gray;
        for (const auto& c : expected) gray.insert(oracle::gray(c));
        CHECK(gray.size() == expected.size());
        CHECK(gray_image(code).size() == expected.size());

        std::size_t kappa = 0;
        {
            std::set<std::vector<int>> xs;
            for (const auto& c : expected)
                if (oracle::to(c).order() <= 2) xs.insert(c.x);
            while ((std::size_t{1} << kappa) < xs.size()) ++kappa;
        }
        CHECK(compute_type(code).kappa == kappa);
    }
}

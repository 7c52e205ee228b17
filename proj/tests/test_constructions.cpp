#include <doctest.h>

#include "oracles.hpp"
#include "z2z4/constructions.hpp"
#include "z2z4/verification.hpp"

using namespace z2z4;

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW((ConstructionParams{2, 4}.validate()));
    CHECK_THROWS_AS((ConstructionParams{2, 5}.validate()), ParameterError);
    CHECK_THROWS_AS((ConstructionParams{3, 2}.validate()), ParameterError);
    CHECK_THROWS_AS((ConstructionParams{1, 1}.validate()), ParameterError);
    CHECK_THROWS_AS(build_perfect({4, 9}), ParameterError);
}

TEST_CASE("simplex codes")
{
    const auto s2 = simplex_cyclic(2);
    CHECK(s2.codewords() == std::vector<MixedVector>{MixedVector::parse("000|"), MixedVector::parse("011|"),
                                                     MixedVector::parse("101|"), MixedVector::parse("110|")});
    const auto s3 = simplex_cyclic(3);
    CHECK(s3.size() == 8);
    CHECK(weight_distribution(s3) == WeightDistribution{{0, 1}, {4, 7}});
    for (int r = 2; r <= 6; ++r) {
        const auto s = simplex_cyclic(r);
        CHECK(s.alpha() == (std::size_t{1} << r) - 1);
        CHECK(s.size() == (std::uint64_t{1} << r));
        CHECK(is_cyclic(s));
    }
    CHECK_THROWS_AS(simplex_cyclic(7), ParameterError);
}

TEST_CASE("simplex supports meet in 2^(r-2) positions")
{
    const auto words = simplex_cyclic(3).codewords();
    for (const auto& x : words)
        for (const auto& y : words) {
            if (x == y || x.is_zero() || y.is_zero()) continue;
            CHECK(std::popcount(x.binary_plane() & y.binary_plane()) == 2);
        }
}

TEST_CASE("Hamming codes")
{
    CHECK(hamming_cyclic(2).codewords() ==
          std::vector<MixedVector>{MixedVector::parse("000|"), MixedVector::parse("111|")});

    // Scan all 2^7 words against the simplex parity checks.
    const auto s3 = simplex_cyclic(3).codewords();
    std::set<oracle::Vec> expected;
    for (const auto& v : oracle::ambient(7, 0))
        if (std::all_of(s3.begin(), s3.end(), [&](const MixedVector& c) { return oracle::inner(v, oracle::from(c)) == 0; }))
            expected.insert(v);
    const auto h3 = hamming_cyclic(3);
    CHECK(oracle::as_set(h3.codewords()) == expected);
    CHECK(h3.size() == 16);
    CHECK(min_distance(h3) == 3);
    CHECK(is_cyclic(h3));
}

TEST_CASE("perfect codes have the closed-form types")
{
    CHECK(compute_type(build_perfect({2, 4})) == CodeType{3, 6, 3, 4, 3});
    CHECK(compute_type(build_perfect({2, 3})) == CodeType{3, 2, 2, 1, 2});
    CHECK(compute_type(build_perfect({3, 6})) == CodeType{7, 28, 7, 25, 7});
    CHECK(perfect_code_type({3, 6}) == CodeType{7, 28, 7, 25, 7});
    CHECK(perfect_dual_type({3, 6}) == CodeType{7, 28, 0, 3, 0});
    CHECK(perfect_dual_type({2, 4}) == CodeType{3, 6, 0, 2, 0});
}

TEST_CASE("check matrix columns")
{
    for (const auto& p : {ConstructionParams{2, 2}, ConstructionParams{2, 3}, ConstructionParams{2, 4},
                          ConstructionParams{3, 3}, ConstructionParams{3, 4}, ConstructionParams{3, 5},
                          ConstructionParams{3, 6}}) {
        const auto h = perfect_check_matrix(p);
        CHECK(h.size() == static_cast<std::size_t>(p.r));
        CHECK(is_perfect_columns(p.alpha(), p.beta(), h));
        CHECK(1 + p.alpha() + 2 * p.beta() == (std::size_t{1} << p.t));
    }
}

TEST_CASE("t = r gives a linear Gray image")
{
    CHECK(gray_image_linear(build_perfect({2, 2})).linear);
    CHECK(gray_image_linear(build_perfect({3, 3})).linear);
}

TEST_CASE("C(2,4) and C* agree in type and weight distribution")
{
    const auto c = build_perfect({2, 4});
    const auto cstar = build_cstar();
    CHECK(compute_type(c) == compute_type(cstar));
    CHECK(weight_distribution(c) == weight_distribution(cstar));
}

TEST_CASE("C*")
{
    const auto cstar = build_cstar();
    CHECK(cstar.size() == 2048);
    CHECK(is_cyclic(cstar));
    CHECK(is_perfect(cstar));
    CHECK(cstar_check_matrix()[0].to_string() == "110|112310");
    CHECK(cstar_check_matrix()[1].to_string() == "011|011231");
}

TEST_CASE("D(r)")
{
    const auto d2 = build_d(2);
    CHECK(d2.size() == 16);
    CHECK(weight_distribution(d2) == WeightDistribution{{0, 1}, {8, 15}});
    CHECK(compute_type(build_d(3)) == CodeType{7, 28, 0, 3, 0});
    // The literal H closure gives the cyclic representative of D(2).
    const auto d = dual(build_cstar());
    CHECK(is_cyclic(d));
    CHECK(weight_distribution(d) == weight_distribution(d2));
}

TEST_CASE("extension")
{
    const auto e = extend(build_perfect({2, 3}));
    CHECK(compute_type(e) == CodeType{4, 2, 2, 1, 2});
    CHECK(e.contains(MixedVector(4, 2)));

    const auto base = build_cstar();
    const auto ext = extend(base);
    CHECK(ext.size() == base.size());
    CHECK(min_distance(ext) == 4);
    for (const auto& c : ext.codewords()) REQUIRE(c.weight() % 2 == 0);
    CHECK(compute_type(ext) == CodeType{4, 6, 3, 4, 3});
}

TEST_CASE("blocks")
{
    const auto h1 = MixedVector::parse("110|112310");
    const auto view = block_view(h1, 2);
    REQUIRE(view.blocks.size() == 2);
    CHECK(view.blocks[0] == std::vector<int>{1, 1, 2});
    CHECK(view.blocks[1] == std::vector<int>{3, 1, 0});
    CHECK(eta(view, 0) == 1);
    CHECK(eta(view, 1) == 0);
    CHECK(n_set(view, 0, 0).empty());

    int odd = 0, twos = 0, zeros = 0;
    for (std::size_t j = 0; j < h1.beta(); ++j) {
        const int s = h1.symbol(j);
        odd += s % 2;
        twos += s == 2;
        zeros += s == 0;
    }
    CHECK(odd == 4);
    CHECK(twos == 1);
    CHECK(zeros == 1);

    const auto same = block_view(MixedVector::parse("101|120120"), 2);
    CHECK(n_set(same, 0, 1).empty());
    const auto diff = block_view(MixedVector::parse("101|120102"), 2);
    CHECK(n_set(diff, 0, 1) == std::vector<std::size_t>{1, 2});

    CHECK_THROWS_AS(block_view(MixedVector::parse("101|1201"), 2), DimensionError);
}

TEST_CASE("blocks of order-four codewords of the r = 2 dual are congruent mod 2")
{
    const auto d = dual(build_cstar());
    std::size_t order4 = 0;
    for (const auto& z : d.codewords()) {
        if (z.order() != 4) continue;
        ++order4;
        const auto view = block_view(z, 2);
        for (std::size_t l = 0; l < 3; ++l) CHECK(view.blocks[0][l] % 2 == view.blocks[1][l] % 2);
    }
    CHECK(order4 == 12);
}

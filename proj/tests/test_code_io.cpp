#include <doctest.h>

#include <filesystem>

#include "z2z4/code_io.hpp"
#include "z2z4/constructions.hpp"

using namespace z2z4;

TEST_CASE("parse the C* check matrix")
{
    const auto f = parse_code_file("alpha=3 beta=6\n110|112310\n011|011231");
    CHECK(f.alpha == 3);
    CHECK(f.beta == 6);
    CHECK(f.rows == cstar_check_matrix());
}

TEST_CASE("comments, blank lines and empty sides")
{
    const auto f = parse_code_file("# a single order-two generator\n\nalpha=0 beta=1\n|2\n");
    CHECK(f.alpha == 0);
    REQUIRE(f.rows.size() == 1);
    CHECK(f.rows[0] == MixedVector::parse("|2"));
    CHECK(f.to_code().size() == 2);
}

TEST_CASE("parse errors carry line numbers")
{
    try {
        parse_code_file("alpha=3 beta=6\n110|112314");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find('4') != std::string::npos);
    }
    try {
        parse_code_file("alpha=3 beta=6\n110112310");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_code_file("# c\nalpha=3 beta=6\n110|112310\n11|112310");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_code_file("110|112310"), ParseError);
    CHECK_THROWS_AS(parse_code_file(""), ParseError);
    CHECK_THROWS_AS(parse_code_file("alpha=65 beta=0"), ParseError);
}

TEST_CASE("print and parse round-trip")
{
    for (const auto& code : {build_cstar(), dual(build_cstar()), build_perfect({3, 6}), extend(build_perfect({2, 3})),
                             simplex_cyclic(5), Z2Z4Code(2, 3, {})}) {
        const auto text = format_code_file(code, "round trip");
        const auto back = parse_code_file(text).to_code();
        CHECK(format_code_file(back, "round trip") == text);
        CHECK(back.reduced().rows() == code.reduced().rows());
    }
}

TEST_CASE("files")
{
    const auto path = (std::filesystem::temp_directory_path() / "z2z4_code_io_test.z2z4").string();
    write_code_file(path, build_cstar());
    const auto back = read_code_file(path).to_code();
    CHECK(compute_type(back) == CodeType{3, 6, 3, 4, 3});
    std::filesystem::remove(path);
    CHECK_THROWS(read_code_file(path));
}

#pragma once

// Text interchange format for codes:
//
//     # optional comments
//     alpha=3 beta=6
//     110|112310
//     011|011231
//
// The header gives the shape; each following non-comment line is one
// generator in the vector literal syntax.

#include <string>
#include <string_view>

#include "z2z4/code.hpp"

namespace z2z4 {

struct CodeFile {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    MixedMatrix rows;

    Z2Z4Code to_code(std::uint64_t cap = kDefaultCap) const { return Z2Z4Code(alpha, beta, rows, cap); }
};

/// Throws ParseError carrying the offending line number.
CodeFile parse_code_file(std::string_view text);

/// Canonical form: header plus the reduced generators, one per line.
std::string format_code_file(const Z2Z4Code& code, std::string_view comment = {});

CodeFile read_code_file(const std::string& path);
void write_code_file(const std::string& path, const Z2Z4Code& code, std::string_view comment = {});

}  // namespace z2z4

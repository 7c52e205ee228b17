#pragma once

// Builders for the code families: cyclic simplex and Hamming codes, the
// Z2Z4-linear 1-perfect codes C(r, t), the cyclic code C* of binary length 15,
// their duals, and even-parity extensions.

#include <cstddef>
#include <vector>

#include "z2z4/code.hpp"

namespace z2z4 {

/// Parameters of a Z2Z4-additive 1-perfect code: binary length 2^t - 1,
/// alpha = 2^r - 1 binary coordinates.
struct ConstructionParams {
    int r = 2;
    int t = 2;

    /// Throws ParameterError unless 2 <= r <= t <= 2r and the shape fits.
    void validate() const;

    std::size_t alpha() const { return (std::size_t{1} << r) - 1; }
    std::size_t beta() const { return (std::size_t{1} << (t - 1)) - (std::size_t{1} << (r - 1)); }
};

/// Closed-form type of C(r, t).
CodeType perfect_code_type(const ConstructionParams& p);
/// Closed-form type of the dual of C(r, t).
CodeType perfect_dual_type(const ConstructionParams& p);

/// Primitive polynomial used for the LFSR of S_r, as a bit mask of the
/// coefficients of x^0 .. x^(r-1). Supported r: 2..6.
std::uint64_t simplex_feedback_taps(int r);

/// Binary cyclic simplex code S_r (beta = 0): the cyclic shifts of an
/// m-sequence of period 2^r - 1, plus zero.
Z2Z4Code simplex_cyclic(int r);

/// Binary cyclic Hamming code of length 2^r - 1: the dual of simplex_cyclic(r).
Z2Z4Code hamming_cyclic(int r);

/// Parity check matrix of C(r, t): 2r - t binary rows and t - r quaternary
/// rows. Its columns are the nonzero elements of order two of the syndrome
/// group Z2^(2r-t) x Z4^(t-r) (X part) and one representative of every
/// {c, -c} pair of order-four elements (Y part), both in ascending order.
MixedMatrix perfect_check_matrix(const ConstructionParams& p);

Z2Z4Code build_perfect(const ConstructionParams& p, std::uint64_t cap = kDefaultCap);

/// The literal two-row check matrix of the cyclic (3, 6) code:
/// 110|112310 and its shift 011|011231.
MixedMatrix cstar_check_matrix();

Z2Z4Code build_cstar(std::uint64_t cap = kDefaultCap);

/// D(r): the dual of C(r, 2r).
Z2Z4Code build_d(int r, std::uint64_t cap = kDefaultCap);

/// Appends an even-parity binary coordinate at the end of the X part.
Z2Z4Code extend(const Z2Z4Code& code);

/// A codeword of a code with beta = 2^(r-1) alpha, split into its X part and
/// the 2^(r-1) consecutive quaternary blocks of length alpha.
struct BlockView {
    BinaryVector x_part;
    std::vector<std::vector<int>> blocks;
};

BlockView block_view(const MixedVector& z, int r);

/// Number of symbols equal to 2 in block k (0-indexed).
std::size_t eta(const BlockView& view, std::size_t k);

/// Positions l (0-indexed) where {block_i[l], block_j[l]} = {0, 2}.
std::vector<std::size_t> n_set(const BlockView& view, std::size_t i, std::size_t j);

}  // namespace z2z4

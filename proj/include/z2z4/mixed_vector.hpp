#pragma once

// Elements of Z2^alpha x Z4^beta and binary vectors.
//
// Storage is bit-sliced: the binary part occupies one 64-bit word, the
// quaternary part two bit-planes (low bit, high bit of each symbol), so that
// addition, negation, weights and inner products are a handful of word
// operations. alpha and beta are each limited to 64 positions.
//
// Positions are 0-indexed throughout the library. Reports and the CLI shift
// to 1-indexed positions at their boundary.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4/errors.hpp"

namespace z2z4 {

inline constexpr std::size_t kMaxPartLength = 64;

namespace detail {

constexpr std::uint64_t low_mask(std::size_t n) noexcept
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Right cyclic shift by k of an n-bit field.
constexpr std::uint64_t rotate_field(std::uint64_t x, std::size_t n, std::size_t k) noexcept
{
    if (n == 0) return 0;
    k %= n;
    if (k == 0) return x;
    return ((x << k) | (x >> (n - k))) & low_mask(n);
}

}  // namespace detail

/// A binary vector of up to 192 positions (the Gray image length bound).
class BinaryVector {
public:
    static constexpr std::size_t kMaxLength = 192;

    BinaryVector() = default;
    explicit BinaryVector(std::size_t length);

    static BinaryVector parse(std::string_view text);

    std::size_t length() const noexcept { return length_; }
    bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value) noexcept
    {
        const auto bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept { return weight() == 0; }

    BinaryVector operator^(const BinaryVector& other) const;
    BinaryVector& operator^=(const BinaryVector& other);

    /// Positions holding a 1.
    std::vector<std::size_t> support() const;
    /// Positions holding a 0.
    std::vector<std::size_t> co_support() const;

    std::string to_string() const;

    bool operator==(const BinaryVector&) const = default;
    std::strong_ordering operator<=>(const BinaryVector& other) const noexcept;

    std::size_t hash() const noexcept;

private:
    std::uint16_t length_ = 0;
    std::array<std::uint64_t, 3> words_{};
};

std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b);

/// An element u = (u | u') of Z2^alpha x Z4^beta.
class MixedVector {
public:
    MixedVector() = default;
    /// Zero vector of the given shape.
    MixedVector(std::size_t alpha, std::size_t beta);

    static MixedVector from_symbols(std::span<const int> binary, std::span<const int> quaternary);
    static MixedVector from_symbols(std::initializer_list<int> binary, std::initializer_list<int> quaternary);

    /// Parses the literal syntax "110|112310". Whitespace is ignored; either
    /// side of the bar may be empty.
    static MixedVector parse(std::string_view text);

    /// Bijection between [0, 2^(alpha+2beta)) and the ambient space; requires
    /// alpha + 2 beta <= 63. Bits are laid out as binary part, then the low
    /// planes, then the high planes.
    static MixedVector from_index(std::size_t alpha, std::size_t beta, std::uint64_t index);
    std::uint64_t index() const;

    /// Bit-plane constructor; masks are trimmed to the shape.
    static MixedVector from_planes(std::size_t alpha, std::size_t beta, std::uint64_t binary,
                                   std::uint64_t low, std::uint64_t high);

    std::size_t alpha() const noexcept { return alpha_; }
    std::size_t beta() const noexcept { return beta_; }
    /// Binary length of the Gray image.
    std::size_t length() const noexcept { return alpha_ + 2 * std::size_t{beta_}; }
    bool same_shape(const MixedVector& o) const noexcept { return alpha_ == o.alpha_ && beta_ == o.beta_; }

    int bit(std::size_t i) const noexcept { return static_cast<int>((bin_ >> i) & 1u); }
    int symbol(std::size_t j) const noexcept
    {
        return static_cast<int>(((lo_ >> j) & 1u) | (((hi_ >> j) & 1u) << 1));
    }
    void set_bit(std::size_t i, int value);
    void set_symbol(std::size_t j, int value);

    std::uint64_t binary_plane() const noexcept { return bin_; }
    std::uint64_t low_plane() const noexcept { return lo_; }
    std::uint64_t high_plane() const noexcept { return hi_; }

    MixedVector operator+(const MixedVector& o) const;
    MixedVector& operator+=(const MixedVector& o);
    MixedVector operator-() const noexcept;
    MixedVector operator-(const MixedVector& o) const { return *this + (-o); }
    /// Group action of the integer c (c taken mod 4).
    MixedVector times(int c) const noexcept;
    MixedVector doubled() const noexcept { return times(2); }

    bool is_zero() const noexcept { return (bin_ | lo_ | hi_) == 0; }
    /// Additive order: 1, 2 or 4.
    int order() const noexcept;

    /// Hamming weight of the binary part plus Lee weight of the quaternary part.
    std::size_t weight() const noexcept
    {
        return static_cast<std::size_t>(std::popcount(bin_) + std::popcount(lo_) + 2 * std::popcount(hi_ & ~lo_));
    }

    /// Double right cyclic shift applied k times.
    MixedVector sigma(std::size_t k = 1) const noexcept;

    /// Coordinate rearrangement: result position p takes this vector's
    /// position perm[p]. Binary and quaternary permutations stay separate.
    MixedVector permuted(std::span<const std::size_t> perm_x, std::span<const std::size_t> perm_y) const;

    BinaryVector gray_map() const;
    BinaryVector x_part() const;

    std::string to_string() const;

    bool operator==(const MixedVector&) const = default;
    /// Lexicographic on the symbol sequence, binary part first. Shapes compare first.
    std::strong_ordering operator<=>(const MixedVector& o) const noexcept;

    std::size_t hash() const noexcept;

private:
    void check_shape(const MixedVector& o) const;

    std::uint8_t alpha_ = 0;
    std::uint8_t beta_ = 0;
    std::uint64_t bin_ = 0;
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
};

std::size_t distance(const MixedVector& a, const MixedVector& b);

/// 2 * sum(u_i v_i) + sum(u'_j v'_j) mod 4.
int inner_product(const MixedVector& a, const MixedVector& b);

/// Componentwise product of the quaternary parts; binary part zero. With it,
/// Phi(u) xor Phi(v) = Phi(u + v + 2 (u * v)).
MixedVector quaternary_product(const MixedVector& a, const MixedVector& b);

struct MixedVectorHash {
    std::size_t operator()(const MixedVector& v) const noexcept { return v.hash(); }
};

struct BinaryVectorHash {
    std::size_t operator()(const BinaryVector& v) const noexcept { return v.hash(); }
};

}  // namespace z2z4

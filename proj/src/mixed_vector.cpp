#include "z2z4/mixed_vector.hpp"

#include <algorithm>
#include <cctype>

namespace z2z4 {

using detail::low_mask;
using detail::rotate_field;

namespace {

std::size_t mix(std::size_t seed, std::uint64_t value) noexcept
{
    return seed ^ (std::hash<std::uint64_t>{}(value) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- BinaryVector

BinaryVector::BinaryVector(std::size_t length) : length_(static_cast<std::uint16_t>(length))
{
    if (length > kMaxLength)
        throw DimensionError("binary vector length " + std::to_string(length) + " exceeds " +
                             std::to_string(kMaxLength));
}

BinaryVector BinaryVector::parse(std::string_view text)
{
    const auto s = strip_spaces(text);
    BinaryVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') throw ParseError(std::string("invalid binary symbol '") + s[i] + "'");
        v.set(i, s[i] == '1');
    }
    return v;
}

std::size_t BinaryVector::weight() const noexcept
{
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

BinaryVector BinaryVector::operator^(const BinaryVector& other) const
{
    BinaryVector r = *this;
    r ^= other;
    return r;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other)
{
    if (length_ != other.length_) throw DimensionError("binary vectors of different length");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

std::vector<std::size_t> BinaryVector::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> BinaryVector::co_support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < length_; ++i)
        if (!get(i)) out.push_back(i);
    return out;
}

std::string BinaryVector::to_string() const
{
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::strong_ordering BinaryVector::operator<=>(const BinaryVector& other) const noexcept
{
    if (auto c = length_ <=> other.length_; c != 0) return c;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const auto diff = words_[k] ^ other.words_[k];
        if (diff == 0) continue;
        const auto bit = std::uint64_t{1} << std::countr_zero(diff);
        return (words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t BinaryVector::hash() const noexcept
{
    std::size_t h = length_;
    for (auto word : words_) h = mix(h, word);
    return h;
}

std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b)
{
    return (a ^ b).weight();
}

// ----------------------------------------------------------------- MixedVector

MixedVector::MixedVector(std::size_t alpha, std::size_t beta)
    : alpha_(static_cast<std::uint8_t>(alpha)), beta_(static_cast<std::uint8_t>(beta))
{
    if (alpha > kMaxPartLength || beta > kMaxPartLength)
        throw DimensionError("shape (" + std::to_string(alpha) + ", " + std::to_string(beta) +
                             ") exceeds the 64-position limit per part");
}

MixedVector MixedVector::from_symbols(std::span<const int> binary, std::span<const int> quaternary)
{
    MixedVector v(binary.size(), quaternary.size());
    for (std::size_t i = 0; i < binary.size(); ++i) v.set_bit(i, binary[i]);
    for (std::size_t j = 0; j < quaternary.size(); ++j) v.set_symbol(j, quaternary[j]);
    return v;
}

MixedVector MixedVector::from_symbols(std::initializer_list<int> binary, std::initializer_list<int> quaternary)
{
    return from_symbols(std::span<const int>(binary.begin(), binary.size()),
                        std::span<const int>(quaternary.begin(), quaternary.size()));
}

MixedVector MixedVector::parse(std::string_view text)
{
    const auto s = strip_spaces(text);
    const auto bar = s.find('|');
    if (bar == std::string::npos) throw ParseError("missing '|' in vector literal \"" + s + "\"");
    if (s.find('|', bar + 1) != std::string::npos) throw ParseError("more than one '|' in vector literal");
    const auto left = std::string_view(s).substr(0, bar);
    const auto right = std::string_view(s).substr(bar + 1);
    if (left.size() > kMaxPartLength || right.size() > kMaxPartLength)
        throw ParseError("vector literal exceeds the 64-position limit per part");

    MixedVector v(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] != '0' && left[i] != '1')
            throw ParseError(std::string("invalid binary symbol '") + left[i] + "'");
        v.set_bit(i, left[i] - '0');
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
        if (right[j] < '0' || right[j] > '3')
            throw ParseError(std::string("invalid quaternary symbol '") + right[j] + "'");
        v.set_symbol(j, right[j] - '0');
    }
    return v;
}

MixedVector MixedVector::from_index(std::size_t alpha, std::size_t beta, std::uint64_t index)
{
    if (alpha + 2 * beta > 63) throw DimensionError("index encoding requires alpha + 2 beta <= 63");
    MixedVector v(alpha, beta);
    v.bin_ = index & low_mask(alpha);
    v.lo_ = (index >> alpha) & low_mask(beta);
    v.hi_ = (index >> (alpha + beta)) & low_mask(beta);
    return v;
}

std::uint64_t MixedVector::index() const
{
    if (length() > 63) throw DimensionError("index encoding requires alpha + 2 beta <= 63");
    return bin_ | (lo_ << alpha_) | (hi_ << (alpha_ + beta_));
}

MixedVector MixedVector::from_planes(std::size_t alpha, std::size_t beta, std::uint64_t binary,
                                     std::uint64_t low, std::uint64_t high)
{
    MixedVector v(alpha, beta);
    v.bin_ = binary & low_mask(alpha);
    v.lo_ = low & low_mask(beta);
    v.hi_ = high & low_mask(beta);
    return v;
}

void MixedVector::set_bit(std::size_t i, int value)
{
    if (i >= alpha_) throw DimensionError("binary position out of range");
    if (value != 0 && value != 1) throw DimensionError("binary symbol must be 0 or 1");
    const auto m = std::uint64_t{1} << i;
    bin_ = value ? (bin_ | m) : (bin_ & ~m);
}

void MixedVector::set_symbol(std::size_t j, int value)
{
    if (j >= beta_) throw DimensionError("quaternary position out of range");
    if (value < 0 || value > 3) throw DimensionError("quaternary symbol must be in 0..3");
    const auto m = std::uint64_t{1} << j;
    lo_ = (value & 1) ? (lo_ | m) : (lo_ & ~m);
    hi_ = (value & 2) ? (hi_ | m) : (hi_ & ~m);
}

void MixedVector::check_shape(const MixedVector& o) const
{
    if (!same_shape(o))
        throw DimensionError("shape mismatch: (" + std::to_string(alpha_) + ", " + std::to_string(beta_) +
                             ") vs (" + std::to_string(o.alpha_) + ", " + std::to_string(o.beta_) + ")");
}

MixedVector MixedVector::operator+(const MixedVector& o) const
{
    MixedVector r = *this;
    r += o;
    return r;
}

MixedVector& MixedVector::operator+=(const MixedVector& o)
{
    check_shape(o);
    const auto carry = lo_ & o.lo_;
    bin_ ^= o.bin_;
    lo_ ^= o.lo_;
    hi_ ^= o.hi_ ^ carry;
    return *this;
}

MixedVector MixedVector::operator-() const noexcept
{
    MixedVector r = *this;
    r.hi_ ^= lo_;
    return r;
}

MixedVector MixedVector::times(int c) const noexcept
{
    switch (((c % 4) + 4) % 4) {
    case 0: {
        MixedVector z = *this;
        z.bin_ = z.lo_ = z.hi_ = 0;
        return z;
    }
    case 1:
        return *this;
    case 2: {
        MixedVector r = *this;
        r.bin_ = 0;
        r.hi_ = lo_;
        r.lo_ = 0;
        return r;
    }
    default:
        return -*this;
    }
}

int MixedVector::order() const noexcept
{
    if (is_zero()) return 1;
    return lo_ ? 4 : 2;
}

MixedVector MixedVector::sigma(std::size_t k) const noexcept
{
    MixedVector r = *this;
    r.bin_ = rotate_field(bin_, alpha_, k);
    r.lo_ = rotate_field(lo_, beta_, k);
    r.hi_ = rotate_field(hi_, beta_, k);
    return r;
}

MixedVector MixedVector::permuted(std::span<const std::size_t> perm_x, std::span<const std::size_t> perm_y) const
{
    if (perm_x.size() != alpha_ || perm_y.size() != beta_) throw DimensionError("permutation size mismatch");
    MixedVector r(alpha_, beta_);
    for (std::size_t p = 0; p < perm_x.size(); ++p) r.bin_ |= ((bin_ >> perm_x[p]) & 1u) << p;
    for (std::size_t p = 0; p < perm_y.size(); ++p) {
        r.lo_ |= ((lo_ >> perm_y[p]) & 1u) << p;
        r.hi_ |= ((hi_ >> perm_y[p]) & 1u) << p;
    }
    return r;
}

BinaryVector MixedVector::gray_map() const
{
    // phi(0)=00, phi(1)=01, phi(2)=11, phi(3)=10: first bit is the high
    // plane, second bit is high xor low.
    BinaryVector g(length());
    for (std::size_t i = 0; i < alpha_; ++i) g.set(i, (bin_ >> i) & 1u);
    for (std::size_t j = 0; j < beta_; ++j) {
        const bool h = (hi_ >> j) & 1u;
        const bool l = (lo_ >> j) & 1u;
        g.set(alpha_ + 2 * j, h);
        g.set(alpha_ + 2 * j + 1, h != l);
    }
    return g;
}

BinaryVector MixedVector::x_part() const
{
    BinaryVector x(alpha_);
    for (std::size_t i = 0; i < alpha_; ++i) x.set(i, (bin_ >> i) & 1u);
    return x;
}

std::string MixedVector::to_string() const
{
    std::string s;
    s.reserve(alpha_ + beta_ + 1);
    for (std::size_t i = 0; i < alpha_; ++i) s.push_back(static_cast<char>('0' + bit(i)));
    s.push_back('|');
    for (std::size_t j = 0; j < beta_; ++j) s.push_back(static_cast<char>('0' + symbol(j)));
    return s;
}

std::strong_ordering MixedVector::operator<=>(const MixedVector& o) const noexcept
{
    if (auto c = alpha_ <=> o.alpha_; c != 0) return c;
    if (auto c = beta_ <=> o.beta_; c != 0) return c;
    if (const auto diff = bin_ ^ o.bin_) {
        const auto p = std::countr_zero(diff);
        return ((bin_ >> p) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (const auto diff = (lo_ ^ o.lo_) | (hi_ ^ o.hi_)) {
        const auto p = static_cast<std::size_t>(std::countr_zero(diff));
        return symbol(p) <=> o.symbol(p);
    }
    return std::strong_ordering::equal;
}

std::size_t MixedVector::hash() const noexcept
{
    std::size_t h = (std::size_t{alpha_} << 8) | beta_;
    h = mix(h, bin_);
    h = mix(h, lo_);
    return mix(h, hi_);
}

std::size_t distance(const MixedVector& a, const MixedVector& b)
{
    return (a - b).weight();
}

int inner_product(const MixedVector& a, const MixedVector& b)
{
    if (!a.same_shape(b)) throw DimensionError("inner product of vectors with different shapes");
    const auto bin = std::popcount(a.binary_plane() & b.binary_plane());
    const auto odd = std::popcount(a.low_plane() & b.low_plane());
    const auto cross = std::popcount(a.low_plane() & b.high_plane()) + std::popcount(a.high_plane() & b.low_plane());
    return (2 * bin + odd + 2 * cross) & 3;
}

MixedVector quaternary_product(const MixedVector& a, const MixedVector& b)
{
    if (!a.same_shape(b)) throw DimensionError("product of vectors with different shapes");
    const auto lo = a.low_plane() & b.low_plane();
    const auto hi = (a.low_plane() & b.high_plane()) ^ (a.high_plane() & b.low_plane());
    return MixedVector::from_planes(a.alpha(), a.beta(), 0, lo, hi);
}

}  // namespace z2z4

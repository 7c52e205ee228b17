#include "z2z4/constructions.hpp"

#include <algorithm>

namespace z2z4 {

void ConstructionParams::validate() const
{
    if (!(2 <= r && r <= t && t <= 2 * r))
        throw ParameterError("parameters (r, t) = (" + std::to_string(r) + ", " + std::to_string(t) +
                             ") violate 2 <= r <= t <= 2r");
    if (alpha() > kMaxPartLength || beta() > kMaxPartLength)
        throw ParameterError("parameters (r, t) = (" + std::to_string(r) + ", " + std::to_string(t) +
                             ") exceed the 64-position limit per part");
}

CodeType perfect_code_type(const ConstructionParams& p)
{
    p.validate();
    const std::size_t r = static_cast<std::size_t>(p.r);
    const std::size_t t = static_cast<std::size_t>(p.t);
    const std::size_t alpha = p.alpha();
    const std::size_t beta = p.beta();
    const std::size_t gamma = alpha + t - 2 * r;
    const std::size_t delta = beta + r - t;
    return {alpha, beta, gamma, delta, gamma};
}

CodeType perfect_dual_type(const ConstructionParams& p)
{
    p.validate();
    const auto g = static_cast<std::size_t>(2 * p.r - p.t);
    return {p.alpha(), p.beta(), g, static_cast<std::size_t>(p.t - p.r), g};
}

std::uint64_t simplex_feedback_taps(int r)
{
    // x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1
    switch (r) {
    case 2: return 0b11;
    case 3: return 0b011;
    case 4: return 0b0011;
    case 5: return 0b00101;
    case 6: return 0b000011;
    default: throw ParameterError("simplex codes are tabulated for 2 <= r <= 6, got r = " + std::to_string(r));
    }
}

Z2Z4Code simplex_cyclic(int r)
{
    const std::uint64_t taps = simplex_feedback_taps(r);
    const std::size_t n = (std::size_t{1} << r) - 1;

    // s[k + r] = sum_i c_i s[k + i] over GF(2), seeded with 1, 0, ..., 0.
    std::vector<int> s(n + static_cast<std::size_t>(r), 0);
    s[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        int next = 0;
        for (int i = 0; i < r; ++i)
            if ((taps >> i) & 1u) next ^= s[k + static_cast<std::size_t>(i)];
        s[k + static_cast<std::size_t>(r)] = next;
    }
    MixedVector word(n, 0);
    for (std::size_t i = 0; i < n; ++i) word.set_bit(i, s[i]);

    MixedMatrix gens;
    for (std::size_t k = 0; k < n; ++k) gens.push_back(word.sigma(k));
    return Z2Z4Code(n, 0, std::move(gens));
}

Z2Z4Code hamming_cyclic(int r)
{
    return dual(simplex_cyclic(r));
}

MixedMatrix perfect_check_matrix(const ConstructionParams& p)
{
    p.validate();
    const auto gbar = static_cast<std::size_t>(2 * p.r - p.t);
    const auto dbar = static_cast<std::size_t>(p.t - p.r);
    const std::size_t group_bits = gbar + 2 * dbar;

    std::vector<MixedVector> x_columns;
    std::vector<MixedVector> y_columns;
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << group_bits); ++idx) {
        const auto c = MixedVector::from_index(gbar, dbar, idx);
        if (c.order() == 2)
            x_columns.push_back(c);
        else
            y_columns.push_back(std::min(c, -c));
    }
    std::sort(x_columns.begin(), x_columns.end());
    std::sort(y_columns.begin(), y_columns.end());
    y_columns.erase(std::unique(y_columns.begin(), y_columns.end()), y_columns.end());

    const std::size_t alpha = x_columns.size();
    const std::size_t beta = y_columns.size();
    if (alpha != p.alpha() || beta != p.beta())
        throw ParameterError("column count mismatch while building the check matrix");

    // A binary syndrome coordinate contributes 2 * (entry) to the inner
    // product, so it is stored as a bit on X and as a doubled symbol on Y.
    // A quaternary syndrome coordinate of an order-two X column is even and is
    // stored halved on X.
    MixedMatrix rows;
    for (std::size_t k = 0; k < gbar; ++k) {
        MixedVector row(alpha, beta);
        for (std::size_t i = 0; i < alpha; ++i) row.set_bit(i, x_columns[i].bit(k));
        for (std::size_t j = 0; j < beta; ++j) row.set_symbol(j, 2 * y_columns[j].bit(k));
        rows.push_back(row);
    }
    for (std::size_t k = 0; k < dbar; ++k) {
        MixedVector row(alpha, beta);
        for (std::size_t i = 0; i < alpha; ++i) row.set_bit(i, x_columns[i].symbol(k) / 2);
        for (std::size_t j = 0; j < beta; ++j) row.set_symbol(j, y_columns[j].symbol(k));
        rows.push_back(row);
    }
    return rows;
}

Z2Z4Code build_perfect(const ConstructionParams& p, std::uint64_t cap)
{
    return Z2Z4Code::from_parity_check(p.alpha(), p.beta(), perfect_check_matrix(p), cap);
}

MixedMatrix cstar_check_matrix()
{
    return {MixedVector::parse("110|112310"), MixedVector::parse("011|011231")};
}

Z2Z4Code build_cstar(std::uint64_t cap)
{
    return Z2Z4Code::from_parity_check(3, 6, cstar_check_matrix(), cap);
}

Z2Z4Code build_d(int r, std::uint64_t cap)
{
    return dual(build_perfect({r, 2 * r}, cap));
}

Z2Z4Code extend(const Z2Z4Code& code)
{
    const std::size_t alpha = code.alpha() + 1;
    if (alpha > kMaxPartLength) throw DimensionError("extension exceeds the 64-position limit");
    // Weight parity is additive, so extending the generators extends the code.
    MixedMatrix gens;
    for (const auto& g : code.reduced().rows()) {
        const std::uint64_t parity = g.weight() & 1u;
        gens.push_back(MixedVector::from_planes(alpha, code.beta(), g.binary_plane() | (parity << code.alpha()),
                                                g.low_plane(), g.high_plane()));
    }
    return Z2Z4Code(alpha, code.beta(), std::move(gens), code.cap());
}

BlockView block_view(const MixedVector& z, int r)
{
    if (r < 2 || r > 7) throw ParameterError("block view needs 2 <= r <= 7");
    const std::size_t blocks = std::size_t{1} << (r - 1);
    const std::size_t alpha = z.alpha();
    if (alpha == 0 || z.beta() != blocks * alpha)
        throw DimensionError("block view needs beta = 2^(r-1) alpha, got (" + std::to_string(z.alpha()) + ", " +
                             std::to_string(z.beta()) + ") with r = " + std::to_string(r));
    BlockView view{z.x_part(), {}};
    for (std::size_t b = 0; b < blocks; ++b) {
        std::vector<int> block(alpha);
        for (std::size_t l = 0; l < alpha; ++l) block[l] = z.symbol(b * alpha + l);
        view.blocks.push_back(std::move(block));
    }
    return view;
}

std::size_t eta(const BlockView& view, std::size_t k)
{
    const auto& block = view.blocks.at(k);
    return static_cast<std::size_t>(std::count(block.begin(), block.end(), 2));
}

std::vector<std::size_t> n_set(const BlockView& view, std::size_t i, std::size_t j)
{
    const auto& a = view.blocks.at(i);
    const auto& b = view.blocks.at(j);
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < a.size(); ++l)
        if ((a[l] == 0 && b[l] == 2) || (a[l] == 2 && b[l] == 0)) out.push_back(l);
    return out;
}

}  // namespace z2z4

#include "z2z4/code.hpp"

#include <algorithm>
#include <unordered_set>

namespace z2z4 {

// --------------------------------------------------------------------- types

void CodeType::validate() const
{
    if (alpha > kMaxPartLength || beta > kMaxPartLength) throw InvalidType("type " + to_string() + " exceeds capacity");
    if (kappa > std::min(gamma, alpha)) throw InvalidType("kappa exceeds min(gamma, alpha) in " + to_string());
    if (gamma + 2 * delta > alpha + 2 * beta) throw InvalidType("gamma + 2 delta exceeds alpha + 2 beta in " + to_string());
    if (delta > beta) throw InvalidType("delta exceeds beta in " + to_string());
}

std::string CodeType::to_string() const
{
    return "(" + std::to_string(alpha) + ", " + std::to_string(beta) + "; " + std::to_string(gamma) + ", " +
           std::to_string(delta) + "; " + std::to_string(kappa) + ")";
}

CodeType dual_type(const CodeType& t)
{
    t.validate();
    const auto a = static_cast<long long>(t.alpha);
    const auto b = static_cast<long long>(t.beta);
    const auto g = static_cast<long long>(t.gamma);
    const auto d = static_cast<long long>(t.delta);
    const auto k = static_cast<long long>(t.kappa);
    const long long dg = a + g - 2 * k;
    const long long dd = b - g - d + k;
    const long long dk = a - k;
    if (dg < 0 || dd < 0 || dk < 0) throw InvalidType("dual type of " + t.to_string() + " has a negative component");
    CodeType out{t.alpha, t.beta, static_cast<std::size_t>(dg), static_cast<std::size_t>(dd),
                 static_cast<std::size_t>(dk)};
    out.validate();
    return out;
}

// ----------------------------------------------------------------- reduction

MixedMatrix ReducedForm::rows() const
{
    MixedMatrix out = order4;
    out.insert(out.end(), order2.begin(), order2.end());
    return out;
}

namespace {

// Whether the order-2 elimination step must add a pivot row to clear `v` at `p`.
bool has_even_part(const MixedVector& v, const Pivot& p)
{
    return p.quaternary ? ((v.high_plane() >> p.position) & 1u) : ((v.binary_plane() >> p.position) & 1u);
}

void move_to(MixedMatrix& rows, std::size_t from, std::size_t to)
{
    std::rotate(rows.begin() + static_cast<std::ptrdiff_t>(to), rows.begin() + static_cast<std::ptrdiff_t>(from),
                rows.begin() + static_cast<std::ptrdiff_t>(from) + 1);
}

}  // namespace

ReducedForm reduce_generators(std::size_t alpha, std::size_t beta, std::span<const MixedVector> rows)
{
    ReducedForm form;
    form.alpha = alpha;
    form.beta = beta;

    MixedMatrix work;
    work.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.alpha() != alpha || r.beta() != beta)
            throw DimensionError("generator " + r.to_string() + " does not have shape (" + std::to_string(alpha) +
                                 ", " + std::to_string(beta) + ")");
        if (!r.is_zero()) work.push_back(r);
    }

    std::size_t next = 0;

    // Order-4 pivots: odd entries on quaternary columns.
    for (std::size_t j = 0; j < beta && next < work.size(); ++j) {
        std::size_t found = work.size();
        for (std::size_t i = next; i < work.size(); ++i)
            if ((work[i].low_plane() >> j) & 1u) {
                found = i;
                break;
            }
        if (found == work.size()) continue;
        move_to(work, found, next);
        if (work[next].symbol(j) == 3) work[next] = -work[next];
        const MixedVector pivot = work[next];
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == next) continue;
            if (const int c = work[i].symbol(j)) work[i] = work[i] - pivot.times(c);
        }
        form.pivots4.push_back(j);
        ++next;
    }
    const std::size_t n4 = next;

    // Order-2 pivots. Every remaining row now has only even entries.
    std::vector<Pivot> columns;
    for (std::size_t j = 0; j < beta; ++j) columns.push_back({true, j});
    for (std::size_t i = 0; i < alpha; ++i) columns.push_back({false, i});
    for (const auto& col : columns) {
        if (next >= work.size()) break;
        std::size_t found = work.size();
        for (std::size_t i = next; i < work.size(); ++i)
            if (has_even_part(work[i], col)) {
                found = i;
                break;
            }
        if (found == work.size()) continue;
        move_to(work, found, next);
        const MixedVector pivot = work[next];
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != next && has_even_part(work[i], col)) work[i] += pivot;
        form.pivots2.push_back(col);
        ++next;
    }

    form.order4.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(n4));
    form.order2.assign(work.begin() + static_cast<std::ptrdiff_t>(n4), work.begin() + static_cast<std::ptrdiff_t>(next));
    return form;
}

// -------------------------------------------------------------------- codes

namespace {

// Calls fn on every codeword, visiting each exactly once (mixed-radix
// odometer over the reduced rows; each step adds one generator per digit
// touched).
template <typename Fn>
void for_each_codeword(const ReducedForm& form, Fn&& fn)
{
    const MixedMatrix rows = form.rows();
    const std::size_t n4 = form.order4.size();
    std::vector<int> digits(rows.size(), 0);
    MixedVector current(form.alpha, form.beta);
    for (;;) {
        fn(current);
        std::size_t k = 0;
        for (; k < rows.size(); ++k) {
            current += rows[k];
            const int radix = k < n4 ? 4 : 2;
            if (++digits[k] < radix) break;
            digits[k] = 0;
        }
        if (k == rows.size()) return;
    }
}

std::vector<MixedVector> enumerate_form(const ReducedForm& form, std::uint64_t cap)
{
    const std::size_t log2 = form.gamma() + 2 * form.delta();
    if (log2 >= 63 || (std::uint64_t{1} << log2) > cap)
        throw CapExceeded("enumeration of 2^" + std::to_string(log2) + " codewords exceeds the cap of " +
                          std::to_string(cap));
    std::vector<MixedVector> out;
    out.reserve(std::size_t{1} << log2);
    for_each_codeword(form, [&](const MixedVector& v) { out.push_back(v); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Z2Z4Code::Z2Z4Code(std::size_t alpha, std::size_t beta, MixedMatrix generators, std::uint64_t cap)
    : cap_(cap)
{
    if (alpha > kMaxPartLength || beta > kMaxPartLength)
        throw DimensionError("shape exceeds the 64-position limit per part");
    if (alpha + beta == 0) throw DimensionError("a code needs at least one coordinate");
    form_ = std::make_shared<const ReducedForm>(reduce_generators(alpha, beta, generators));
    generators_ = std::make_shared<const MixedMatrix>(std::move(generators));
    const std::size_t log2 = form_->gamma() + 2 * form_->delta();
    if (log2 < 63 && (std::uint64_t{1} << log2) <= cap)
        codewords_ = std::make_shared<const std::vector<MixedVector>>(enumerate_form(*form_, cap));
}

Z2Z4Code Z2Z4Code::from_parity_check(std::size_t alpha, std::size_t beta, const MixedMatrix& check_rows,
                                     std::uint64_t cap)
{
    return dual(Z2Z4Code(alpha, beta, check_rows, cap));
}

std::uint64_t Z2Z4Code::size() const
{
    if (log2_size() >= 63) throw DimensionError("code size 2^" + std::to_string(log2_size()) + " does not fit");
    return std::uint64_t{1} << log2_size();
}

const std::vector<MixedVector>& Z2Z4Code::codewords() const
{
    if (!codewords_)
        throw CapExceeded("code of size 2^" + std::to_string(log2_size()) + " is above the cap " +
                          std::to_string(cap_) + " and was not materialized");
    return *codewords_;
}

bool Z2Z4Code::contains(const MixedVector& v) const
{
    if (v.alpha() != alpha() || v.beta() != beta()) throw DimensionError("membership test with mismatched shape");
    const auto& f = *form_;
    MixedVector w = v;
    for (std::size_t k = 0; k < f.order4.size(); ++k)
        if (const int c = w.symbol(f.pivots4[k])) w = w - f.order4[k].times(c);
    for (std::size_t k = 0; k < f.order2.size(); ++k)
        if (has_even_part(w, f.pivots2[k])) w += f.order2[k];
    return w.is_zero();
}

std::vector<MixedVector> span(std::size_t alpha, std::size_t beta, std::span<const MixedVector> rows,
                              std::uint64_t cap)
{
    return enumerate_form(reduce_generators(alpha, beta, rows), cap);
}

std::vector<MixedVector> enumerate(const Z2Z4Code& code, std::uint64_t cap)
{
    if (code.materialized()) {
        if (code.size() > cap)
            throw CapExceeded("code of size " + std::to_string(code.size()) + " exceeds the cap " + std::to_string(cap));
        return code.codewords();
    }
    return enumerate_form(code.reduced(), cap);
}

CodeType compute_type(const Z2Z4Code& code)
{
    const auto& f = code.reduced();
    // (C_b)_X is spanned by the X-parts of the order-2 rows; doubled order-4
    // rows vanish on X.
    std::vector<std::uint64_t> x_rows;
    for (const auto& r : f.order2) x_rows.push_back(r.binary_plane());
    CodeType t{code.alpha(), code.beta(), f.gamma(), f.delta(), binary_rank(std::move(x_rows))};
    t.validate();
    return t;
}

std::size_t binary_rank(std::vector<std::uint64_t> rows)
{
    std::size_t rank = 0;
    for (int bit = 0; bit < 64; ++bit) {
        const auto mask = std::uint64_t{1} << bit;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [&](std::uint64_t r) { return r & mask; });
        if (it == rows.end()) continue;
        std::iter_swap(it, rows.begin() + static_cast<std::ptrdiff_t>(rank));
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

// --------------------------------------------------------------------- duals

MixedMatrix dual_generators(const ReducedForm& f)
{
    // Embed Z2 -> 2Z4 on the X coordinates. The reduced rows then form a Z4
    // matrix that, up to column order (P4 | P2 | R), reads
    //     [ I  A  B  ]
    //     [ 0  2I 2C ]
    // whose Z4 dual is spanned by [ -B^T - C^T A^T, C^T, I ] and [ 2A^T, 2I, 0 ].
    // Reducing the X coordinates of those rows mod 2 gives the mixed dual.
    const std::size_t alpha = f.alpha;
    const std::size_t beta = f.beta;
    const std::size_t n = alpha + beta;  // Z4 column c < alpha is X column c, else Y column c - alpha

    auto col_of = [&](const Pivot& p) { return p.quaternary ? alpha + p.position : p.position; };
    auto z4_entry = [&](const MixedVector& v, std::size_t c) {
        return c < alpha ? 2 * v.bit(c) : v.symbol(c - alpha);
    };

    std::vector<int> role(n, -1);  // -1 free, else index into P4 (0..k1) or k1 + index into P2
    const std::size_t k1 = f.order4.size();
    for (std::size_t i = 0; i < k1; ++i) role[alpha + f.pivots4[i]] = static_cast<int>(i);
    for (std::size_t m = 0; m < f.order2.size(); ++m) role[col_of(f.pivots2[m])] = static_cast<int>(k1 + m);

    // C[m][r] is half the (even) entry of order-2 row m at column r.
    auto c_entry = [&](std::size_t m, std::size_t r) { return z4_entry(f.order2[m], r) / 2; };

    std::vector<std::vector<int>> z4_rows;
    for (std::size_t r = 0; r < n; ++r) {
        if (role[r] != -1) continue;
        std::vector<int> h(n, 0);
        h[r] = 1;
        for (std::size_t m = 0; m < f.order2.size(); ++m) h[col_of(f.pivots2[m])] = c_entry(m, r);
        for (std::size_t i = 0; i < k1; ++i) {
            int value = -z4_entry(f.order4[i], r);
            for (std::size_t m = 0; m < f.order2.size(); ++m)
                value -= c_entry(m, r) * z4_entry(f.order4[i], col_of(f.pivots2[m]));
            h[alpha + f.pivots4[i]] = ((value % 4) + 4) % 4;
        }
        z4_rows.push_back(std::move(h));
    }
    for (std::size_t m = 0; m < f.order2.size(); ++m) {
        std::vector<int> h(n, 0);
        const std::size_t q = col_of(f.pivots2[m]);
        h[q] = 2;
        for (std::size_t i = 0; i < k1; ++i) h[alpha + f.pivots4[i]] = (2 * z4_entry(f.order4[i], q)) % 4;
        z4_rows.push_back(std::move(h));
    }

    MixedMatrix out;
    out.reserve(z4_rows.size());
    for (const auto& h : z4_rows) {
        MixedVector v(alpha, beta);
        for (std::size_t c = 0; c < alpha; ++c) v.set_bit(c, h[c] & 1);
        for (std::size_t j = 0; j < beta; ++j) v.set_symbol(j, h[alpha + j]);
        out.push_back(v);
    }
    return out;
}

Z2Z4Code dual(const Z2Z4Code& code, DualMethod method)
{
    const std::size_t alpha = code.alpha();
    const std::size_t beta = code.beta();
    const std::size_t length = alpha + 2 * beta;
    if (method == DualMethod::Automatic)
        method = length <= kBruteForceDualLength ? DualMethod::BruteForce : DualMethod::Kernel;

    if (method == DualMethod::Kernel) return Z2Z4Code(alpha, beta, dual_generators(code.reduced()), code.cap());

    if (length > 30) throw DimensionError("brute-force dual over 2^" + std::to_string(length) + " vectors refused");
    const MixedMatrix checks = code.reduced().rows();
    MixedMatrix orthogonal;
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto v = MixedVector::from_index(alpha, beta, idx);
        if (contains_by_syndrome(checks, v)) orthogonal.push_back(v);
    }
    // Keep the stored generator list small.
    MixedMatrix generators = reduce_generators(alpha, beta, orthogonal).rows();
    return Z2Z4Code(alpha, beta, std::move(generators), code.cap());
}

bool contains_by_syndrome(std::span<const MixedVector> checks, const MixedVector& v)
{
    return std::all_of(checks.begin(), checks.end(), [&](const MixedVector& h) { return inner_product(v, h) == 0; });
}

// ------------------------------------------------------------- projections

Z2Z4Code puncture_x(const Z2Z4Code& code)
{
    MixedMatrix rows;
    for (const auto& r : code.reduced().rows())
        rows.push_back(MixedVector::from_planes(code.alpha(), 0, r.binary_plane(), 0, 0));
    if (code.alpha() == 0) throw DimensionError("X-projection of a code with alpha = 0 is empty");
    return Z2Z4Code(code.alpha(), 0, std::move(rows), code.cap());
}

Z2Z4Code puncture_y(const Z2Z4Code& code)
{
    MixedMatrix rows;
    for (const auto& r : code.reduced().rows())
        rows.push_back(MixedVector::from_planes(0, code.beta(), 0, r.low_plane(), r.high_plane()));
    if (code.beta() == 0) throw DimensionError("Y-projection of a code with beta = 0 is empty");
    return Z2Z4Code(0, code.beta(), std::move(rows), code.cap());
}

Z2Z4Code subcode_b(const Z2Z4Code& code)
{
    MixedMatrix rows = code.reduced().order2;
    for (const auto& r : code.reduced().order4) rows.push_back(r.doubled());
    return Z2Z4Code(code.alpha(), code.beta(), std::move(rows), code.cap());
}

// ------------------------------------------------------------------ weights

WeightDistribution weight_distribution(const Z2Z4Code& code, std::uint64_t cap)
{
    WeightDistribution dist;
    const auto log2 = code.log2_size();
    if (log2 >= 63 || (std::uint64_t{1} << log2) > cap)
        throw CapExceeded("weight distribution of 2^" + std::to_string(log2) + " codewords exceeds the cap");
    if (code.materialized()) {
        for (const auto& v : code.codewords()) ++dist[v.weight()];
    } else {
        for_each_codeword(code.reduced(), [&](const MixedVector& v) { ++dist[v.weight()]; });
    }
    return dist;
}

std::size_t min_distance(const Z2Z4Code& code, std::uint64_t cap)
{
    const auto dist = weight_distribution(code, cap);
    for (const auto& [w, count] : dist)
        if (w > 0 && count > 0) return w;
    return 0;
}

std::vector<BinaryVector> gray_image(const Z2Z4Code& code, std::uint64_t cap)
{
    std::vector<BinaryVector> out;
    for (const auto& v : enumerate(code, cap)) out.push_back(v.gray_map());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace z2z4

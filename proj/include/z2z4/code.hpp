#pragma once

// Z2Z4-additive codes: additive subgroups of Z2^alpha x Z4^beta given by a
// list of generators.
//
// Every code carries a reduced generator form produced by mixed-alphabet
// elimination: delta rows of order 4, each with a unit pivot on a quaternary
// column, followed by gamma rows of order 2 in reduced echelon form. The code
// is isomorphic to Z2^gamma x Z4^delta and each codeword has a unique
// coefficient vector over the reduced rows, which is what membership and
// enumeration rely on.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z2z4/mixed_vector.hpp"

namespace z2z4 {

using MixedMatrix = std::vector<MixedVector>;

/// Default enumeration cap (number of codewords).
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

/// Largest binary length alpha + 2 beta for which duals are computed by
/// scanning the whole ambient space.
inline constexpr std::size_t kBruteForceDualLength = 20;

struct CodeType {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::size_t kappa = 0;

    /// Throws InvalidType when the quintuple cannot describe any code.
    void validate() const;
    std::string to_string() const;

    bool operator==(const CodeType&) const = default;
};

/// Type of the dual code: (alpha, beta; alpha+gamma-2kappa, beta-gamma-delta+kappa; alpha-kappa).
CodeType dual_type(const CodeType& t);

using WeightDistribution = std::map<std::size_t, std::uint64_t>;

/// A pivot position of the reduced form.
struct Pivot {
    bool quaternary = true;
    std::size_t position = 0;

    bool operator==(const Pivot&) const = default;
};

struct ReducedForm {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    MixedMatrix order4;  ///< symbol 1 at its pivot, 0 at every other order-4 pivot
    MixedMatrix order2;  ///< nonzero at its pivot, zero at every other pivot
    std::vector<std::size_t> pivots4;
    std::vector<Pivot> pivots2;

    std::size_t gamma() const noexcept { return order2.size(); }
    std::size_t delta() const noexcept { return order4.size(); }
    /// Order-4 rows followed by order-2 rows.
    MixedMatrix rows() const;
};

/// Mixed elimination. Quaternary columns are scanned first for odd pivots,
/// then all columns (quaternary before binary) for order-2 pivots; ties go to
/// the lowest column, then the lowest row.
ReducedForm reduce_generators(std::size_t alpha, std::size_t beta, std::span<const MixedVector> rows);

class Z2Z4Code {
public:
    /// The span of `generators`. Materializes the sorted codeword list when
    /// the code has at most `cap` codewords.
    Z2Z4Code(std::size_t alpha, std::size_t beta, MixedMatrix generators, std::uint64_t cap = kDefaultCap);

    /// The code whose parity check matrix is `check_rows`, i.e. the dual of their span.
    static Z2Z4Code from_parity_check(std::size_t alpha, std::size_t beta, const MixedMatrix& check_rows,
                                      std::uint64_t cap = kDefaultCap);

    std::size_t alpha() const noexcept { return form_->alpha; }
    std::size_t beta() const noexcept { return form_->beta; }
    std::uint64_t cap() const noexcept { return cap_; }
    /// Binary length alpha + 2 beta of the Gray image.
    std::size_t length_bits() const noexcept { return alpha() + 2 * beta(); }

    const MixedMatrix& generators() const noexcept { return *generators_; }
    const ReducedForm& reduced() const noexcept { return *form_; }

    std::size_t gamma() const noexcept { return form_->gamma(); }
    std::size_t delta() const noexcept { return form_->delta(); }
    /// log2 |C| = gamma + 2 delta.
    std::size_t log2_size() const noexcept { return gamma() + 2 * delta(); }
    /// |C|; throws DimensionError when it does not fit in 63 bits.
    std::uint64_t size() const;

    bool materialized() const noexcept { return codewords_ != nullptr; }
    /// Sorted codewords; throws CapExceeded when the code was not materialized.
    const std::vector<MixedVector>& codewords() const;

    /// Exact membership by reduction against the reduced form.
    bool contains(const MixedVector& v) const;

    MixedVector zero() const { return MixedVector(alpha(), beta()); }

private:
    std::shared_ptr<const MixedMatrix> generators_;
    std::shared_ptr<const ReducedForm> form_;
    std::shared_ptr<const std::vector<MixedVector>> codewords_;
    std::uint64_t cap_;
};

/// Sorted span of the rows; throws CapExceeded when 2^(gamma+2delta) > cap.
std::vector<MixedVector> span(std::size_t alpha, std::size_t beta, std::span<const MixedVector> rows,
                              std::uint64_t cap = kDefaultCap);

/// Codewords of `code`, sorted; enumerates on demand for codes that were not
/// materialized. Throws CapExceeded above `cap`.
std::vector<MixedVector> enumerate(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

CodeType compute_type(const Z2Z4Code& code);

enum class DualMethod { Automatic, BruteForce, Kernel };

/// Dual code. Automatic scans the ambient space when alpha + 2 beta <= 20 and
/// solves the orthogonality system otherwise.
Z2Z4Code dual(const Z2Z4Code& code, DualMethod method = DualMethod::Automatic);

/// Generators of the dual obtained from the reduced form, without any scan.
MixedMatrix dual_generators(const ReducedForm& form);

/// Binary code (beta = 0) of the X-projection.
Z2Z4Code puncture_x(const Z2Z4Code& code);
/// Quaternary code (alpha = 0) of the Y-projection.
Z2Z4Code puncture_y(const Z2Z4Code& code);
/// Subcode of codewords of order at most two.
Z2Z4Code subcode_b(const Z2Z4Code& code);

/// True iff v is orthogonal to every row of `checks`.
bool contains_by_syndrome(std::span<const MixedVector> checks, const MixedVector& v);

WeightDistribution weight_distribution(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

/// Minimum weight over nonzero codewords (the code is distance invariant
/// under the Gray isometry, so this is the minimum distance). Returns 0 for
/// the zero code.
std::size_t min_distance(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

/// Sorted Gray images of all codewords.
std::vector<BinaryVector> gray_image(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

/// Binary rank of a set of binary vectors of length <= 64 given as words.
std::size_t binary_rank(std::vector<std::uint64_t> rows);

}  // namespace z2z4

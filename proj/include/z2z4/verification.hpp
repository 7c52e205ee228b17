#pragma once

// Decision procedures (cyclicity, perfectness, Gray-image linearity,
// arrangement search) and instance-level audits of the structural claims
// about cyclic 1-perfect codes and their duals.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "z2z4/code.hpp"

namespace z2z4 {

/// A coordinate rearrangement: position p of the rearranged vector takes
/// position pi_x[p] (resp. pi_y[p]) of the original. 0-indexed.
struct Arrangement {
    std::vector<std::size_t> pi_x;
    std::vector<std::size_t> pi_y;

    static Arrangement identity(std::size_t alpha, std::size_t beta);
    /// Throws DimensionError unless both are bijections of the right size.
    void validate(std::size_t alpha, std::size_t beta) const;

    MixedVector apply(const MixedVector& v) const { return v.permuted(pi_x, pi_y); }
    Z2Z4Code apply(const Z2Z4Code& code) const;

    bool operator==(const Arrangement&) const = default;
};

// ------------------------------------------------------------ decisions

/// sigma(g) in C for every reduced generator g.
bool is_cyclic(const Z2Z4Code& code);
/// sigma(c) in C for every codeword; requires an enumerable code.
bool is_cyclic_exhaustive(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

enum class SearchStatus { Found, None, Inconclusive };

struct ArrangementSearch {
    SearchStatus status = SearchStatus::None;
    std::optional<Arrangement> witness;
    std::uint64_t examined = 0;  ///< up to and including the witness, in lexicographic order
    std::uint64_t total = 0;     ///< alpha! beta!, saturated at UINT64_MAX
};

inline constexpr std::uint64_t kDefaultArrangementBudget = 1'000'000;

/// Lexicographic search over (pi_x, pi_y) for a rearrangement under which the
/// code is cyclic. The space is split into `workers` contiguous ranges; the
/// result is the lexicographically first witness whatever the worker count.
/// Inconclusive when the space exceeds `budget` and no witness was found in
/// the first `budget` arrangements.
ArrangementSearch exists_cyclic_arrangement(const Z2Z4Code& code, std::uint64_t budget = kDefaultArrangementBudget,
                                            unsigned workers = 1);

/// Every ambient vector within distance 1 of exactly one codeword.
/// Requires alpha + 2 beta <= 24.
bool is_perfect_sphere(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

/// Column criterion on a check matrix whose rows generate the dual: no zero
/// column, no two columns associated by a unit (equal or negatives), every
/// Y column of order four, and 1 + alpha + 2 beta equal to the size of the
/// syndrome group.
bool is_perfect_columns(std::size_t alpha, std::size_t beta, const MixedMatrix& check_rows);
/// Column criterion using the dual of `code` as check matrix.
bool is_perfect_columns(const Z2Z4Code& code);

/// Sphere method when alpha + 2 beta <= 24, column method otherwise.
bool is_perfect(const Z2Z4Code& code);

/// Evidence that a code is not 1-perfect: either {zero, c} for a nonzero
/// codeword c of weight at most two, or {v} for a vector at distance two or
/// more from every codeword. Codes of binary length above 20 are sampled
/// `samples` times; empty when nothing was found.
std::vector<MixedVector> perfectness_witness(const Z2Z4Code& code, std::uint64_t samples = 1u << 16);

struct GrayLinearity {
    bool linear = true;
    /// Two Gray codewords whose sum lies outside the Gray image.
    std::optional<std::pair<BinaryVector, BinaryVector>> witness;
};

/// Closure of the Gray image under addition, decided on pairs of reduced
/// generators: Phi(u) + Phi(v) = Phi(u + v + 2 (u * v)).
GrayLinearity gray_image_linear(const Z2Z4Code& code);
/// Same decision by full pairwise closure of the enumerated Gray image.
GrayLinearity gray_image_linear_exhaustive(const Z2Z4Code& code, std::uint64_t cap = kDefaultCap);

// -------------------------------------------------------------- audits

enum class Verdict { Holds, Fails, NotApplicable, Inconclusive };

std::string to_string(Verdict v);

using Witness = std::variant<std::monostate, std::vector<MixedVector>, std::vector<BinaryVector>, Arrangement>;

struct AuditReport {
    std::string claim;
    std::map<std::string, std::int64_t> params;
    Verdict verdict = Verdict::Holds;
    Witness witness;
    std::map<std::string, std::int64_t> counters;
    std::string summary;
    double elapsed_ms = 0.0;

    /// Serialized report. Field order and names are stable; positions in
    /// arrangement witnesses are 1-indexed.
    std::string to_json(bool include_timing = true, int indent = 2) const;
};

/// Exit status used by the command line front end.
int exit_code(Verdict v);

/// Divisibility of beta by alpha for C(r, t) coincides with t in {r, 2r}.
AuditReport verify_prop_3_1(int r, int t);

/// Parity of |supp(x) & co-supp(y)| over all pairs of S_r.
AuditReport verify_lemma_3_7(int r);

/// Structure of a cyclic D(r): X-projection, order-2 subcode, replication
/// of S_r in the Y part, symbol counts and block congruence of order-4
/// codewords. `d` must be enumerable.
AuditReport verify_structure_d(const Z2Z4Code& d, int r);

/// Nonnegative solutions (lambda, mu) of 2^(r-1) lambda + 2^(r-2) mu =
/// 2^(r-2) (2^(r-1) - 1) and the parity of mu.
AuditReport audit_theorem_3_11(int r);

/// Runs the arrangement search and records it as an audit ("holds" means no
/// cyclic arrangement exists).
AuditReport audit_no_cyclic_arrangement(const std::string& claim, const Z2Z4Code& code,
                                        std::map<std::string, std::int64_t> params = {},
                                        std::uint64_t budget = kDefaultArrangementBudget, unsigned workers = 1);

struct UniquenessResult {
    AuditReport report;
    /// Sorted codeword lists of the distinct surviving cyclic duals.
    std::vector<std::vector<MixedVector>> survivors;
};

/// Exhaustive search of sigma-closed constant-weight-8 codes of type
/// (3, 6; 0, 2; 0), spanned by the closure of one or two weight-8 vectors,
/// followed by a perfectness check of each survivor's dual.
UniquenessResult uniqueness_search(unsigned workers = 1);

}  // namespace z2z4

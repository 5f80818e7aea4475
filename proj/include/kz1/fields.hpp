#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "kz1/dvf.hpp"
#include "kz1/integer.hpp"
#include "kz1/simplex.hpp"

namespace kz1 {

// ---------------------------------------------------------------------------
// Leading-bit arithmetic

/// Largest power of 2 not exceeding b. Throws PreconditionError for b < 1.
Integer lpow(const Integer& b);
/// b - lpow(b).
Integer ltrim(const Integer& b);
/// Empty for a power of 2, otherwise {ltrim(b)} together with ltrims(ltrim(b)).
std::set<Integer> ltrims(const Integer& b);

// ---------------------------------------------------------------------------
// Classifiers

/// The Eilenberg-MacLane field on all of K(Z,1): [] and [1] critical,
/// [a1|...] with a1 != 1 a source.
Classification v_eml_classify(const BarSimplex& s);
/// Bubblesort field on K(Z,1); simplices with all entries positive are critical.
Classification v_bs_classify(const BarSimplex& s);
/// Bit-chipping field on K(N,1). Throws PreconditionError on a non-positive entry.
Classification v_bc_classify(const BarSimplex& s);
/// Bubblesort on simplices with a negative entry, bit-chipping on the rest.
Classification composed_classify(const BarSimplex& s);

class EmlField final : public VectorField {
public:
    Classification classify(const BarSimplex& s) const override { return v_eml_classify(s); }
    std::string_view name() const override { return "eml"; }
};

class BubblesortField final : public VectorField {
public:
    Classification classify(const BarSimplex& s) const override { return v_bs_classify(s); }
    std::string_view name() const override { return "bs"; }
};

class BitChippingField final : public VectorField {
public:
    Classification classify(const BarSimplex& s) const override { return v_bc_classify(s); }
    std::string_view name() const override { return "bc"; }
};

class ComposedField final : public VectorField {
public:
    Classification classify(const BarSimplex& s) const override { return composed_classify(s); }
    std::string_view name() const override { return "composed"; }
};

/// Critical simplices of the bit-chipping and composed fields: [] in
/// dimension 0, [1] in dimension 1, nothing above.
std::vector<BarSimplex> composed_critical_basis(std::size_t dim);

// ---------------------------------------------------------------------------
// Anatomy of a positive simplex (indices are 1-based, as in a1|a2|...)

struct Anatomy {
    std::size_t p = 0;  ///< length of the nondecreasing dyadic part
    std::size_t q = 0;  ///< length of the dyadic part
    std::optional<std::size_t> peak;
    std::optional<std::size_t> breakpoint;
    std::optional<Integer> breakpoint_value;
    bool fully_dyadic = false;
    std::vector<Integer> right_part;
};

Anatomy anatomy(const BarSimplex& s);

// ---------------------------------------------------------------------------
// Bubblesort helpers on raw (unnormalized) b-tuples

/// Leading index l (first descent b_l > b_{l+1}), v = b_l, u = b_{l+1}, and the
/// last index m of the maximal {u,v}-run starting at l (0-based positions).
struct LasInfo {
    std::size_t leading_index = 0;
    Integer v;
    Integer u;
    std::size_t end = 0;

    std::size_t length() const { return end - leading_index + 1; }
    bool ends_with_u() const { return (end - leading_index) % 2 == 1; }
};

/// nullopt when the tuple is strictly increasing.
std::optional<LasInfo> leading_alternating_segment(std::span<const Integer> tuple);

enum class BsMoveKind { switching, appending, other };

std::string_view to_string(BsMoveKind kind);

struct BsDoubleMove {
    BsMoveKind kind;
    std::size_t face_index;      ///< index deleted from V_bs(source)
    std::vector<Integer> tuple;  ///< resulting source, same representative
};

/// Sources reachable from a bubblesort source in one up-move and one
/// down-move. Throws PreconditionError unless `source` is a V_bs source.
std::vector<BsDoubleMove> bs_double_moves(std::span<const Integer> source);

/// Block decomposition [beta_0, ..., beta_l, gamma] of a source reachable from
/// `seed` by double moves: beta_i starts with the seed's b_i and alternates with
/// the seed's u. `even_block` is the index j of the unique even-length block.
struct BlockStructure {
    std::vector<std::size_t> lengths;
    std::size_t even_block = 0;
    std::size_t gamma_length = 0;
};

/// nullopt when `current` does not have the block structure relative to `seed`
/// (leading 1s, one even block of length >= 2, odd blocks after it, some block
/// of length >= 3, gamma not starting with u).
std::optional<BlockStructure> bs_block_structure(std::span<const Integer> seed, std::span<const Integer> current);

/// The lower-bound seed [2, 3, ..., b+1, 1, b+1, 1, ..., b+1, 1] of 3b+1 components.
std::vector<Integer> bs_lower_bound_seed(std::size_t blocks);

// ---------------------------------------------------------------------------
// Bit-chipping double moves

struct BcDoubleMove {
    std::size_t face_index;
    BarSimplex face;       ///< d_j tau, a source
    BarSimplex successor;  ///< V_bc(d_j tau)
};

/// All tau' = V_bc(d_j tau) with d_j tau a source other than V^{-1}(tau).
/// Throws PreconditionError unless tau is a V_bc target.
std::vector<BcDoubleMove> double_move_successors_bc(const BarSimplex& tau);

/// Sum of entries.
Integer component_sum(const BarSimplex& s);

/// Breakpoint-value sets B_1, ..., B_j for a positive target `ttau`, with
/// 2^i ranging over 0 <= i <= n-1. Returns B_j (1-based).
std::set<Integer> b_sets(const BarSimplex& ttau, std::size_t j, std::size_t n);

/// All of B_1..B_k at once; element [j-1] is B_j.
std::vector<std::set<Integer>> all_b_sets(const BarSimplex& ttau, std::size_t n);

}  // namespace kz1

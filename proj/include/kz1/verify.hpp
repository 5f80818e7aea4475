#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kz1/dvf.hpp"
#include "kz1/sampling.hpp"
#include "kz1/simplex.hpp"

namespace kz1 {

// ---------------------------------------------------------------------------
// Scaling benchmark

struct BenchRecord {
    std::string field;
    BarSimplex seed;
    std::size_t n_bits = 0;  ///< size(seed)
    std::size_t nodes = 0;
    std::size_t total_size = 0;
    std::size_t edges = 0;
    double wall_ms = 0;
    std::string status;  ///< "ok" or "budget"; counts are lower bounds for "budget"
};

/// Runs reach from every seed in order. A seed that exceeds the budget is
/// recorded with status "budget" and the budget as its node count.
/// AdmissibilityViolation propagates: a cycle is a finding, not a data point.
std::vector<BenchRecord> scaling_bench(const SimplicialSet& space, const VectorField& field,
                                       const std::vector<BarSimplex>& seeds, std::size_t node_budget);

/// Header field,seed,n_bits,nodes,total_size,edges,wall_ms,status, one row per record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Seeds from a pattern: "pow2:A..B" gives [2^A], ..., [2^B]; "lower-bound:A..B"
/// gives the bubblesort lower-bound seeds with A..B blocks (in bar notation).
/// Anything else is read as a file with one simplex per line ('#' comments).
std::vector<BarSimplex> seeds_from_pattern(const std::string& pattern);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    std::size_t points = 0;
};

/// Least-squares line through (log x, log y). Needs two distinct positive x.
SlopeFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys);

// ---------------------------------------------------------------------------
// Admissibility

struct AdmissibilityViolationRecord {
    BarSimplex seed;
    std::string kind;  ///< "cycle" or "budget"
    std::string message;
};

struct AdmissibilityReport {
    std::size_t simplices = 0;
    std::size_t max_reach = 0;
    std::vector<AdmissibilityViolationRecord> violations;
    bool clean() const { return violations.empty(); }
};

/// Every nondegenerate simplex with dim <= dim_max and 1 <= |a_i| <= entry_bound
/// (positive entries only when positive_only).
std::vector<BarSimplex> enumerate_simplices(std::size_t dim_max, long entry_bound, bool positive_only);

/// Runs reach with cycle detection from every enumerated simplex.
AdmissibilityReport exhaustive_admissibility(const SimplicialSet& space, const VectorField& field,
                                             std::size_t dim_max, long entry_bound, bool positive_only = false,
                                             std::size_t node_budget = 1'000'000);

/// The composed field with [3] -> [1|2] and [2] -> [2|1] forced, which closes the
/// cycle [3] -> [1|2] -> [2] -> [2|1] -> [3]. For mutation tests.
class BrokenField final : public VectorField {
public:
    Classification classify(const BarSimplex& s) const override;
    std::string_view name() const override { return "broken"; }
};

/// Named field: eml, bs, bc, composed. Throws PreconditionError otherwise.
std::shared_ptr<const VectorField> make_field(const std::string& name);

// ---------------------------------------------------------------------------
// Bubblesort structure

struct GuidedSearchResult {
    bool found = false;
    std::size_t expanded = 0;
    std::vector<std::vector<Integer>> path;  ///< seed to target when found
};

/// Best-first search over bubblesort double moves from `seed`, ordered by edit
/// distance to `target`, expanding at most `node_budget` sources.
GuidedSearchResult guided_bs_search(const std::vector<Integer>& seed, const std::vector<Integer>& target,
                                    std::size_t node_budget);

struct BlockCheck {
    std::size_t sources = 0;
    std::size_t moves = 0;
    std::size_t violations = 0;
    std::string first_violation;
};

/// Walks every double move reachable from `seed` (at most `node_budget`
/// sources) and checks that each source has the block structure and that every
/// move lowers j or keeps j and raises k_j.
BlockCheck check_block_structure(const std::vector<Integer>& seed, std::size_t node_budget);

/// Source b-tuple [b0 < ... < bl = v, u, v, ..., u, gamma] with an even LAS of
/// length >= 4 and small entries.
std::vector<Integer> random_long_las_source(Rng& rng);

// ---------------------------------------------------------------------------
// Bit-chipping reach

/// Targets reachable from a V_bc target by double moves, ttau included.
std::vector<BarSimplex> target_reach(const BarSimplex& ttau, std::size_t node_budget);

struct KeyLemmaCheck {
    std::size_t targets = 0;
    std::size_t raw = 0;
    std::size_t processed = 0;
    std::size_t fully_dyadic = 0;
    std::size_t violations = 0;
    std::string first_violation;
};

/// Right part stability for every target in treach(ttau), and for processed
/// ones breakpoint value in B_{q+1} and below the dyadic maximum.
KeyLemmaCheck check_key_lemma(const BarSimplex& ttau, std::size_t node_budget);

}  // namespace kz1

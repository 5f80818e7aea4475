#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kz1/chain.hpp"
#include "kz1/reduction.hpp"
#include "kz1/simplex.hpp"
#include "kz1/simplicial.hpp"

namespace kz1 {

enum class CellKind { source, target, critical };

/// Which concrete field produced a classification.
enum class Layer { eml, bs, bc };

std::string_view to_string(CellKind kind);
std::string_view to_string(Layer layer);

/// Result of classifying a nondegenerate simplex. For a source, `partner` is
/// V(s); for a target it is V^{-1}(s). `regular_index` is the unique i with
/// source = d_i target.
struct Classification {
    CellKind kind = CellKind::critical;
    Layer layer = Layer::bc;
    BarSimplex partner;
    std::size_t regular_index = 0;

    bool is_source() const { return kind == CellKind::source; }
    bool is_target() const { return kind == CellKind::target; }
    bool is_critical() const { return kind == CellKind::critical; }
};

/// A discrete vector field given by its classification oracle.
class VectorField {
public:
    virtual ~VectorField() = default;

    /// Throws PreconditionError on degenerate input or a simplex outside the
    /// field's domain.
    virtual Classification classify(const BarSimplex& s) const = 0;
    virtual std::string_view name() const = 0;
};

/// The unique index i with lower = d_i upper in K(Z,1). Throws std::logic_error
/// when lower is not a regular face of upper.
std::size_t regular_face_index(const BarSimplex& lower, const BarSimplex& upper);

/// How Phi^infinity and h are evaluated. `iterate` applies Phi until a fixed
/// point; `dag` propagates coefficients once along the V-boundary graph in
/// topological order. Both give the same chains on admissible fields.
enum class Evaluation { dag, iterate };

struct EvaluationOptions {
    Evaluation strategy = Evaluation::dag;
    std::size_t max_iterations = 1'000'000;  ///< cap on Phi applications (iterate)
    std::size_t max_nodes = 10'000'000;      ///< cap on graph nodes (dag)
};

/// Defaults, with the iteration cap overridden by KZ1_ITERATION_CAP if set.
EvaluationOptions options_from_env();

/// V_#(1*s) = (-1)^(i+1) V(s) for a source s with regular index i, 0 otherwise.
Chain v_sharp(const VectorField& field, const Chain& c);

/// Phi = 1 + V_# d + d V_#.
Chain phi(const SimplicialSet& space, const VectorField& field, const Chain& c);

struct Stabilization {
    Chain fixed_point;      ///< Phi^infinity(c)
    Chain homotopy;         ///< -sum_N V_#(Phi^N(c))
    std::size_t iterations = 0;
};

/// Iterates Phi until a fixed point, accumulating the homotopy on the way.
/// Throws IterationCapExceeded after `options.max_iterations` applications.
Stabilization stabilize_iterative(const SimplicialSet& space, const VectorField& field, const Chain& c,
                                  const EvaluationOptions& options = {});

/// Same result from one pass over the graph. A source s with V(s) = t and
/// sign e resolves to e * sum_{j != i} (-1)^j d_j t, targets contribute
/// nothing, and a critical x contributes x + sum_N T^N(V_# d x) where T moves a
/// target t to sum_{j != i} (-1)^j V_#(d_j t). `iterations` is the number of
/// graph nodes visited. Throws AdmissibilityViolation on a cycle and
/// BudgetExceeded past `options.max_nodes`.
Stabilization stabilize_dag(const SimplicialSet& space, const VectorField& field, const Chain& c,
                            const EvaluationOptions& options = {});

/// Dispatches on `options.strategy`.
Stabilization stabilize(const SimplicialSet& space, const VectorField& field, const Chain& c,
                        const EvaluationOptions& options = {});

Chain phi_infinity(const SimplicialSet& space, const VectorField& field, const Chain& c,
                   const EvaluationOptions& options = {});
Chain homotopy_h(const SimplicialSet& space, const VectorField& field, const Chain& c,
                 const EvaluationOptions& options = {});

/// Keeps only the terms on critical simplices.
Chain restrict_to_critical(const VectorField& field, const Chain& c);

using BasisFn = std::function<std::vector<BarSimplex>(std::size_t)>;

/// Free complex on the critical simplices, d_crit = j d Phi^infinity. `basis`
/// lists the critical simplices per dimension; it is empty (null) when the
/// critical set is infinite, which still allows evaluating chains.
struct CriticalComplex {
    std::string name;
    BasisFn basis;
    ChainMap differential;
};

struct FieldReduction {
    Reduction reduction;
    CriticalComplex critical;
};

/// f = j Phi^inf, g = i Phi^inf, h = stabilized -V_#(1 + Phi + ... + Phi^N).
FieldReduction reduction_from_field(std::shared_ptr<const SimplicialSet> space,
                                    std::shared_ptr<const VectorField> field, BasisFn critical_basis,
                                    EvaluationOptions options = {}, std::string source_name = {},
                                    std::string critical_name = {});

enum class MoveKind { up, down };

std::string_view to_string(MoveKind kind);

/// One edge of the V-boundary graph: `up` goes s -> V(s) (index is the regular
/// face index), `down` goes t -> d_index t.
struct Move {
    MoveKind kind;
    std::size_t index;
    BarSimplex simplex;
};

/// Outgoing edges of s. A face that occurs under several indices yields one
/// edge per index.
std::vector<Move> vpartial_successors(const SimplicialSet& space, const VectorField& field, const BarSimplex& s);

struct ReachOptions {
    std::size_t node_budget = 10'000'000;
    bool collect_simplices = true;
};

struct ReachResult {
    std::vector<BarSimplex> simplices;  ///< discovery order; empty unless collected
    std::size_t nodes = 0;
    std::size_t total_size = 0;
    std::size_t edges = 0;
};

/// Depth-first closure over the V-boundary graph from `seed`, with cycle
/// detection on the current path. Throws AdmissibilityViolation on a cycle and
/// BudgetExceeded when more than `node_budget` nodes are discovered.
ReachResult reach(const SimplicialSet& space, const VectorField& field, const BarSimplex& seed,
                  const ReachOptions& options = {});

struct TraceStep {
    std::size_t depth;
    Move move;
};

/// Edges in the order the depth-first traversal examines them, at most
/// `max_steps` of them.
std::vector<TraceStep> trace(const SimplicialSet& space, const VectorField& field, const BarSimplex& seed,
                             std::size_t max_steps);

}  // namespace kz1

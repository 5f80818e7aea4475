#include "kz1/dvf.hpp"

#include <cstdint>
#include <deque>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "kz1/errors.hpp"

namespace kz1 {

std::string_view to_string(CellKind kind) {
    switch (kind) {
        case CellKind::source: return "source";
        case CellKind::target: return "target";
        case CellKind::critical: return "critical";
    }
    return "?";
}

std::string_view to_string(Layer layer) {
    switch (layer) {
        case Layer::eml: return "eml";
        case Layer::bs: return "bs";
        case Layer::bc: return "bc";
    }
    return "?";
}

std::string_view to_string(MoveKind kind) { return kind == MoveKind::up ? "V" : "face"; }

namespace {

// face(i, upper) == lower, without building the face.
bool is_face(std::size_t i, const BarSimplex& upper, const BarSimplex& lower) {
    const std::size_t k = upper.dim();
    if (lower.dim() + 1 != k) {
        return false;
    }
    for (std::size_t t = 0; t < lower.dim(); ++t) {
        // Position t of d_i: entry t+1 before the merge point for i = 0,
        // entries up to i-2 unchanged, the merged pair at i-1, shifted after.
        if (i == 0) {
            if (lower[t] != upper[t + 1]) {
                return false;
            }
        } else if (t + 1 < i || i == k) {
            if (lower[t] != upper[t]) {
                return false;
            }
        } else if (t + 1 == i) {
            if (lower[t] != upper[t] + upper[t + 1]) {
                return false;
            }
        } else if (lower[t] != upper[t + 1]) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::size_t regular_face_index(const BarSimplex& lower, const BarSimplex& upper) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i <= upper.dim(); ++i) {
        if (is_face(i, upper, lower)) {
            if (found) {
                throw std::logic_error(format_bar(lower) + " is a multiple face of " + format_bar(upper));
            }
            found = i;
        }
    }
    if (!found) {
        throw std::logic_error(format_bar(lower) + " is not a face of " + format_bar(upper));
    }
    return *found;
}

EvaluationOptions options_from_env() {
    EvaluationOptions options;
    if (const char* env = std::getenv("KZ1_ITERATION_CAP")) {
        try {
            options.max_iterations = std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("KZ1_ITERATION_CAP is not a number: ") + env);
        }
    }
    return options;
}

namespace {

// (-1)^(i+1)
Integer sharp_sign(std::size_t regular_index) { return regular_index % 2 == 0 ? Integer(-1) : Integer(1); }


}  // namespace

Chain v_sharp(const VectorField& field, const Chain& c) {
    Chain out(c.dim() + 1);
    for (const auto& [s, coeff] : c.terms()) {
        const Classification cls = field.classify(s);
        if (cls.is_source()) {
            out.add_term(cls.partner, sharp_sign(cls.regular_index) * coeff);
        }
    }
    return out;
}

Chain phi(const SimplicialSet& space, const VectorField& field, const Chain& c) {
    if (c.dim() < 0) {
        return c;  // C_{-1} is zero
    }
    Chain out = c;
    out += v_sharp(field, differential(space, c));
    out += differential(space, v_sharp(field, c));
    return out;
}

Stabilization stabilize_iterative(const SimplicialSet& space, const VectorField& field, const Chain& c,
                                  const EvaluationOptions& options) {
    Stabilization st{c, Chain(c.dim() + 1), 0};
    while (true) {
        const Chain up = v_sharp(field, st.fixed_point);
        Chain next = st.fixed_point;
        next += v_sharp(field, differential(space, st.fixed_point));
        next += differential(space, up);
        if (next == st.fixed_point) {
            // A fixed chain lives on targets and criticals, so `up` is zero here.
            return st;
        }
        if (st.iterations >= options.max_iterations) {
            throw IterationCapExceeded("Phi did not stabilize within " + std::to_string(options.max_iterations) +
                                       " iterations");
        }
        st.homotopy -= up;
        st.fixed_point = std::move(next);
        ++st.iterations;
    }
}

namespace {

// Every simplex met during one evaluation gets a dense id and is classified once.
class SimplexTable {
public:
    SimplexTable(const VectorField& field, std::size_t max_nodes) : field_(field), max_nodes_(max_nodes) {}

    std::uint32_t id(const BarSimplex& s) {
        const auto [it, inserted] = ids_.try_emplace(s, static_cast<std::uint32_t>(simplices_.size()));
        if (inserted) {
            if (simplices_.size() >= max_nodes_) {
                throw BudgetExceeded("Phi-infinity evaluation met more than " + std::to_string(max_nodes_) +
                                     " simplices");
            }
            simplices_.push_back(&it->first);
            classes_.push_back(field_.classify(s));
        }
        return it->second;
    }

    const BarSimplex& simplex(std::uint32_t i) const { return *simplices_[i]; }
    const Classification& cls(std::uint32_t i) const { return classes_[i]; }
    std::size_t size() const { return simplices_.size(); }

private:
    const VectorField& field_;
    std::size_t max_nodes_;
    std::unordered_map<BarSimplex, std::uint32_t, BarSimplexHash> ids_;
    std::vector<const BarSimplex*> simplices_;
    std::deque<Classification> classes_;  // stable references
};

struct Edge {
    std::uint32_t to;
    bool negative;
};

// Sums seed coefficients over all signed paths of a finite DAG given by
// `successors`; returns the accumulated coefficient per reached id.
template <class Successors>
std::vector<std::pair<std::uint32_t, Integer>> propagate(SimplexTable& table,
                                                         const std::vector<std::pair<std::uint32_t, Integer>>& seeds,
                                                         Successors&& successors, std::size_t& visited) {
    enum Mark : unsigned char { white, grey, black };
    std::vector<unsigned char> mark;
    std::vector<std::vector<Edge>> edges;
    std::vector<std::uint32_t> postorder;
    auto grow = [&] {
        if (mark.size() < table.size()) {
            mark.resize(table.size(), white);
            edges.resize(table.size());
        }
    };

    struct Frame {
        std::uint32_t node;
        std::size_t next;
    };
    std::vector<Frame> stack;
    auto open = [&](std::uint32_t v) {
        ++visited;
        std::vector<Edge> out = successors(v);
        grow();
        edges[v] = std::move(out);
        mark[v] = grey;
        stack.push_back(Frame{v, 0});
    };

    grow();
    for (const auto& [seed, coeff] : seeds) {
        if (mark[seed] != white) {
            continue;
        }
        open(seed);
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == edges[top.node].size()) {
                mark[top.node] = black;
                postorder.push_back(top.node);
                stack.pop_back();
                continue;
            }
            const std::uint32_t next = edges[top.node][top.next++].to;
            grow();
            if (mark[next] == white) {
                open(next);
            } else if (mark[next] == grey) {
                throw AdmissibilityViolation("directed cycle through " + format_bar(table.simplex(next)));
            }
        }
    }

    std::vector<Integer> acc(table.size());
    for (const auto& [seed, coeff] : seeds) {
        acc[seed] += coeff;
    }
    std::vector<std::pair<std::uint32_t, Integer>> out;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
        const Integer& a = acc[*it];
        if (a == 0) {
            continue;
        }
        for (const Edge& e : edges[*it]) {
            if (e.negative) {
                acc[e.to] -= a;
            } else {
                acc[e.to] += a;
            }
        }
        out.emplace_back(*it, a);
    }
    return out;
}

}  // namespace

Stabilization stabilize_dag(const SimplicialSet& space, const VectorField& field, const Chain& c,
                            const EvaluationOptions& options) {
    Stabilization st{Chain(c.dim()), Chain(c.dim() + 1), 0};
    SimplexTable table(field, options.max_nodes);

    // A source s with V(s) = t and sign e = (-1)^(i+1) resolves to
    // e * sum_{j != i} (-1)^j d_j t; targets drop out, criticals are sinks.
    auto source_step = [&](std::uint32_t v) {
        std::vector<Edge> edges;
        const Classification& cls = table.cls(v);
        if (!cls.is_source()) {
            return edges;
        }
        const BarSimplex& t = cls.partner;
        const bool eps_negative = cls.regular_index % 2 == 0;
        for (std::size_t j = 0; j <= space.dim(t); ++j) {
            if (j == cls.regular_index) {
                continue;
            }
            const BarSimplex f = space.face(j, t);
            if (space.is_degenerate(f)) {
                continue;
            }
            const std::uint32_t w = table.id(f);
            if (!table.cls(w).is_target()) {
                edges.push_back(Edge{w, eps_negative != (j % 2 == 1)});
            }
        }
        return edges;
    };
    // T(t) = sum_{j != i} (-1)^j V_#(d_j t), a chain of targets.
    auto target_step = [&](std::uint32_t v) {
        std::vector<Edge> edges;
        const BarSimplex& t = table.simplex(v);
        const std::size_t regular = table.cls(v).regular_index;
        for (std::size_t j = 0; j <= space.dim(t); ++j) {
            if (j == regular) {
                continue;
            }
            const BarSimplex f = space.face(j, t);
            if (space.is_degenerate(f)) {
                continue;
            }
            const Classification& fc = table.cls(table.id(f));
            if (fc.is_source()) {
                const bool negative = (j % 2 == 1) != (fc.regular_index % 2 == 0);
                edges.push_back(Edge{table.id(fc.partner), negative});
            }
        }
        return edges;
    };

    std::vector<std::pair<std::uint32_t, Integer>> seeds;
    for (const auto& [s, coeff] : c.terms()) {
        const std::uint32_t v = table.id(s);
        if (!table.cls(v).is_target()) {
            seeds.emplace_back(v, coeff);
        }
    }
    const auto resolved = propagate(table, seeds, source_step, st.iterations);

    std::vector<std::pair<std::uint32_t, Integer>> target_seeds;
    std::vector<std::pair<BarSimplex, Integer>> homotopy;
    std::vector<std::pair<BarSimplex, Integer>> fixed;
    for (const auto& [v, coeff] : resolved) {
        const Classification& cls = table.cls(v);
        if (cls.is_source()) {
            homotopy.emplace_back(cls.partner, cls.regular_index % 2 == 0 ? coeff : Integer(-coeff));
        } else {
            const BarSimplex& x = table.simplex(v);
            fixed.emplace_back(x, coeff);
            for (const auto& [t, tc] : v_sharp(field, differential(space, Chain::basis(x, coeff))).terms()) {
                target_seeds.emplace_back(table.id(t), tc);
            }
        }
    }
    if (!target_seeds.empty()) {
        for (const auto& [v, coeff] : propagate(table, target_seeds, target_step, st.iterations)) {
            fixed.emplace_back(table.simplex(v), coeff);
        }
    }
    st.homotopy = Chain::from_terms(c.dim() + 1, std::move(homotopy));
    st.fixed_point = Chain::from_terms(c.dim(), std::move(fixed));
    if (st.iterations > options.max_nodes) {
        throw BudgetExceeded("Phi-infinity evaluation visited more than " + std::to_string(options.max_nodes) +
                             " nodes");
    }
    return st;
}

Stabilization stabilize(const SimplicialSet& space, const VectorField& field, const Chain& c,
                        const EvaluationOptions& options) {
    return options.strategy == Evaluation::dag ? stabilize_dag(space, field, c, options)
                                               : stabilize_iterative(space, field, c, options);
}

Chain phi_infinity(const SimplicialSet& space, const VectorField& field, const Chain& c,
                   const EvaluationOptions& options) {
    return stabilize(space, field, c, options).fixed_point;
}

Chain homotopy_h(const SimplicialSet& space, const VectorField& field, const Chain& c,
                 const EvaluationOptions& options) {
    return stabilize(space, field, c, options).homotopy;
}

Chain restrict_to_critical(const VectorField& field, const Chain& c) {
    Chain out(c.dim());
    for (const auto& [s, coeff] : c.terms()) {
        if (field.classify(s).is_critical()) {
            out.add_term(s, coeff);
        }
    }
    return out;
}

namespace {

// f, g, h and d_crit of one reduction usually see the same chain several times
// in a row (the reduction identities evaluate h(c) and f(c) repeatedly), so
// the last few stabilizations are kept.
class StabilizationMemo {
public:
    std::shared_ptr<const Stabilization> get(const SimplicialSet& space, const VectorField& field, const Chain& c,
                                             const EvaluationOptions& options) {
        {
            std::lock_guard lock(mutex_);
            for (const auto& [key, value] : entries_) {
                if (key.size() == c.size() && key == c) {
                    return value;
                }
            }
        }
        auto result = std::make_shared<const Stabilization>(stabilize(space, field, c, options));
        std::lock_guard lock(mutex_);
        entries_.emplace_back(c, result);
        if (entries_.size() > capacity) {
            entries_.pop_front();
        }
        return result;
    }

private:
    static constexpr std::size_t capacity = 4;
    std::mutex mutex_;
    std::deque<std::pair<Chain, std::shared_ptr<const Stabilization>>> entries_;
};

}  // namespace

FieldReduction reduction_from_field(std::shared_ptr<const SimplicialSet> space,
                                    std::shared_ptr<const VectorField> field, BasisFn critical_basis,
                                    EvaluationOptions options, std::string source_name, std::string critical_name) {
    if (source_name.empty()) {
        source_name = std::string(space->name());
    }
    if (critical_name.empty()) {
        critical_name = "crit(" + std::string(field->name()) + ")";
    }
    auto memo = std::make_shared<StabilizationMemo>();
    auto f = [space, field, options, memo](const Chain& c) {
        return restrict_to_critical(*field, memo->get(*space, *field, c, options)->fixed_point);
    };
    auto g = [space, field, options, memo](const Chain& c) {
        return memo->get(*space, *field, c, options)->fixed_point;
    };
    auto h = [space, field, options, memo](const Chain& c) {
        return memo->get(*space, *field, c, options)->homotopy;
    };
    auto d_crit = [space, field, options, memo](const Chain& c) {
        return restrict_to_critical(*field, differential(*space, memo->get(*space, *field, c, options)->fixed_point));
    };
    return FieldReduction{
        Reduction{source_name, critical_name, f, g, h},
        CriticalComplex{critical_name, std::move(critical_basis), d_crit},
    };
}

std::vector<Move> vpartial_successors(const SimplicialSet& space, const VectorField& field, const BarSimplex& s) {
    if (space.is_degenerate(s)) {
        throw PreconditionError("degenerate simplex " + format_bar(s));
    }
    const Classification cls = field.classify(s);
    std::vector<Move> out;
    if (cls.is_source()) {
        out.push_back(Move{MoveKind::up, cls.regular_index, cls.partner});
    } else if (cls.is_target()) {
        const std::size_t k = space.dim(s);
        for (std::size_t i = 0; i <= k; ++i) {
            if (i == cls.regular_index) {
                continue;
            }
            BarSimplex f = space.face(i, s);
            if (space.is_degenerate(f) || field.classify(f).is_target()) {
                continue;
            }
            out.push_back(Move{MoveKind::down, i, std::move(f)});
        }
    }
    return out;
}

namespace {

enum class Color : unsigned char { grey, black };

struct Frame {
    BarSimplex node;
    std::vector<Move> successors;
    std::size_t next = 0;
};

// Depth-first walk; `visit(depth, move)` is called for every edge examined and
// returns false to stop early.
template <class Visit>
void walk(const SimplicialSet& space, const VectorField& field, const BarSimplex& seed, std::size_t node_budget,
          ReachResult& result, bool collect, Visit&& visit) {
    std::unordered_map<BarSimplex, Color, BarSimplexHash> color;
    std::vector<Frame> stack;

    auto discover = [&](const BarSimplex& s) {
        if (result.nodes >= node_budget) {
            throw BudgetExceeded("reach from " + format_bar(seed) + " exceeded the budget of " +
                                 std::to_string(node_budget) + " nodes");
        }
        color.emplace(s, Color::grey);
        ++result.nodes;
        result.total_size += size(s);
        if (collect) {
            result.simplices.push_back(s);
        }
        stack.push_back(Frame{s, vpartial_successors(space, field, s)});
    };

    discover(seed);
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.successors.size()) {
            color[top.node] = Color::black;
            stack.pop_back();
            continue;
        }
        Move move = top.successors[top.next++];
        ++result.edges;
        if (!visit(stack.size() - 1, move)) {
            return;
        }
        const auto it = color.find(move.simplex);
        if (it == color.end()) {
            discover(move.simplex);
        } else if (it->second == Color::grey) {
            throw AdmissibilityViolation("directed cycle through " + format_bar(move.simplex) + " (field " +
                                         std::string(field.name()) + ", seed " + format_bar(seed) + ")");
        }
    }
}

}  // namespace

ReachResult reach(const SimplicialSet& space, const VectorField& field, const BarSimplex& seed,
                  const ReachOptions& options) {
    ReachResult result;
    walk(space, field, seed, options.node_budget, result, options.collect_simplices,
         [](std::size_t, const Move&) { return true; });
    return result;
}

std::vector<TraceStep> trace(const SimplicialSet& space, const VectorField& field, const BarSimplex& seed,
                             std::size_t max_steps) {
    std::vector<TraceStep> steps;
    if (max_steps == 0) {
        return steps;
    }
    ReachResult scratch;
    walk(space, field, seed, std::numeric_limits<std::size_t>::max(), scratch, false,
         [&](std::size_t depth, const Move& move) {
             steps.push_back(TraceStep{depth, move});
             return steps.size() < max_steps;
         });
    return steps;
}

}  // namespace kz1

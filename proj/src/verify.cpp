#include "kz1/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "kz1/errors.hpp"
#include "kz1/fields.hpp"

namespace kz1 {

std::vector<BenchRecord> scaling_bench(const SimplicialSet& space, const VectorField& field,
                                       const std::vector<BarSimplex>& seeds, std::size_t node_budget) {
    std::vector<BenchRecord> out;
    ReachOptions options;
    options.node_budget = node_budget;
    options.collect_simplices = false;
    for (const auto& seed : seeds) {
        BenchRecord rec;
        rec.field = std::string(field.name());
        rec.seed = seed;
        rec.n_bits = size(seed);
        const auto start = std::chrono::steady_clock::now();
        try {
            const ReachResult r = reach(space, field, seed, options);
            rec.nodes = r.nodes;
            rec.total_size = r.total_size;
            rec.edges = r.edges;
            rec.status = "ok";
        } catch (const BudgetExceeded&) {
            rec.nodes = node_budget;
            rec.status = "budget";
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(rec));
    }
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "field,seed,n_bits,nodes,total_size,edges,wall_ms,status\n";
    for (const auto& r : records) {
        out << r.field << ',' << '"' << format_bar(r.seed) << '"' << ',' << r.n_bits << ',' << r.nodes << ','
            << r.total_size << ',' << r.edges << ',' << r.wall_ms << ',' << r.status << '\n';
    }
}

namespace {

bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        return false;
    }
    try {
        lo = std::stoul(text.substr(0, dots));
        hi = std::stoul(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw ParseError("bad seed range: " + text);
    }
    return lo <= hi;
}

}  // namespace

std::vector<BarSimplex> seeds_from_pattern(const std::string& pattern) {
    std::vector<BarSimplex> seeds;
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (pattern.rfind("pow2:", 0) == 0) {
        if (!parse_range(pattern.substr(5), lo, hi)) {
            throw ParseError("expected pow2:A..B, got " + pattern);
        }
        for (std::size_t j = lo; j <= hi; ++j) {
            seeds.push_back(BarSimplex{Integer(1) << j});
        }
        return seeds;
    }
    if (pattern.rfind("lower-bound:", 0) == 0) {
        if (!parse_range(pattern.substr(12), lo, hi) || lo == 0) {
            throw ParseError("expected lower-bound:A..B with A >= 1, got " + pattern);
        }
        for (std::size_t b = lo; b <= hi; ++b) {
            seeds.push_back(from_btuple(BTuple(bs_lower_bound_seed(b))));
        }
        return seeds;
    }
    std::ifstream in(pattern);
    if (!in) {
        throw ParseError("cannot read seed file " + pattern);
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        seeds.push_back(parse_simplex(line));
    }
    return seeds;
}

SlopeFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw PreconditionError("slope fit needs at least two paired points");
    }
    const std::size_t n = xs.size();
    double sx = 0, sy = 0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (xs[i] <= 0 || ys[i] <= 0) {
            throw PreconditionError("slope fit needs positive values");
        }
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx == 0) {
        throw PreconditionError("slope fit needs two distinct x values");
    }
    SlopeFit fit;
    fit.points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

// ---------------------------------------------------------------------------

std::vector<BarSimplex> enumerate_simplices(std::size_t dim_max, long entry_bound, bool positive_only) {
    std::vector<long> values;
    for (long v = positive_only ? 1 : -entry_bound; v <= entry_bound; ++v) {
        if (v != 0) {
            values.push_back(v);
        }
    }
    std::vector<BarSimplex> out{BarSimplex{}};
    std::vector<BarSimplex> layer{BarSimplex{}};
    for (std::size_t d = 1; d <= dim_max; ++d) {
        std::vector<BarSimplex> next;
        for (const auto& s : layer) {
            for (long v : values) {
                BarSimplex::Storage e(s.entries().begin(), s.entries().end());
                e.emplace_back(v);
                next.emplace_back(std::move(e));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

AdmissibilityReport exhaustive_admissibility(const SimplicialSet& space, const VectorField& field,
                                             std::size_t dim_max, long entry_bound, bool positive_only,
                                             std::size_t node_budget) {
    AdmissibilityReport report;
    ReachOptions options;
    options.node_budget = node_budget;
    options.collect_simplices = false;
    for (const auto& s : enumerate_simplices(dim_max, entry_bound, positive_only)) {
        ++report.simplices;
        try {
            report.max_reach = std::max(report.max_reach, reach(space, field, s, options).nodes);
        } catch (const AdmissibilityViolation& e) {
            report.violations.push_back({s, "cycle", e.what()});
        } catch (const BudgetExceeded& e) {
            report.violations.push_back({s, "budget", e.what()});
        }
    }
    return report;
}

Classification BrokenField::classify(const BarSimplex& s) const {
    static const BarSimplex three{3};
    static const BarSimplex two{2};
    static const BarSimplex one_two{1, 2};
    static const BarSimplex two_one{2, 1};
    Classification c;
    c.layer = Layer::bc;
    if (s == three || s == two) {
        c.kind = CellKind::source;
        c.partner = s == three ? one_two : two_one;
        c.regular_index = s == three ? 1 : 2;
        return c;
    }
    if (s == one_two || s == two_one) {
        c.kind = CellKind::target;
        c.partner = s == one_two ? three : two;
        c.regular_index = s == one_two ? 1 : 2;
        return c;
    }
    return composed_classify(s);
}

std::shared_ptr<const VectorField> make_field(const std::string& name) {
    if (name == "eml") {
        return std::make_shared<EmlField>();
    }
    if (name == "bs") {
        return std::make_shared<BubblesortField>();
    }
    if (name == "bc") {
        return std::make_shared<BitChippingField>();
    }
    if (name == "composed") {
        return std::make_shared<ComposedField>();
    }
    throw PreconditionError("unknown field '" + name + "' (expected eml, bs, bc, composed)");
}

// ---------------------------------------------------------------------------

namespace {

using Tuple = std::vector<Integer>;

std::size_t edit_distance(const Tuple& a, const Tuple& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

}  // namespace

GuidedSearchResult guided_bs_search(const Tuple& seed, const Tuple& target, std::size_t node_budget) {
    GuidedSearchResult result;
    std::map<Tuple, Tuple> parent;
    using Item = std::pair<std::size_t, std::size_t>;  // (distance, index into order)
    std::vector<Tuple> order{seed};
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    parent.emplace(seed, Tuple{});
    open.emplace(edit_distance(seed, target), 0);
    while (!open.empty() && result.expanded < node_budget) {
        const Tuple current = order[open.top().second];
        open.pop();
        ++result.expanded;
        if (current == target) {
            result.found = true;
            for (Tuple t = current; !t.empty(); t = parent.at(t)) {
                result.path.push_back(t);
            }
            std::reverse(result.path.begin(), result.path.end());
            return result;
        }
        for (auto& move : bs_double_moves(current)) {
            if (parent.emplace(move.tuple, current).second) {
                open.emplace(edit_distance(move.tuple, target), order.size());
                order.push_back(std::move(move.tuple));
            }
        }
    }
    return result;
}

BlockCheck check_block_structure(const Tuple& seed, std::size_t node_budget) {
    BlockCheck check;
    auto fail = [&](const std::string& what) {
        if (check.violations++ == 0) {
            check.first_violation = what;
        }
    };
    std::set<Tuple> seen{seed};
    std::vector<Tuple> stack{seed};
    while (!stack.empty() && check.sources < node_budget) {
        const Tuple current = std::move(stack.back());
        stack.pop_back();
        ++check.sources;
        const auto here = bs_block_structure(seed, current);
        if (!here) {
            fail("no block structure at " + format_tuple(current));
            continue;
        }
        for (auto& move : bs_double_moves(current)) {
            ++check.moves;
            const auto there = bs_block_structure(seed, move.tuple);
            if (!there) {
                fail("no block structure at " + format_tuple(move.tuple) + " after " + format_tuple(current));
                continue;
            }
            const std::size_t j = here->even_block;
            const std::size_t j2 = there->even_block;
            if (!(j2 < j || (j2 == j && there->lengths[j] > here->lengths[j]))) {
                fail("(j, k_j) did not improve on " + format_tuple(current) + " -> " + format_tuple(move.tuple));
            }
            if (seen.insert(move.tuple).second) {
                stack.push_back(std::move(move.tuple));
            }
        }
    }
    return check;
}

Tuple random_long_las_source(Rng& rng) {
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const long u = pick(1, 4);
    const std::size_t l = static_cast<std::size_t>(pick(0, 4));
    // Increasing prefix b_0 < ... < b_l = v with v > u.
    Tuple t;
    long value = pick(1, 4);
    for (std::size_t i = 0; i <= l; ++i) {
        if (i == l && value <= u) {
            value = u + pick(1, 3);
        }
        t.emplace_back(value);
        value += pick(1, 3);
    }
    const Integer v = t.back();
    const std::size_t pairs = static_cast<std::size_t>(pick(2, 5));
    for (std::size_t i = 0; i < 2 * pairs - 1; ++i) {
        t.push_back(i % 2 == 0 ? Integer(u) : v);
    }
    // gamma: random entries, not continuing the alternation.
    const std::size_t tail = static_cast<std::size_t>(pick(0, 4));
    for (std::size_t i = 0; i < tail; ++i) {
        Integer x = pick(1, 9);
        while (i == 0 && (x == u || x == v)) {
            x = pick(1, 9);
        }
        t.push_back(x);
    }
    return t;
}

// ---------------------------------------------------------------------------

std::vector<BarSimplex> target_reach(const BarSimplex& ttau, std::size_t node_budget) {
    std::unordered_set<BarSimplex, BarSimplexHash> seen{ttau};
    std::vector<BarSimplex> order{ttau};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto& move : double_move_successors_bc(order[i])) {
            if (seen.insert(move.successor).second) {
                if (order.size() >= node_budget) {
                    throw BudgetExceeded("treach from " + format_bar(ttau) + " exceeded the budget of " +
                                         std::to_string(node_budget) + " targets");
                }
                order.push_back(std::move(move.successor));
            }
        }
    }
    return order;
}

KeyLemmaCheck check_key_lemma(const BarSimplex& ttau, std::size_t node_budget) {
    KeyLemmaCheck check;
    auto fail = [&](const std::string& what) {
        if (check.violations++ == 0) {
            check.first_violation = what;
        }
    };
    const auto b = all_b_sets(ttau, size(ttau));
    const auto seed = ttau.entries();
    for (const auto& tau : target_reach(ttau, node_budget)) {
        ++check.targets;
        const Anatomy an = anatomy(tau);
        if (an.fully_dyadic) {
            ++check.fully_dyadic;
            continue;
        }
        const std::size_t q = an.q;
        const auto a = tau.entries();
        if (!std::equal(a.begin() + static_cast<std::ptrdiff_t>(q) + 1, a.end(),
                        seed.begin() + static_cast<std::ptrdiff_t>(q) + 1)) {
            fail("right part of " + format_bar(tau) + " differs from " + format_bar(ttau));
        }
        const Integer& value = *an.breakpoint_value;
        if (value == seed[q]) {
            ++check.raw;
            continue;
        }
        ++check.processed;
        const Integer dyadic_max = q == 0 ? Integer(0) : *std::max_element(a.begin(), a.begin() + q);
        if (value >= dyadic_max) {
            fail("processed " + format_bar(tau) + " has breakpoint value not below its dyadic maximum");
        }
        if (!b[q].count(value)) {
            fail("processed " + format_bar(tau) + " has breakpoint value outside B_" + std::to_string(q + 1));
        }
    }
    return check;
}

}  // namespace kz1

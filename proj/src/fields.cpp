#include "kz1/fields.hpp"

#include <algorithm>

#include "kz1/errors.hpp"

namespace kz1 {

Integer lpow(const Integer& b) {
    if (b < 1) {
        throw PreconditionError("lpow needs a positive argument, got " + b.str());
    }
    Integer out = 1;
    out <<= static_cast<unsigned>(boost::multiprecision::msb(b));
    return out;
}

Integer ltrim(const Integer& b) { return b - lpow(b); }

std::set<Integer> ltrims(const Integer& b) {
    std::set<Integer> out;
    Integer current = b;
    while (!is_power_of_two(current)) {
        current = ltrim(current);
        out.insert(current);
    }
    return out;
}

namespace {

void require_nondegenerate(const BarSimplex& s) {
    if (s.is_degenerate()) {
        throw PreconditionError("degenerate simplex " + format_bar(s));
    }
}

Classification source(Layer layer, const BarSimplex& s, BarSimplex partner) {
    const std::size_t i = regular_face_index(s, partner);
    return Classification{CellKind::source, layer, std::move(partner), i};
}

Classification target(Layer layer, const BarSimplex& s, BarSimplex partner) {
    const std::size_t i = regular_face_index(partner, s);
    return Classification{CellKind::target, layer, std::move(partner), i};
}

Classification critical(Layer layer) { return Classification{CellKind::critical, layer, {}, 0}; }

BarSimplex::Storage entries_of(const BarSimplex& s) { return {s.entries().begin(), s.entries().end()}; }

bool is_one_simplex_one(const BarSimplex& s) { return s.dim() == 1 && s[0] == 1; }

}  // namespace

// ---------------------------------------------------------------------------

Classification v_eml_classify(const BarSimplex& s) {
    require_nondegenerate(s);
    if (s.empty() || is_one_simplex_one(s)) {
        return critical(Layer::eml);
    }
    auto e = entries_of(s);
    if (e[0] != 1) {
        if (e[0] > 1) {
            e[0] -= 1;
        }
        e.insert(e.begin(), Integer(1));
        return source(Layer::eml, s, BarSimplex(std::move(e)));
    }
    // [1|x|...] pairs with [x+1|...] when x > 0 and with [x|...] when x < 0.
    e.erase(e.begin());
    if (e[0] > 0) {
        e[0] += 1;
    }
    return target(Layer::eml, s, BarSimplex(std::move(e)));
}

// ---------------------------------------------------------------------------

std::optional<LasInfo> leading_alternating_segment(std::span<const Integer> tuple) {
    for (std::size_t l = 0; l + 1 < tuple.size(); ++l) {
        if (tuple[l] > tuple[l + 1]) {
            LasInfo info{l, tuple[l], tuple[l + 1], l + 1};
            while (info.end + 1 < tuple.size() && (tuple[info.end + 1] == info.u || tuple[info.end + 1] == info.v)) {
                ++info.end;
            }
            return info;
        }
    }
    return std::nullopt;
}

std::string_view to_string(BsMoveKind kind) {
    switch (kind) {
        case BsMoveKind::switching: return "switching";
        case BsMoveKind::appending: return "appending";
        case BsMoveKind::other: return "other";
    }
    return "?";
}

Classification v_bs_classify(const BarSimplex& s) {
    require_nondegenerate(s);
    const BTuple b = to_btuple(s);
    const auto las = leading_alternating_segment(b.entries());
    if (!las) {
        return critical(Layer::bs);
    }
    std::vector<Integer> t(b.entries().begin(), b.entries().end());
    if (las->ends_with_u()) {
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(las->end) + 1, las->v);
        return source(Layer::bs, s, from_btuple(BTuple(std::move(t))));
    }
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(las->end));
    return target(Layer::bs, s, from_btuple(BTuple(std::move(t))));
}

std::vector<BsDoubleMove> bs_double_moves(std::span<const Integer> source_tuple) {
    const auto las = leading_alternating_segment(source_tuple);
    if (!las || !las->ends_with_u()) {
        throw PreconditionError("not a bubblesort source: " + format_tuple(source_tuple));
    }
    std::vector<Integer> tau(source_tuple.begin(), source_tuple.end());
    tau.insert(tau.begin() + static_cast<std::ptrdiff_t>(las->end) + 1, las->v);

    std::vector<BsDoubleMove> out;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (i == las->end + 1) {
            continue;
        }
        std::vector<Integer> face(tau);
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        bool degenerate = false;
        for (std::size_t t = 1; t < face.size(); ++t) {
            degenerate = degenerate || face[t] == face[t - 1];
        }
        if (degenerate) {
            continue;
        }
        const auto face_las = leading_alternating_segment(face);
        if (!face_las || !face_las->ends_with_u()) {
            continue;
        }
        BsMoveKind kind = BsMoveKind::other;
        if (i == las->leading_index) {
            kind = BsMoveKind::switching;
        } else if (i == las->end + 2) {
            kind = BsMoveKind::appending;
        }
        out.push_back(BsDoubleMove{kind, i, std::move(face)});
    }
    return out;
}

std::optional<BlockStructure> bs_block_structure(std::span<const Integer> seed, std::span<const Integer> current) {
    const auto las = leading_alternating_segment(seed);
    if (!las) {
        return std::nullopt;
    }
    const std::size_t l = las->leading_index;
    const Integer& u = las->u;

    BlockStructure out;
    std::size_t pos = 0;
    for (std::size_t i = 0; i <= l; ++i) {
        if (pos >= current.size() || current[pos] != seed[i]) {
            return std::nullopt;
        }
        std::size_t len = 1;
        ++pos;
        // A block alternates b_i with u only when u < b_i.
        while (u < seed[i] && pos < current.size() && current[pos] == (len % 2 == 1 ? u : seed[i])) {
            ++len;
            ++pos;
        }
        out.lengths.push_back(len);
    }
    if (pos < current.size() && current[pos] == u) {
        return std::nullopt;
    }
    out.gamma_length = current.size() - pos;

    std::size_t j = 0;
    while (j < out.lengths.size() && out.lengths[j] == 1) {
        ++j;
    }
    if (j == out.lengths.size() || out.lengths[j] % 2 != 0) {
        return std::nullopt;
    }
    for (std::size_t i = j + 1; i < out.lengths.size(); ++i) {
        if (out.lengths[i] % 2 == 0) {
            return std::nullopt;
        }
    }
    if (std::none_of(out.lengths.begin(), out.lengths.end(), [](std::size_t k) { return k >= 3; })) {
        return std::nullopt;
    }
    out.even_block = j;
    return out;
}

std::vector<Integer> bs_lower_bound_seed(std::size_t blocks) {
    if (blocks == 0) {
        throw PreconditionError("the lower-bound family needs at least one block");
    }
    std::vector<Integer> out;
    for (std::size_t i = 2; i <= blocks + 1; ++i) {
        out.emplace_back(i);
    }
    const Integer top = static_cast<long>(blocks) + 1;
    for (std::size_t i = 0; i < 2 * blocks + 1; ++i) {
        out.push_back(i % 2 == 0 ? Integer(1) : top);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Shape {
    std::size_t p = 0;
    std::size_t q = 0;
    bool peak = false;
};

Shape shape_of(std::span<const Integer> a) {
    Shape sh;
    while (sh.q < a.size() && is_power_of_two(a[sh.q])) {
        ++sh.q;
    }
    sh.p = sh.q == 0 ? 0 : 1;
    while (sh.p < sh.q && a[sh.p - 1] <= a[sh.p]) {
        ++sh.p;
    }
    sh.peak = sh.p >= 1 && sh.p < a.size() && a[sh.p - 1] > a[sh.p];
    return sh;
}

}  // namespace

Anatomy anatomy(const BarSimplex& s) {
    if (!s.all_positive()) {
        throw PreconditionError("anatomy needs positive entries: " + format_bar(s));
    }
    const auto a = s.entries();
    const Shape sh = shape_of(a);
    Anatomy out;
    out.p = sh.p;
    out.q = sh.q;
    if (sh.peak) {
        out.peak = sh.p;
    }
    out.fully_dyadic = sh.q == a.size();
    if (!out.fully_dyadic) {
        out.breakpoint = sh.q + 1;
        out.breakpoint_value = a[sh.q];
        out.right_part.assign(a.begin() + static_cast<std::ptrdiff_t>(sh.q) + 1, a.end());
    }
    return out;
}

Classification v_bc_classify(const BarSimplex& s) {
    require_nondegenerate(s);
    if (!s.all_positive()) {
        throw PreconditionError("bit-chipping field is defined on positive simplices only: " + format_bar(s));
    }
    if (s.empty() || is_one_simplex_one(s)) {
        return critical(Layer::bc);
    }
    const Shape sh = shape_of(s.entries());
    const std::size_t k = s.dim();

    if (sh.peak) {
        // Merge the peak with the entry after it.
        return target(Layer::bc, s, face(sh.p, s));
    }
    if (sh.q < k) {
        auto e = entries_of(s);
        const Integer b = e[sh.q];
        e[sh.q] = lpow(b);
        e.insert(e.begin() + static_cast<std::ptrdiff_t>(sh.q) + 1, b - e[sh.q]);
        return source(Layer::bc, s, BarSimplex(std::move(e)));
    }
    // Fully dyadic and nondecreasing.
    if (k >= 2 && s[k - 2] == s[k - 1]) {
        return target(Layer::bc, s, face(k - 1, s));
    }
    auto e = entries_of(s);
    const Integer half = e[k - 1] >> 1;
    e[k - 1] = half;
    e.push_back(half);
    return source(Layer::bc, s, BarSimplex(std::move(e)));
}

Classification composed_classify(const BarSimplex& s) {
    require_nondegenerate(s);
    return s.has_negative() ? v_bs_classify(s) : v_bc_classify(s);
}

std::vector<BarSimplex> composed_critical_basis(std::size_t dim) {
    if (dim == 0) {
        return {BarSimplex{}};
    }
    if (dim == 1) {
        return {BarSimplex{1}};
    }
    return {};
}

// ---------------------------------------------------------------------------

std::vector<BcDoubleMove> double_move_successors_bc(const BarSimplex& tau) {
    const Classification cls = v_bc_classify(tau);
    if (!cls.is_target()) {
        throw PreconditionError(format_bar(tau) + " is not a bit-chipping target");
    }
    std::vector<BcDoubleMove> out;
    for (std::size_t j = 0; j <= tau.dim(); ++j) {
        if (j == cls.regular_index) {
            continue;
        }
        BarSimplex f = face(j, tau);
        const Classification fc = v_bc_classify(f);
        if (fc.is_source()) {
            out.push_back(BcDoubleMove{j, std::move(f), fc.partner});
        }
    }
    return out;
}

Integer component_sum(const BarSimplex& s) {
    Integer total = 0;
    for (const auto& a : s.entries()) {
        total += a;
    }
    return total;
}

std::vector<std::set<Integer>> all_b_sets(const BarSimplex& ttau, std::size_t n) {
    if (!ttau.all_positive()) {
        throw PreconditionError("B sets need a positive simplex: " + format_bar(ttau));
    }
    const auto a = ttau.entries();
    std::vector<std::set<Integer>> out;
    if (a.empty()) {
        return out;
    }
    out.push_back(ltrims(a[0]));
    for (std::size_t j = 1; j < a.size(); ++j) {
        std::set<Integer> seeds{a[j], a[j - 1] + a[j]};
        Integer pow2 = 1;
        for (std::size_t i = 0; i < n; ++i, pow2 <<= 1) {
            seeds.insert(pow2 + a[j]);
        }
        for (const auto& b : out.back()) {
            seeds.insert(b + a[j]);
        }
        std::set<Integer> next;
        for (const auto& x : seeds) {
            next.merge(ltrims(x));
        }
        out.push_back(std::move(next));
    }
    return out;
}

std::set<Integer> b_sets(const BarSimplex& ttau, std::size_t j, std::size_t n) {
    if (j == 0 || j > ttau.dim()) {
        throw PreconditionError("B_j is defined for 1 <= j <= dim");
    }
    auto all = all_b_sets(ttau, n);
    return std::move(all[j - 1]);
}

}  // namespace kz1

#include "kz1/catalogue.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "kz1/errors.hpp"
#include "kz1/fields.hpp"

namespace kz1 {

namespace {

using Entries = std::vector<Integer>;

// 1-based slice a_from..a_to (inclusive); empty when from > to.
Entries slice(const Entries& a, std::size_t from, std::size_t to) {
    if (from > to || from == 0) {
        return {};
    }
    return Entries(a.begin() + static_cast<std::ptrdiff_t>(from - 1), a.begin() + static_cast<std::ptrdiff_t>(to));
}

Entries cat(std::initializer_list<Entries> parts) {
    Entries out;
    for (const auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

bool nondecreasing(const Entries& xs) { return std::is_sorted(xs.begin(), xs.end()); }

// Nondecreasing run ending strictly below `bound` (vacuous on an empty run).
bool nondecreasing_below(const Entries& xs, const Integer& bound) {
    return nondecreasing(xs) && (xs.empty() || xs.back() < bound);
}

Entries split(const Integer& b) { return {lpow(b), ltrim(b)}; }

// Type (b) source: fully dyadic, nondecreasing, last step strict, last entry >= 2.
bool is_dyadic_split_source(const Entries& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](const Integer& x) { return is_power_of_two(x); })) {
        return false;
    }
    if (!nondecreasing(s) || s.back() < 2) {
        return false;
    }
    return s.size() == 1 || s[s.size() - 2] < s.back();
}

Entries halve_last(Entries s) {
    const Integer half = s.back() >> 1;
    s.back() = half;
    s.push_back(half);
    return s;
}

Entries swapped(Entries a, std::size_t j) {
    std::swap(a[j - 1], a[j]);
    return a;
}

struct Builder {
    std::vector<CataloguePrediction> out;

    void add(std::string label, Entries face, Entries successor) {
        out.push_back({std::move(label), BarSimplex(std::move(face)), BarSimplex(std::move(successor))});
    }

    // Cases stated as "tau' = V_bc(sigma)" contribute only when sigma is a source.
    void add_via_field(std::string label, Entries face) {
        BarSimplex sigma(std::move(face));
        const Classification c = v_bc_classify(sigma);
        if (c.is_source()) {
            out.push_back({std::move(label), std::move(sigma), c.partner});
        }
    }
};

void not_fully_dyadic(const Entries& a, const Anatomy& an, Builder& b) {
    const std::size_t k = a.size();
    const std::size_t p = *an.peak;
    const std::size_t q = an.q;
    const Integer& bp = *an.breakpoint_value;
    const Entries right = slice(a, q + 2, k);

    // (A) drop the first component and split b.
    if (p == 1 && nondecreasing_below(slice(a, 2, q), bp)) {
        b.add("A", cat({slice(a, 2, q), {bp}, right}), cat({slice(a, 2, q), split(bp), right}));
    }
    // (B) merge a_j, a_{j+1} inside the nondecreasing part; the split swaps them.
    for (std::size_t j = 1; j + 1 <= p; ++j) {
        if (a[j - 1] < a[j]) {
            b.add("B", cat({slice(a, 1, j - 1), {a[j - 1] + a[j]}, slice(a, j + 2, k)}), swapped(a, j));
        }
    }
    if (q >= p + 2) {
        const Integer& top = a[p - 1];
        const Integer& x = a[p];
        const Integer& y = a[p + 1];
        // (C) the two halves after the peak merge into a copy of the peak; b splits.
        if (x == y && x + y == top) {
            const Entries dyadic = cat({slice(a, 1, p), {top}, slice(a, p + 3, q)});
            if (nondecreasing_below(cat({{top}, slice(a, p + 3, q)}), bp)) {
                b.add("C", cat({dyadic, {bp}, right}), cat({dyadic, split(bp), right}));
            }
        }
        // (D) the two entries after the peak swap.
        if (y >= top && top > x) {
            b.add("D", cat({slice(a, 1, p), {x + y}, slice(a, p + 3, k)}), swapped(a, p + 1));
        }
    }
    if (q == p + 1) {
        const Integer merged = a[p] + bp;
        if (merged >= a[p - 1]) {
            const Entries face = cat({slice(a, 1, p), {merged}, right});
            if (!is_power_of_two(merged)) {
                b.add("E", face, cat({slice(a, 1, p), split(merged), right}));  // (E)
            } else {
                b.add_via_field("F", face);  // (F)
            }
        }
    }
    if (q == p && p + 2 <= k) {
        const Integer merged = bp + a[q + 1];
        if (merged >= a[p - 1]) {
            const Entries face = cat({slice(a, 1, p), {merged}, slice(a, q + 3, k)});
            if (!is_power_of_two(merged)) {
                b.add("G", face, cat({slice(a, 1, p), split(merged), slice(a, q + 3, k)}));  // (G)
            } else {
                b.add_via_field("H", face);  // (H)
            }
        }
    }
    // (I) drop b; the remaining dyadic part ends with a strict step and gets halved.
    if (q == p && p == k - 1 && (p == 1 || a[p - 2] < a[p - 1])) {
        const Entries face = slice(a, 1, p);
        b.add("I", face, halve_last(face));
    }
}

void fully_dyadic(const Entries& a, const Anatomy& an, Builder& b) {
    const std::size_t k = a.size();
    if (an.peak) {
        const std::size_t p = *an.peak;
        // (dA) drop the first entry and split the last.
        if (p == 1 && is_dyadic_split_source(slice(a, 2, k))) {
            b.add("dA", slice(a, 2, k), halve_last(slice(a, 2, k)));
        }
        // (dB) swap inside the nondecreasing part.
        for (std::size_t j = 1; j + 1 <= p; ++j) {
            if (a[j - 1] < a[j]) {
                b.add("dB", cat({slice(a, 1, j - 1), {a[j - 1] + a[j]}, slice(a, j + 2, k)}), swapped(a, j));
            }
        }
        if (p + 2 <= k) {
            const Integer& top = a[p - 1];
            const Integer& x = a[p];
            const Integer& y = a[p + 1];
            // (dC) merge the two halves after the peak and split the last entry.
            if (x == y && x + y == top) {
                const Entries face = cat({slice(a, 1, p), {top}, slice(a, p + 3, k)});
                if (is_dyadic_split_source(face)) {
                    b.add("dC", face, halve_last(face));
                }
            }
            // (dD) swap the two entries after the peak.
            if (y >= top && top > x) {
                b.add("dD", cat({slice(a, 1, p), {x + y}, slice(a, p + 3, k)}), swapped(a, p + 1));
            }
        }
        // A peak right before the last entry: dropping it leaves a dyadic
        // source whose last entry is split as in (I).
        if (p == k - 1 && is_dyadic_split_source(slice(a, 1, p))) {
            b.add("I", slice(a, 1, p), halve_last(slice(a, 1, p)));
        }
        return;
    }
    // Nondecreasing with a_{k-1} = a_k.
    for (std::size_t j = 1; j + 2 <= k; ++j) {
        if (a[j - 1] < a[j]) {
            b.add("dB", cat({slice(a, 1, j - 1), {a[j - 1] + a[j]}, slice(a, j + 2, k)}), swapped(a, j));
        }
    }
    // (dI) drop the last entry and split the previous one.
    if (is_dyadic_split_source(slice(a, 1, k - 1))) {
        b.add("dI", slice(a, 1, k - 1), halve_last(slice(a, 1, k - 1)));
    }
}

}  // namespace

std::vector<CataloguePrediction> catalogue_predictions(const BarSimplex& tau) {
    if (!v_bc_classify(tau).is_target()) {
        throw PreconditionError(format_bar(tau) + " is not a bit-chipping target");
    }
    const Entries a(tau.entries().begin(), tau.entries().end());
    const Anatomy an = anatomy(tau);
    Builder b;
    if (an.fully_dyadic) {
        fully_dyadic(a, an, b);
    } else {
        not_fully_dyadic(a, an, b);
    }
    return std::move(b.out);
}

std::string catalogue_mismatch(const BarSimplex& tau) {
    const auto predicted = catalogue_predictions(tau);
    const auto actual = double_move_successors_bc(tau);
    std::ostringstream msg;
    for (const auto& m : actual) {
        std::vector<std::string> labels;
        for (const auto& p : predicted) {
            if (p.face == m.face && p.successor == m.successor) {
                labels.push_back(p.label);
            }
        }
        if (labels.size() != 1) {
            msg << format_bar(tau) << ": successor " << format_bar(m.successor) << " via d" << m.face_index
                << " matches " << labels.size() << " cases";
            for (const auto& l : labels) {
                msg << " " << l;
            }
            return msg.str();
        }
    }
    for (const auto& p : predicted) {
        const bool seen = std::any_of(actual.begin(), actual.end(), [&](const BcDoubleMove& m) {
            return m.face == p.face && m.successor == p.successor;
        });
        if (!seen) {
            msg << format_bar(tau) << ": case " << p.label << " predicts " << format_bar(p.successor)
                << " which is not a successor";
            return msg.str();
        }
    }
    return {};
}

bool ranking_decreases(const BarSimplex& tau, const BarSimplex& tau_prime) {
    const Anatomy a = anatomy(tau);
    const Anatomy b = anatomy(tau_prime);
    const auto dyadic = [](const BarSimplex& s, std::size_t q) {
        return Entries(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(q));
    };
    if (a.fully_dyadic) {
        if (!b.fully_dyadic) {
            return false;
        }
        const Integer sa = component_sum(tau);
        const Integer sb = component_sum(tau_prime);
        return sb < sa || (sb == sa && dyadic(tau, a.q) < dyadic(tau_prime, b.q));
    }
    if (b.q != a.q) {
        return b.q > a.q;
    }
    if (*b.breakpoint_value != *a.breakpoint_value) {
        return *b.breakpoint_value < *a.breakpoint_value;
    }
    return dyadic(tau, a.q) < dyadic(tau_prime, b.q);
}

}  // namespace kz1

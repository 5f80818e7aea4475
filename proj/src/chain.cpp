#include "kz1/chain.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "kz1/errors.hpp"

namespace kz1 {

Chain::Chain(int dim) : dim_(dim) {
    if (dim < -1) {
        throw PreconditionError("chain dimension must be at least -1");
    }
}

Chain Chain::basis(const BarSimplex& s, const Integer& coeff) {
    Chain c(static_cast<int>(s.dim()));
    c.add_term(s, coeff);
    return c;
}

Chain Chain::from_terms(int dim, std::vector<std::pair<BarSimplex, Integer>> terms) {
    Chain c(dim);
    for (const auto& [s, coeff] : terms) {
        c.validate(s);
    }
    // Large inputs (a differential of a long chain) mostly cancel: merge in a
    // hash table so only the survivors get sorted.
    if (terms.size() > 64) {
        std::unordered_map<BarSimplex, Integer, BarSimplexHash> merged;
        merged.reserve(terms.size());
        for (auto& [s, coeff] : terms) {
            auto [it, inserted] = merged.try_emplace(std::move(s), std::move(coeff));
            if (!inserted) {
                it->second += coeff;
            }
        }
        terms.clear();
        for (auto& node : merged) {
            if (node.second != 0) {
                terms.emplace_back(node.first, std::move(node.second));
            }
        }
    }
    std::vector<std::size_t> order(terms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return terms[a].first < terms[b].first; });
    for (std::size_t i = 0; i < order.size();) {
        auto& [s, first] = terms[order[i]];
        Integer total = std::move(first);
        std::size_t j = i + 1;
        while (j < order.size() && terms[order[j]].first == s) {
            total += terms[order[j]].second;
            ++j;
        }
        if (total != 0) {
            c.terms_.emplace_hint(c.terms_.end(), std::move(s), std::move(total));
        }
        i = j;
    }
    return c;
}

void Chain::validate(const BarSimplex& s) const {
    if (static_cast<int>(s.dim()) != dim_) {
        throw PreconditionError("simplex " + format_bar(s) + " does not belong to a " + std::to_string(dim_) +
                                "-chain");
    }
    if (s.is_degenerate()) {
        throw PreconditionError("degenerate simplex " + format_bar(s) + " in chain");
    }
}

Integer Chain::coefficient(const BarSimplex& s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add_term(const BarSimplex& s, const Integer& coeff) {
    validate(s);
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void Chain::check_dim(const Chain& other) const {
    if (other.dim_ != dim_) {
        throw PreconditionError("dimension mismatch: " + std::to_string(dim_) + "-chain and " +
                                std::to_string(other.dim_) + "-chain");
    }
}

Chain& Chain::operator+=(const Chain& other) {
    check_dim(other);
    for (const auto& [s, coeff] : other.terms_) {
        add_term(s, coeff);
    }
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    check_dim(other);
    for (const auto& [s, coeff] : other.terms_) {
        add_term(s, -coeff);
    }
    return *this;
}

Chain& Chain::operator*=(const Integer& n) {
    if (n == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, coeff] : terms_) {
        coeff *= n;
    }
    return *this;
}

Chain chain_add(const Chain& a, const Chain& b) { return a + b; }

Chain chain_scale(const Integer& n, const Chain& c) { return n * c; }

std::string format_chain(const Chain& c) {
    if (c.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [s, coeff] : c.terms()) {
        if (first) {
            out += coeff < 0 ? "-" : "";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += Integer(abs(coeff)).str() + "*" + format_bar(s);
        first = false;
    }
    return out;
}

}  // namespace kz1

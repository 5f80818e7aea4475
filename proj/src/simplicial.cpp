#include "kz1/simplicial.hpp"

namespace kz1 {

Chain differential(const SimplicialSet& space, const Chain& c) {
    if (c.dim() <= 0) {
        return Chain(-1);  // C_{-1} = 0 and below
    }
    std::vector<std::pair<BarSimplex, Integer>> terms;
    terms.reserve(c.size() * static_cast<std::size_t>(c.dim() + 1));
    for (const auto& [s, coeff] : c.terms()) {
        const std::size_t k = space.dim(s);
        for (std::size_t i = 0; i <= k; ++i) {
            BarSimplex f = space.face(i, s);
            if (space.is_degenerate(f)) {
                continue;
            }
            terms.emplace_back(std::move(f), i % 2 == 0 ? coeff : Integer(-coeff));
        }
    }
    return Chain::from_terms(c.dim() - 1, std::move(terms));
}

}  // namespace kz1

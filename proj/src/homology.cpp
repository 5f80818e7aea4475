#include "kz1/homology.hpp"

#include <algorithm>

#include "kz1/errors.hpp"

namespace kz1 {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Position of the nonzero entry of least absolute value in the lower-right block from t.
bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < m.size(); ++r) {
        for (std::size_t c = t; c < m[r].size(); ++c) {
            if (m[r][c] != 0 && (!found || abs_value(m[r][c]) < best)) {
                best = abs_value(m[r][c]);
                pr = r;
                pc = c;
                found = true;
            }
        }
    }
    return found;
}

}  // namespace

std::vector<Integer> smith_diagonal(IntegerMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pr = 0;
        std::size_t pc = 0;
        if (!find_pivot(m, t, pr, pc)) {
            break;
        }
        std::swap(m[t], m[pr]);
        for (auto& row : m) {
            std::swap(row[t], row[pc]);
        }
        while (true) {
            bool clean = true;
            // Reduce column t and row t modulo the pivot; a nonzero remainder
            // becomes the new, smaller pivot.
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) {
                    continue;
                }
                const Integer q = m[r][t] / m[t][t];
                for (std::size_t c = t; c < cols; ++c) {
                    m[r][c] -= q * m[t][c];
                }
                if (m[r][t] != 0) {
                    std::swap(m[t], m[r]);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) {
                    continue;
                }
                const Integer q = m[t][c] / m[t][t];
                for (std::size_t r = t; r < rows; ++r) {
                    m[r][c] -= q * m[r][t];
                }
                if (m[t][c] != 0) {
                    for (auto& row : m) {
                        std::swap(row[t], row[c]);
                    }
                    clean = false;
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility: fold a row whose entry the pivot does not divide.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (m[r][c] % m[t][t] != 0) {
                        for (std::size_t cc = t; cc < cols; ++cc) {
                            m[t][cc] += m[r][cc];
                        }
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        diag.push_back(abs_value(m[t][t]));
    }
    return diag;
}

std::string format_group(const HomologyGroup& g) {
    std::string out;
    if (g.rank > 0) {
        out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
    }
    for (const auto& t : g.torsion) {
        out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
    }
    return out.empty() ? "0" : out;
}

HomologyResult homology_from_matrices(const std::vector<std::size_t>& ranks,
                                      const std::vector<IntegerMatrix>& differentials, std::size_t kmax) {
    if (ranks.size() < kmax + 2 || differentials.size() < kmax + 2) {
        throw PreconditionError("homology up to kmax needs ranks and differentials through kmax + 1");
    }
    // differentials[k] is d_k; differentials[0] is ignored (d_0 = 0).
    std::vector<std::vector<Integer>> diagonals(kmax + 2);
    for (std::size_t k = 1; k <= kmax + 1; ++k) {
        diagonals[k] = smith_diagonal(differentials[k]);
    }
    HomologyResult result;
    for (std::size_t k = 0; k <= kmax; ++k) {
        const std::size_t rank_dk = k == 0 ? 0 : diagonals[k].size();
        const auto& next = diagonals[k + 1];
        HomologyGroup g;
        g.rank = ranks[k] - rank_dk - next.size();
        for (const auto& d : next) {
            if (d != 1) {
                g.torsion.push_back(d);
            }
        }
        result.groups.push_back(std::move(g));
    }
    return result;
}

HomologyResult homology_of_critical(const CriticalComplex& cc, std::size_t kmax) {
    if (!cc.basis) {
        throw PreconditionError("critical complex " + cc.name + " has no finite basis");
    }
    std::vector<std::vector<BarSimplex>> bases;
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k <= kmax + 1; ++k) {
        bases.push_back(cc.basis(k));
        ranks.push_back(bases.back().size());
    }
    std::vector<IntegerMatrix> diffs(kmax + 2);
    for (std::size_t k = 1; k <= kmax + 1; ++k) {
        IntegerMatrix m(ranks[k - 1], std::vector<Integer>(ranks[k]));
        for (std::size_t col = 0; col < ranks[k]; ++col) {
            const Chain image = cc.differential(Chain::basis(bases[k][col]));
            for (std::size_t row = 0; row < ranks[k - 1]; ++row) {
                m[row][col] = image.coefficient(bases[k - 1][row]);
            }
        }
        diffs[k] = std::move(m);
    }
    return homology_from_matrices(ranks, diffs, kmax);
}

}  // namespace kz1

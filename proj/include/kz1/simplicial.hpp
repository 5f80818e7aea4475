#pragma once

#include <cstddef>
#include <string_view>

#include "kz1/chain.hpp"
#include "kz1/simplex.hpp"

namespace kz1 {

/// Locally effective simplicial set: face and degeneracy operators are
/// evaluated on demand; nothing global is stored.
class SimplicialSet {
public:
    virtual ~SimplicialSet() = default;

    virtual BarSimplex face(std::size_t i, const BarSimplex& s) const = 0;
    virtual BarSimplex degeneracy(std::size_t i, const BarSimplex& s) const = 0;
    virtual bool is_degenerate(const BarSimplex& s) const = 0;
    virtual std::size_t dim(const BarSimplex& s) const = 0;
    virtual std::string_view name() const = 0;
};

/// The standard simplicial model of K(Z,1) in bar notation.
class KZ1 final : public SimplicialSet {
public:
    BarSimplex face(std::size_t i, const BarSimplex& s) const override { return kz1::face(i, s); }
    BarSimplex degeneracy(std::size_t i, const BarSimplex& s) const override { return kz1::degeneracy(i, s); }
    bool is_degenerate(const BarSimplex& s) const override { return s.is_degenerate(); }
    std::size_t dim(const BarSimplex& s) const override { return s.dim(); }
    std::string_view name() const override { return "K(Z,1)"; }
};

/// Normalized differential: sum of (-1)^i d_i, degenerate faces dropped.
/// A 0-chain, or the zero chain of dimension -1, maps to the empty chain of
/// dimension -1.
Chain differential(const SimplicialSet& space, const Chain& c);

}  // namespace kz1

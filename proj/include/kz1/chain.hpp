#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kz1/integer.hpp"
#include "kz1/simplex.hpp"

namespace kz1 {

/// A finite formal sum of nondegenerate simplices of one dimension with exact
/// integer coefficients. Zero coefficients are never stored and terms iterate in
/// lexicographic order of the bar entries.
///
/// The dimension is a signed integer so that the differential of a 0-chain can
/// land in the zero group C_{-1}; only empty chains ever have dimension -1.
class Chain {
public:
    using Terms = std::map<BarSimplex, Integer>;

    explicit Chain(int dim = 0);

    /// coeff * s, validated.
    static Chain basis(const BarSimplex& s, const Integer& coeff = 1);

    /// Sum of the given terms (repeats allowed), validated. Sorts once instead
    /// of inserting term by term.
    static Chain from_terms(int dim, std::vector<std::pair<BarSimplex, Integer>> terms);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of s, 0 when absent.
    Integer coefficient(const BarSimplex& s) const;

    /// Adds coeff * s. Throws PreconditionError for a degenerate simplex or a
    /// dimension mismatch.
    void add_term(const BarSimplex& s, const Integer& coeff);

    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(const Integer& n);

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator-(Chain a) { return a *= Integer(-1); }
    friend Chain operator*(const Integer& n, Chain c) { return c *= n; }

    friend bool operator==(const Chain& a, const Chain& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

private:
    void check_dim(const Chain& other) const;
    void validate(const BarSimplex& s) const;

    int dim_;
    Terms terms_;
};

Chain chain_add(const Chain& a, const Chain& b);
Chain chain_scale(const Integer& n, const Chain& c);

/// Human-readable form, e.g. "2*[5] - 1*[3|1]"; "0" for the empty chain.
std::string format_chain(const Chain& c);

}  // namespace kz1

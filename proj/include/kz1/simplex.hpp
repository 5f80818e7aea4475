#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kz1/integer.hpp"

namespace kz1 {

/// A simplex of K(Z,1) in bar notation [a1|...|ak]. The empty sequence is the
/// unique 0-simplex; the simplex is degenerate iff some entry is zero.
class BarSimplex {
public:
    using Storage = std::vector<Integer>;

    BarSimplex() = default;
    explicit BarSimplex(Storage entries) : entries_(std::move(entries)) {}
    BarSimplex(std::initializer_list<Integer> entries) : entries_(entries) {}

    std::size_t dim() const { return entries_.size(); }
    std::span<const Integer> entries() const { return {entries_.data(), entries_.size()}; }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }
    bool empty() const { return entries_.empty(); }

    bool is_degenerate() const;
    bool all_positive() const;
    bool has_negative() const;

    friend bool operator==(const BarSimplex& a, const BarSimplex& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const BarSimplex& a, const BarSimplex& b);

private:
    Storage entries_;
};

struct BarSimplexHash {
    std::size_t operator()(const BarSimplex& s) const noexcept;
};

/// Prefix-sum representation [b0,...,bk] of a simplex, normalized so b0 = 0.
class BTuple {
public:
    /// The 0-simplex [0].
    BTuple() : entries_{0} {}
    /// Normalizes any representative by subtracting its first component.
    explicit BTuple(std::vector<Integer> entries);

    std::size_t dim() const { return entries_.size() - 1; }
    std::span<const Integer> entries() const { return entries_; }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }

    bool is_degenerate() const;

    friend bool operator==(const BTuple& a, const BTuple& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Integer> entries_;
};

/// Face operator: d0 drops a1, dk drops ak, otherwise ai and a(i+1) merge.
BarSimplex face(std::size_t i, const BarSimplex& s);
/// Degeneracy s_i: inserts a zero after the i-th entry.
BarSimplex degeneracy(std::size_t i, const BarSimplex& s);

BTuple to_btuple(const BarSimplex& s);
BarSimplex from_btuple(const BTuple& b);
/// Face in b-tuple form: delete component i, then renormalize.
BTuple btuple_face(std::size_t i, const BTuple& b);

/// Bit size of one entry: 1 + floor(log2(|a| + 1)).
std::size_t entry_size(const Integer& a);
std::size_t size(const BarSimplex& s);

/// Parses "[3|-2|5]" (bar), "[0,3,1,6]" (b-tuple) or "[]". A bracket with a
/// single entry and no separator is read as bar notation.
BarSimplex parse_simplex(std::string_view text);
/// Parses "[b0,...,bk]" keeping the representative as written (no normalization).
std::vector<Integer> parse_tuple(std::string_view text);

std::string format_bar(const BarSimplex& s);
std::string format_btuple(const BTuple& b);
std::string format_tuple(std::span<const Integer> raw);

}  // namespace kz1

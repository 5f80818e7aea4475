#include "kz1/simplex.hpp"

#include <algorithm>
#include <cctype>

#include <boost/container_hash/hash.hpp>

#include "kz1/errors.hpp"

namespace kz1 {

bool BarSimplex::is_degenerate() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const Integer& a) { return a == 0; });
}

bool BarSimplex::all_positive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& a) { return a > 0; });
}

bool BarSimplex::has_negative() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const Integer& a) { return a < 0; });
}

bool operator<(const BarSimplex& a, const BarSimplex& b) {
    if (a.entries_.size() != b.entries_.size()) {
        return a.entries_.size() < b.entries_.size();
    }
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                        b.entries_.end());
}

std::size_t BarSimplexHash::operator()(const BarSimplex& s) const noexcept {
    std::size_t seed = s.dim();
    for (const auto& a : s.entries()) {
        const auto& backend = a.backend();
        const auto* limbs = backend.limbs();
        for (unsigned i = 0; i < backend.size(); ++i) {
            boost::hash_combine(seed, limbs[i]);
        }
        boost::hash_combine(seed, backend.sign());
    }
    return seed;
}

BTuple::BTuple(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw PreconditionError("a b-tuple needs at least one component");
    }
    const Integer shift = entries_.front();
    if (shift != 0) {
        for (auto& b : entries_) {
            b -= shift;
        }
    }
}

bool BTuple::is_degenerate() const {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] == entries_[i - 1]) {
            return true;
        }
    }
    return false;
}

BarSimplex face(std::size_t i, const BarSimplex& s) {
    const std::size_t k = s.dim();
    if (k == 0) {
        throw PreconditionError("the 0-simplex [] has no faces");
    }
    if (i > k) {
        throw PreconditionError("face index " + std::to_string(i) + " out of range for dimension " +
                                std::to_string(k));
    }
    const auto e = s.entries();
    BarSimplex::Storage out;
    out.reserve(k - 1);
    if (i == 0) {
        out.assign(e.begin() + 1, e.end());
    } else if (i == k) {
        out.assign(e.begin(), e.end() - 1);
    } else {
        out.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i) - 1);
        out.push_back(e[i - 1] + e[i]);
        out.insert(out.end(), e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end());
    }
    return BarSimplex(std::move(out));
}

BarSimplex degeneracy(std::size_t i, const BarSimplex& s) {
    if (i > s.dim()) {
        throw PreconditionError("degeneracy index " + std::to_string(i) + " out of range for dimension " +
                                std::to_string(s.dim()));
    }
    BarSimplex::Storage out(s.entries().begin(), s.entries().end());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), Integer(0));
    return BarSimplex(std::move(out));
}

BTuple to_btuple(const BarSimplex& s) {
    std::vector<Integer> b;
    b.reserve(s.dim() + 1);
    b.emplace_back(0);
    for (const auto& a : s.entries()) {
        b.push_back(b.back() + a);
    }
    return BTuple(std::move(b));
}

BarSimplex from_btuple(const BTuple& b) {
    BarSimplex::Storage a;
    a.reserve(b.dim());
    for (std::size_t i = 1; i < b.entries().size(); ++i) {
        a.push_back(b[i] - b[i - 1]);
    }
    return BarSimplex(std::move(a));
}

BTuple btuple_face(std::size_t i, const BTuple& b) {
    const std::size_t k = b.dim();
    if (k == 0) {
        throw PreconditionError("the 0-simplex [] has no faces");
    }
    if (i > k) {
        throw PreconditionError("face index " + std::to_string(i) + " out of range for dimension " +
                                std::to_string(k));
    }
    std::vector<Integer> out(b.entries().begin(), b.entries().end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return BTuple(std::move(out));
}

std::size_t entry_size(const Integer& a) {
    // floor(log2(x)) + 1 is the bit length of x, for x = |a| + 1 >= 1.
    return bit_length(abs(a) + 1);
}

std::size_t size(const BarSimplex& s) {
    std::size_t total = 0;
    for (const auto& a : s.entries()) {
        total += entry_size(a);
    }
    return total;
}

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

struct Bracketed {
    std::vector<Integer> values;
    char separator = '\0';
};

Bracketed parse_bracketed(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ParseError("simplex must be written in brackets, got '" + std::string(text) + "'");
    }
    std::string_view body = trim(text.substr(1, text.size() - 2));
    Bracketed out;
    if (body.empty()) {
        return out;
    }
    const bool bars = body.find('|') != std::string_view::npos;
    const bool commas = body.find(',') != std::string_view::npos;
    if (bars && commas) {
        throw ParseError("simplex mixes '|' and ',' separators: '" + std::string(text) + "'");
    }
    out.separator = bars ? '|' : (commas ? ',' : '\0');
    while (true) {
        const auto cut = out.separator == '\0' ? std::string_view::npos : body.find(out.separator);
        out.values.push_back(parse_integer(trim(body.substr(0, cut))));
        if (cut == std::string_view::npos) {
            break;
        }
        body.remove_prefix(cut + 1);
    }
    return out;
}

}  // namespace

BarSimplex parse_simplex(std::string_view text) {
    auto parsed = parse_bracketed(text);
    if (parsed.separator == ',') {
        return from_btuple(BTuple(std::move(parsed.values)));
    }
    return BarSimplex(std::move(parsed.values));
}

std::vector<Integer> parse_tuple(std::string_view text) {
    auto parsed = parse_bracketed(text);
    if (parsed.separator == '|') {
        throw ParseError("expected a b-tuple with ',' separators, got '" + std::string(text) + "'");
    }
    if (parsed.values.empty()) {
        throw ParseError("a b-tuple needs at least one component");
    }
    return std::move(parsed.values);
}

namespace {

std::string join(std::span<const Integer> values, char sep) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += values[i].str();
    }
    out += ']';
    return out;
}

}  // namespace

std::string format_bar(const BarSimplex& s) { return join(s.entries(), '|'); }

std::string format_btuple(const BTuple& b) { return join(b.entries(), ','); }

std::string format_tuple(std::span<const Integer> raw) { return join(raw, ','); }

}  // namespace kz1

#include "kz1/sampling.hpp"

#include <vector>

#include "kz1/errors.hpp"
#include "kz1/fields.hpp"

namespace kz1 {

namespace {

// Uniform in [0, 2^bits).
Integer random_bits(Rng& rng, std::size_t bits) {
    Integer x = 0;
    std::size_t have = 0;
    while (have < bits) {
        const std::size_t take = std::min<std::size_t>(64, bits - have);
        std::uint64_t word = rng();
        if (take < 64) {
            word &= (std::uint64_t{1} << take) - 1;
        }
        x |= Integer(word) << have;
        have += take;
    }
    return x;
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Integer random_entry(Rng& rng, std::size_t max_bits, bool allow_negative) {
    if (max_bits == 0) {
        throw PreconditionError("random entries need at least one bit");
    }
    const std::size_t bits = uniform_index(rng, 1, max_bits);
    Integer x = (Integer(1) << (bits - 1)) | random_bits(rng, bits - 1);
    if (allow_negative && (rng() & 1)) {
        x = -x;
    }
    return x;
}

BarSimplex random_simplex(Rng& rng, std::size_t dim, std::size_t max_bits, bool allow_negative) {
    BarSimplex::Storage entries;
    entries.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        entries.push_back(random_entry(rng, max_bits, allow_negative));
    }
    return BarSimplex(std::move(entries));
}

Chain random_chain(Rng& rng, std::size_t dim, std::size_t max_terms, std::size_t max_bits, bool allow_negative,
                   long coeff_bound) {
    const std::size_t n = uniform_index(rng, 1, std::max<std::size_t>(max_terms, 1));
    std::vector<std::pair<BarSimplex, Integer>> terms;
    std::uniform_int_distribution<long> coeff(1, std::max(coeff_bound, 1L));
    for (std::size_t t = 0; t < n; ++t) {
        Integer c = coeff(rng);
        if (rng() & 1) {
            c = -c;
        }
        terms.emplace_back(random_simplex(rng, dim, max_bits, allow_negative), c);
    }
    return Chain::from_terms(static_cast<int>(dim), std::move(terms));
}

BarSimplex random_bc_target(Rng& rng, std::size_t dim_max, std::size_t max_bits) {
    while (true) {
        const std::size_t dim = uniform_index(rng, 1, dim_max);
        BarSimplex::Storage entries;
        for (std::size_t i = 0; i < dim; ++i) {
            if (rng() % 3 == 0) {
                entries.push_back(Integer(1) << uniform_index(rng, 0, max_bits - 1));
            } else {
                entries.push_back(random_entry(rng, max_bits, false));
            }
        }
        BarSimplex s(std::move(entries));
        if (v_bc_classify(s).is_target()) {
            return s;
        }
    }
}

}  // namespace kz1

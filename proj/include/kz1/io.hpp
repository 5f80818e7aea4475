#pragma once

#include <string>
#include <vector>

#include "kz1/chain.hpp"
#include "kz1/dvf.hpp"
#include "kz1/homology.hpp"
#include "kz1/simplex.hpp"

namespace kz1 {

// JSON forms used by the command-line tool. Field order is fixed and terms are
// sorted, so equal inputs give byte-identical output. Coefficients are decimal
// strings; bar entries are JSON integers when they fit in 64 bits and decimal
// strings otherwise, and both forms are accepted on input.

/// {"dim": k, "terms": [{"simplex": [a1,...], "coeff": "c"}, ...]}
std::string chain_to_json(const Chain& c, int indent = -1);

/// Throws ParseError on malformed JSON and PreconditionError on a degenerate
/// simplex or a term of the wrong dimension.
Chain chain_from_json(const std::string& text);

/// {"simplex", "layer", "class", "partner", "regular_index"}; partner and
/// regular_index are null for a critical simplex.
std::string classification_to_json(const BarSimplex& s, const Classification& c);

/// {"seed", "nodes", "total_size", "edges", "cycle": false}
std::string reach_to_json(const BarSimplex& seed, const ReachResult& r);

/// [{"depth", "kind": "V"|"face", "index", "simplex"}, ...]
std::string trace_to_json(const std::vector<TraceStep>& steps);

/// {"kmax": K, "groups": [{"k", "rank", "torsion": ["2", ...], "text"}, ...]}
std::string homology_to_json(const HomologyResult& h);

}  // namespace kz1

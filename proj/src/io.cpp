#include "kz1/io.hpp"

#include <cstdint>
#include <limits>
#include <nlohmann/json.hpp>

#include "kz1/errors.hpp"

namespace kz1 {

namespace {

using Json = nlohmann::ordered_json;

Json entry_to_json(const Integer& a) {
    if (a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(a);
    }
    return a.str();
}

Json simplex_to_json(const BarSimplex& s) {
    Json out = Json::array();
    for (const auto& a : s.entries()) {
        out.push_back(entry_to_json(a));
    }
    return out;
}

Integer integer_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    throw ParseError(std::string(what) + " must be an integer or a decimal string");
}

}  // namespace

std::string chain_to_json(const Chain& c, int indent) {
    Json out;
    out["dim"] = c.dim();
    Json terms = Json::array();
    for (const auto& [s, coeff] : c.terms()) {
        Json t;
        t["simplex"] = simplex_to_json(s);
        t["coeff"] = coeff.str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out.dump(indent);
}

Chain chain_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("chain JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() || !j.contains("terms") ||
        !j["terms"].is_array()) {
        throw ParseError("chain JSON needs an integer \"dim\" and a \"terms\" array");
    }
    const auto dim = j["dim"].get<std::int64_t>();
    if (dim < -1 || dim > std::numeric_limits<int>::max()) {
        throw ParseError("chain JSON dim out of range");
    }
    std::vector<std::pair<BarSimplex, Integer>> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("simplex") || !t["simplex"].is_array() || !t.contains("coeff")) {
            throw ParseError("each chain term needs a \"simplex\" array and a \"coeff\"");
        }
        BarSimplex::Storage entries;
        for (const auto& a : t["simplex"]) {
            entries.push_back(integer_from_json(a, "simplex entry"));
        }
        terms.emplace_back(BarSimplex(std::move(entries)), integer_from_json(t["coeff"], "coeff"));
    }
    return Chain::from_terms(static_cast<int>(dim), std::move(terms));
}

std::string classification_to_json(const BarSimplex& s, const Classification& c) {
    Json out;
    out["simplex"] = format_bar(s);
    out["layer"] = std::string(to_string(c.layer));
    out["class"] = std::string(to_string(c.kind));
    if (c.is_critical()) {
        out["partner"] = nullptr;
        out["regular_index"] = nullptr;
    } else {
        out["partner"] = format_bar(c.partner);
        out["regular_index"] = c.regular_index;
    }
    return out.dump();
}

std::string reach_to_json(const BarSimplex& seed, const ReachResult& r) {
    Json out;
    out["seed"] = format_bar(seed);
    out["nodes"] = r.nodes;
    out["total_size"] = r.total_size;
    out["edges"] = r.edges;
    out["cycle"] = false;
    return out.dump();
}

std::string trace_to_json(const std::vector<TraceStep>& steps) {
    Json out = Json::array();
    for (const auto& step : steps) {
        Json s;
        s["depth"] = step.depth;
        s["kind"] = step.move.kind == MoveKind::up ? "V" : "face";
        s["index"] = step.move.index;
        s["simplex"] = format_bar(step.move.simplex);
        out.push_back(std::move(s));
    }
    return out.dump(2);
}

std::string homology_to_json(const HomologyResult& h) {
    Json out;
    out["kmax"] = h.groups.empty() ? 0 : h.groups.size() - 1;
    Json groups = Json::array();
    for (std::size_t k = 0; k < h.groups.size(); ++k) {
        Json g;
        g["k"] = k;
        g["rank"] = h.groups[k].rank;
        Json torsion = Json::array();
        for (const auto& t : h.groups[k].torsion) {
            torsion.push_back(t.str());
        }
        g["torsion"] = std::move(torsion);
        g["text"] = format_group(h.groups[k]);
        groups.push_back(std::move(g));
    }
    out["groups"] = std::move(groups);
    return out.dump();
}

}  // namespace kz1

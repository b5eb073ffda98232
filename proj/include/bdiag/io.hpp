#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bdiag/diagram.hpp"
#include "bdiag/enumeration.hpp"
#include "bdiag/heisenberg.hpp"
#include "bdiag/lincomb.hpp"
#include "bdiag/partitions.hpp"

namespace bdiag {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Diagrams: {"n":..,"lambda":[..],"phi":[..|null],"f_up":[..],"f_down":[..]}
// ---------------------------------------------------------------------------

inline Json to_json(const Diagram& g) {
    Json j;
    j["n"] = g.n();
    j["lambda"] = g.lambda();
    Json phi = Json::array();
    for (int v : g.phi_word()) {
        if (v == kBlank)
            phi.push_back(nullptr);
        else
            phi.push_back(v);
    }
    j["phi"] = std::move(phi);
    j["f_up"] = g.f_up();
    j["f_down"] = g.f_down();
    return j;
}

inline Diagram diagram_from_json(const Json& j) {
    DiagramTuple t;
    t.n = j.at("n").get<int>();
    t.lambda = j.at("lambda").get<std::vector<int>>();
    for (const auto& v : j.at("phi")) t.phi.push_back(v.is_null() ? kBlank : v.get<int>());
    t.f_up = j.at("f_up").get<std::vector<int>>();
    t.f_down = j.at("f_down").get<std::vector<int>>();
    return Diagram(std::move(t));
}

// ---------------------------------------------------------------------------
// Partitions mirror their text forms.
// ---------------------------------------------------------------------------

inline Json to_json(const SetPartition& p) {
    Json j = Json::array();
    for (const auto& b : p.blocks()) j.push_back(b);
    return j;
}

inline Json to_json(const ListPartition& p) {
    Json j = Json::array();
    for (const auto& b : p.blocks()) j.push_back(b);
    return j;
}

inline Json to_json(const ColoredPartition& p) {
    Json j = Json::array();
    for (const auto& [block, color] : p.blocks()) {
        Json e;
        e["block"] = block;
        e["color"] = color;
        j.push_back(std::move(e));
    }
    return j;
}

inline SetPartition set_partition_from_json(const Json& j) {
    std::vector<SetPartition::Block> blocks;
    for (const auto& b : j) blocks.push_back(b.get<std::vector<int>>());
    return SetPartition(std::move(blocks));
}

inline ListPartition list_partition_from_json(const Json& j) {
    std::vector<ListPartition::Block> blocks;
    for (const auto& b : j) blocks.push_back(b.get<std::vector<int>>());
    return ListPartition(std::move(blocks));
}

inline ColoredPartition colored_partition_from_json(const Json& j) {
    std::vector<ColoredPartition::Block> blocks;
    for (const auto& b : j)
        blocks.emplace_back(b.at("block").get<std::vector<int>>(), b.at("color").get<int>());
    return ColoredPartition(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Linear combinations: deterministic, key-ordered term lists.
// ---------------------------------------------------------------------------

template <class B, class ShowBasis>
Json lincomb_to_json(const LinComb<B>& x, const std::string& basis_tag, ShowBasis&& show) {
    Json terms = Json::array();
    for (const auto& [b, c] : x.terms()) {
        Json t;
        t["coeff"] = c.str();
        t["basis"] = show(b);
        terms.push_back(std::move(t));
    }
    Json j;
    j["basis"] = basis_tag;
    j["terms"] = std::move(terms);
    return j;
}

/// One term per line: `coeff * tag[element]`, omitting the unit coefficient.
template <class B, class ShowBasis>
std::string lincomb_to_text(const LinComb<B>& x, const std::string& tag, ShowBasis&& show) {
    if (x.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [b, c] : x.terms()) {
        if (c == Rational(1))
            os << tag << "[" << show(b) << "]\n";
        else
            os << c.str() << " * " << tag << "[" << show(b) << "]\n";
    }
    return os.str();
}

template <class B, class ShowBasis>
std::string lincomb_to_csv(const LinComb<B>& x, ShowBasis&& show) {
    std::ostringstream os;
    os << "coeff,basis\n";
    for (const auto& [b, c] : x.terms()) os << c.str() << ",\"" << show(b) << "\"\n";
    return os.str();
}

template <class B, class ShowBasis>
std::string tensor_to_text(const Tensor2<B>& x, const std::string& tag, ShowBasis&& show) {
    if (x.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [p, c] : x.terms()) {
        if (!(c == Rational(1))) os << c.str() << " * ";
        os << tag << "[" << show(p.first) << "] (x) " << tag << "[" << show(p.second) << "]\n";
    }
    return os.str();
}

template <class B, class ShowBasis>
Json tensor_to_json(const Tensor2<B>& x, const std::string& basis_tag, ShowBasis&& show) {
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms()) {
        Json t;
        t["coeff"] = c.str();
        t["left"] = show(p.first);
        t["right"] = show(p.second);
        terms.push_back(std::move(t));
    }
    Json j;
    j["basis"] = basis_tag;
    j["terms"] = std::move(terms);
    return j;
}

// ---------------------------------------------------------------------------
// Generator sets: preset name, inline tree family, or a JSON file holding an
// array of diagrams.
// ---------------------------------------------------------------------------

inline GeneratorSet parse_generators(const std::string& spec) {
    if (spec == "W") return preset_w();
    if (spec == "BW") return preset_bw();
    if (spec == "F") return preset_f();
    if (spec == "S") return preset_s();
    if (spec.rfind("T:", 0) == 0) {
        // T:{m1,m2,...}
        detail::TextCursor c(spec.substr(2), "tree preset");
        std::vector<int> arities = c.braced_set();
        c.done();
        return preset_t(arities);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("generators: no preset or file named '" + spec + "'");
    Json j = Json::parse(in);
    std::vector<Diagram> gens;
    for (const auto& e : j) gens.push_back(diagram_from_json(e));
    return GeneratorSet(std::move(gens));
}

inline std::string normal_form_to_json_text(const NormalForm& nf) {
    Json terms = Json::array();
    for (const auto& [km, c] : nf) {
        Json t;
        t["coeff"] = c.get_str();
        t["creations"] = km.first;
        t["annihilations"] = km.second;
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

}  // namespace bdiag

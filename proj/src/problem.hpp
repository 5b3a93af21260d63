#pragma once

#include "constructions.hpp"
#include "presentation.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace qhlab {

using Json = nlohmann::json;

struct NamedAlgebra {
    AlgebraPtr algebra;
    SimpleOrder order;
    // set when the algebra came from a quiver presentation
    std::optional<BoundQuiverAlgebra> presentation;
    // set when the algebra is a species assembly
    std::shared_ptr<SpeciesAlgebra> species;
};

struct RunOptions {
    uint64_t seed = 0;
    int max_degree = 0;  // 0 = default (dim of the algebra at hand)
    bool timings = false;
};

// A loaded problem file: named algebras, embeddings, species, and the list of
// requested checks.
struct Problem {
    Json source;
    std::map<std::string, NamedAlgebra> algebras;
    std::map<std::string, Embedding> embeddings;
    std::map<std::string, SpeciesSpec> species_specs;
    std::map<std::string, std::shared_ptr<SpeciesAlgebra>> species_built;
    RunOptions options;

    const NamedAlgebra& algebra(const std::string& name) const;
    const Embedding& embedding(const std::string& name) const;
    SimpleOrder order_of(const std::string& algebra_name) const;
};

// Parses and resolves the declarations ("algebras", "embeddings", "species").
// Throws Error(Parse/Semantic) with location info where available.
Problem load_problem(const std::string& json_text, const RunOptions& options = {});

// Round-trip support for presentations (parse_presentation / serializer).
PresentationSpec parse_presentation_json(const Json& j);
Json serialize_presentation(const PresentationSpec& spec,
                            const std::vector<std::pair<int, int>>& order_pairs);

// Executes the checks named by `command` ("run" = all), or an ad-hoc check
// given as explicit args. Returns the report as JSON.
Json run_command(Problem& p, const std::string& command, const Json& extra_args = Json());

// DOT output: {"quiver": name} or {"loewy": {"algebra": name, "module": sel}}.
std::string emit_dot(Problem& p, const Json& what);

std::string render_text(const Json& report);
bool report_all_passed(const Json& report);

// Module selector mini-language used by loewy/filtration checks.
Module select_module(Problem& p, const std::string& algebra_name, const Json& sel);

}  // namespace qhlab

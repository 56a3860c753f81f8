#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pickbody/moebius.hpp"
#include "pickbody/slice.hpp"

namespace pickbody {

using Json = nlohmann::json;

/// Complex numbers serialize as two-element arrays [re, im] everywhere.
Json to_json(const Cplx& z);
Cplx cplx_from_json(const Json& j, const std::string& field);
Json to_json(const CTuple& v);
CTuple ctuple_from_json(const Json& j, const std::string& field);

/// One JSON document per problem.
struct ProblemFile {
    std::string domain;                        // "disc" | "polydisc"
    int m = 0;                                 // polydisc dimension
    CTuple nodes;                              // disc nodes
    std::vector<CTuple> poly_points;           // polydisc points (3 x m)
    std::optional<CTuple> targets;
    std::optional<CTuple> alpha;
    std::optional<std::pair<int, int>> pair;   // 0-based internally, 1-based in files
    std::optional<int> coordinate;             // preferred graph coordinate, 0-based
    std::optional<SliceSpec> slice;
};

ProblemFile parse_problem(const Json& j);

struct Report {
    std::string command;
    Json results = Json::object();
    Json diagnostics = Json::object();
    int exit_status = 0;

    Json to_json() const;
    static Report from_json(const Json& j);
    bool operator==(const Report& other) const;
};

Json interpolant_trace(const ComposedInterpolant& f);

}  // namespace pickbody

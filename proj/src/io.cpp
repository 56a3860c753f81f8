#include "pickbody/io.hpp"

namespace pickbody {

Json to_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

Cplx cplx_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("field '" + field +
                                    "': complex numbers must be [re, im] arrays");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const CTuple& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(to_json(z));
    return out;
}

CTuple ctuple_from_json(const Json& j, const std::string& field) {
    if (!j.is_array())
        throw std::invalid_argument("field '" + field + "': expected an array");
    CTuple out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(cplx_from_json(j[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

namespace {

SliceSpec parse_slice(const Json& j) {
    SliceSpec s;
    s.base = ctuple_from_json(j.at("base"), "slice.base");
    s.dir1 = ctuple_from_json(j.at("dir1"), "slice.dir1");
    s.dir2 = ctuple_from_json(j.at("dir2"), "slice.dir2");
    if (j.contains("xrange")) {
        s.xmin = j["xrange"].at(0).get<double>();
        s.xmax = j["xrange"].at(1).get<double>();
    }
    if (j.contains("yrange")) {
        s.ymin = j["yrange"].at(0).get<double>();
        s.ymax = j["yrange"].at(1).get<double>();
    }
    if (j.contains("grid")) s.grid = j["grid"].get<int>();
    return s;
}

}  // namespace

ProblemFile parse_problem(const Json& j) {
    ProblemFile p;
    if (!j.is_object()) throw std::invalid_argument("problem file must be a JSON object");
    p.domain = j.value("domain", "disc");
    if (p.domain != "disc" && p.domain != "polydisc")
        throw std::invalid_argument("field 'domain': must be \"disc\" or \"polydisc\"");

    if (p.domain == "disc") {
        if (!j.contains("nodes")) throw std::invalid_argument("field 'nodes': missing");
        p.nodes = ctuple_from_json(j["nodes"], "nodes");
    } else {
        p.m = j.value("m", 0);
        if (p.m != 2 && p.m != 3)
            throw std::invalid_argument("field 'm': polydisc dimension must be 2 or 3");
        if (!j.contains("points")) throw std::invalid_argument("field 'points': missing");
        const Json& pts = j["points"];
        if (!pts.is_array())
            throw std::invalid_argument("field 'points': expected an array of points");
        for (std::size_t k = 0; k < pts.size(); ++k) {
            CTuple c = ctuple_from_json(pts[k], "points[" + std::to_string(k) + "]");
            if (static_cast<int>(c.size()) != p.m)
                throw std::invalid_argument("field 'points[" + std::to_string(k) +
                                            "]': wrong coordinate count");
            p.poly_points.push_back(std::move(c));
        }
    }

    if (j.contains("targets")) p.targets = ctuple_from_json(j["targets"], "targets");
    if (j.contains("alpha")) p.alpha = ctuple_from_json(j["alpha"], "alpha");
    if (j.contains("pair")) {
        const Json& pr = j["pair"];
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer())
            throw std::invalid_argument("field 'pair': expected [i, j] (1-based)");
        p.pair = std::make_pair(pr[0].get<int>() - 1, pr[1].get<int>() - 1);
    }
    if (j.contains("coordinate")) p.coordinate = j["coordinate"].get<int>() - 1;
    if (j.contains("slice")) p.slice = parse_slice(j["slice"]);
    return p;
}

Json Report::to_json() const {
    return Json{{"command", command},
                {"results", results},
                {"diagnostics", diagnostics},
                {"exit_status", exit_status}};
}

Report Report::from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.results = j.at("results");
    r.diagnostics = j.at("diagnostics");
    r.exit_status = j.at("exit_status").get<int>();
    return r;
}

bool Report::operator==(const Report& other) const {
    return to_json() == other.to_json();
}

Json interpolant_trace(const ComposedInterpolant& f) {
    if (f.is_leaf()) return Json{{"constant", to_json(f.leaf_value())}};
    return Json{{"target", to_json(f.target())},
                {"node", to_json(f.node_point())},
                {"inner", interpolant_trace(f.inner())}};
}

}  // namespace pickbody

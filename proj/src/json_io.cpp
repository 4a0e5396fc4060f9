#include "lstar/json_io.hpp"

namespace lstar {

namespace {
const Int kJsonSafe = (Int(1) << 53) - 1;
}

Json int_to_json(const Int& v) {
    if (abs(v) <= kJsonSafe) return v.convert_to<std::int64_t>();
    return v.str();
}

Int json_to_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

Vec json_to_vec(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    Vec v;
    for (const Json& x : j) v.push_back(json_to_int(x));
    return v;
}

Json vecs_to_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const Vec& v : vs) a.push_back(vec_to_json(v));
    return a;
}

std::vector<Vec> json_to_vecs(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty array of vectors");
    std::vector<Vec> vs;
    for (const Json& x : j) vs.push_back(json_to_vec(x));
    return vs;
}

PointConfiguration parse_point_configuration(const Json& j) {
    if (!j.is_object() || !j.contains("points"))
        throw std::invalid_argument("expected an object with a \"points\" field");
    PointConfiguration c;
    c.points = json_to_vecs(j.at("points"));
    c.ambient_dim = c.points.front().size();
    c.validate();
    return c;
}

Json polytope_to_json(const LatticePolytope& p) {
    Json j;
    j["ambient_dim"] = p.ambient_dim();
    j["dim"] = p.dim();
    j["points"] = vecs_to_json(p.vertices());
    Json facets = Json::array();
    for (const Facet& f : p.facets())
        facets.push_back({{"normal", vec_to_json(f.normal)}, {"offset", int_to_json(f.offset)}});
    j["facets"] = facets;
    Json eqs = Json::array();
    for (const SpanEquation& e : p.span_equations())
        eqs.push_back({{"normal", vec_to_json(e.normal)}, {"value", int_to_json(e.value)}});
    j["span_equations"] = eqs;
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["scenario"] = r.scenario;
    j["instance"] = r.instance;
    j["left"] = r.left;
    j["right"] = r.right;
    j["pass"] = r.pass;
    j["timing_ms"] = r.timing_ms;
    return j;
}

}  // namespace lstar

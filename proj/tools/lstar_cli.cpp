// lstar: exact local Ehrhart theory toolkit.
//
// Every subcommand reads JSON from --input (or standard input) where an
// input object is needed and writes a single JSON document to standard
// output: {"ok": bool, "result": ..., "meta": {...}}. Exit codes: 0 ok,
// 2 input validation error, 3 counting budget exceeded, 4 verification
// failure.

#include "lstar/construct.hpp"
#include "lstar/ehrhart.hpp"
#include "lstar/gale.hpp"
#include "lstar/hyper.hpp"
#include "lstar/identities.hpp"
#include "lstar/json_io.hpp"
#include "lstar/localh.hpp"
#include "lstar/mixvol.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using lstar::Int;
using lstar::Json;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

Json lstar_result(const lstar::LocalHStar& l) {
    Json r;
    r["lstar"] = lstar::vec_to_json(l.lstar);
    r["hodge"] = lstar::vec_to_json(l.hodge);
    return r;
}

std::vector<Int> parse_gamma(const std::string& s) {
    std::vector<Int> gamma;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        gamma.emplace_back(tok);
    }
    if (gamma.empty()) throw std::invalid_argument("--gamma expects a comma-separated tuple");
    return gamma;
}

std::string rat_str(const lstar::Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

struct Outcome {
    Json result;
    Json meta = Json::object();
    int exit_code = 0;
};

int emit(const std::function<Outcome()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Json out;
    int code = 0;
    try {
        Outcome o = fn();
        out["ok"] = o.exit_code == 0;
        out["result"] = o.result;
        o.meta["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        out["meta"] = o.meta;
        code = o.exit_code;
    } catch (const lstar::budget_error& e) {
        out["ok"] = false;
        out["error"] = e.what();
        code = 3;
    } catch (const std::exception& e) {
        out["ok"] = false;
        out["error"] = e.what();
        code = 2;
    }
    std::cout << out.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of local Ehrhart theory: h*, local h*, Hodge vectors, "
                 "Cayley polytopes, Gale transforms, Lawrence twists"};
    app.require_subcommand(1);
    app.fallthrough();  // global --input/--budget may follow the subcommand

    std::string input;
    std::int64_t budget = 0;
    app.add_option("--input", input, "input JSON file (default: standard input)")
        ->configurable(false);
    app.add_option("--budget", budget, "cell budget for lattice point scans");

    std::string gamma_str;
    std::string embedding = "reduced";
    std::string scenario;
    std::uint64_t seed = 1;
    int count = 0;
    std::int64_t dilate_k = 1;
    bool interior = false;

    auto* c_hstar = app.add_subcommand("hstar", "h*-vector, normalized volume and degree");
    auto* c_local = app.add_subcommand("local", "local h*-vector and Hodge vector");
    auto* c_hodge = app.add_subcommand("hodge", "Hodge vector");
    auto* c_diamond = app.add_subcommand("diamond3d", "h*-diamond of a 3-polytope");
    auto* c_faces = app.add_subcommand("faces", "face lattice rank profile and face list");
    auto* c_count = app.add_subcommand("count", "lattice points of a dilate");
    c_count->add_option("--dilate", dilate_k, "dilation factor (default 1)");
    c_count->add_flag("--interior", interior, "count relative-interior points only");
    auto* c_cayley = app.add_subcommand("cayley", "Cayley polytope of a list of polytopes");
    c_cayley->add_option("--embedding", embedding, "standard or reduced (default reduced)");
    auto* c_join = app.add_subcommand("join", "free join of two polytopes");
    auto* c_pyramid = app.add_subcommand("pyramid", "lattice pyramid");
    auto* c_project = app.add_subcommand("project", "projection along a subspace");
    auto* c_mixedvol = app.add_subcommand("mixedvol", "normalized mixed volume");
    auto* c_gale = app.add_subcommand("gale", "Gale transform of a point configuration");
    auto* c_ungale = app.add_subcommand("ungale", "point configuration of a Gale transform");
    auto* c_twist = app.add_subcommand("twist", "Lawrence twist of a point configuration");
    auto* c_circuit = app.add_subcommand("circuit", "circuit of a gamma tuple");
    c_circuit->add_option("--gamma", gamma_str, "comma-separated integer tuple")->required();
    auto* c_cgf = app.add_subcommand("cgf", "local h* of a circuit via the coefficient formula");
    c_cgf->add_option("--gamma", gamma_str, "comma-separated integer tuple")->required();
    auto* c_verify = app.add_subcommand("verify", "run a verification scenario");
    c_verify->add_option("--scenario", scenario, "scenario name, or 'all'")->required();
    c_verify->add_option("--seed", seed, "random seed (default 1)");
    c_verify->add_option("--count", count, "instance count (default per scenario)");

    CLI11_PARSE(app, argc, argv);
    if (budget > 0) lstar::set_counting_budget(budget);

    auto input_polytope = [&]() { return hull(lstar::parse_point_configuration(parse_json(read_input(input)))); };
    auto input_json = [&]() { return parse_json(read_input(input)); };
    auto input_polytopes = [&](const Json& j) {
        if (!j.is_object() || !j.contains("polytopes"))
            throw std::invalid_argument("expected an object with a \"polytopes\" field");
        std::vector<lstar::LatticePolytope> ps;
        for (const Json& pj : j.at("polytopes"))
            ps.push_back(hull(lstar::parse_point_configuration(pj)));
        return ps;
    };

    if (*c_hstar)
        return emit([&] {
            auto p = input_polytope();
            auto h = lstar::hstar(p);
            Json r;
            std::vector<Int> coeffs(h.dim + 1);
            for (int i = 0; i <= h.dim; ++i) coeffs[i] = h.hstar.coeff(i);
            r["hstar"] = Json{{"coeffs", lstar::vec_to_json(coeffs)}};
            r["normalized_volume"] = lstar::int_to_json(h.normalized_volume);
            r["degree"] = h.degree;
            return Outcome{r, Json{{"dim", h.dim}}};
        });

    if (*c_local)
        return emit([&] {
            auto p = input_polytope();
            return Outcome{lstar_result(lstar::local_hstar(p)), Json{{"dim", p.dim()}}};
        });

    if (*c_hodge)
        return emit([&] {
            auto p = input_polytope();
            Json r;
            r["hodge"] = lstar::vec_to_json(lstar::local_hstar(p).hodge);
            return Outcome{r, Json{{"dim", p.dim()}}};
        });

    if (*c_diamond)
        return emit([&] {
            auto p = input_polytope();
            auto d = lstar::diamond_3d(p);
            Json r;
            r["h00"] = lstar::int_to_json(d.h00);
            r["h10"] = lstar::int_to_json(d.h10);
            r["h01"] = lstar::int_to_json(d.h01);
            r["h20"] = lstar::int_to_json(d.h20);
            r["h11"] = lstar::int_to_json(d.h11);
            r["h02"] = lstar::int_to_json(d.h02);
            r["middle_row"] = lstar::vec_to_json(d.middle_row());
            return Outcome{r, Json{{"dim", p.dim()}}};
        });

    if (*c_faces)
        return emit([&] {
            auto p = input_polytope();
            auto L = lstar::face_lattice(p);
            Json r;
            r["points"] = lstar::vecs_to_json(p.vertices());
            Json prof = Json::array();
            for (std::size_t n : L.rank_profile()) prof.push_back(n);
            r["rank_profile"] = prof;
            Json faces = Json::array();
            for (std::size_t id = 0; id < L.size(); ++id) {
                Json fj;
                fj["dim"] = L.face(id).dim;
                Json idxs = Json::array();
                for (std::size_t i = 0; i < p.vertices().size(); ++i)
                    if (L.face(id).vset & (1ull << i)) idxs.push_back(i);
                fj["vertices"] = idxs;
                faces.push_back(fj);
            }
            r["faces"] = faces;
            return Outcome{r, Json{{"dim", p.dim()}}};
        });

    if (*c_count)
        return emit([&] {
            auto p = input_polytope();
            Json r;
            r["count"] = lstar::int_to_json(lstar::count_lattice_points(p, Int(dilate_k), interior));
            return Outcome{r, Json{{"dim", p.dim()}}};
        });

    if (*c_cayley)
        return emit([&] {
            auto ps = input_polytopes(input_json());
            lstar::CayleyEmbedding emb;
            if (embedding == "standard") emb = lstar::CayleyEmbedding::standard;
            else if (embedding == "reduced") emb = lstar::CayleyEmbedding::reduced;
            else throw std::invalid_argument("--embedding must be standard or reduced");
            auto c = lstar::cayley(ps, emb);
            return Outcome{lstar::polytope_to_json(c), Json{{"dim", c.dim()}}};
        });

    if (*c_join)
        return emit([&] {
            auto ps = input_polytopes(input_json());
            if (ps.size() != 2) throw std::invalid_argument("join expects exactly 2 polytopes");
            auto j = lstar::free_join(ps[0], ps[1]);
            return Outcome{lstar::polytope_to_json(j), Json{{"dim", j.dim()}}};
        });

    if (*c_pyramid)
        return emit([&] {
            auto p = lstar::pyramid(input_polytope());
            return Outcome{lstar::polytope_to_json(p), Json{{"dim", p.dim()}}};
        });

    if (*c_project)
        return emit([&] {
            Json j = input_json();
            auto p = hull(lstar::parse_point_configuration(j));
            if (!j.contains("subspace"))
                throw std::invalid_argument("project expects a \"subspace\" field");
            auto q = lstar::project_along(p, lstar::json_to_vecs(j.at("subspace")));
            return Outcome{lstar::polytope_to_json(q), Json{{"dim", q.dim()}}};
        });

    if (*c_mixedvol)
        return emit([&] {
            Json j = input_json();
            auto ps = input_polytopes(j);
            Int mv = j.contains("subspace")
                         ? lstar::mixed_volume(ps, lstar::json_to_vecs(j.at("subspace")))
                         : lstar::mixed_volume(ps);
            Json r;
            r["mixed_volume"] = lstar::int_to_json(mv);
            r["bernstein_zero"] = lstar::bernstein_zero(ps);
            return Outcome{r, Json{{"dim", ps.front().ambient_dim()}}};
        });

    if (*c_gale)
        return emit([&] {
            auto c = lstar::parse_point_configuration(input_json());
            auto g = lstar::gale_transform(c);
            Json r;
            r["vectors"] = lstar::vecs_to_json(g.vectors);
            return Outcome{r, Json{{"dim", c.ambient_dim}}};
        });

    if (*c_ungale)
        return emit([&] {
            Json j = input_json();
            if (!j.contains("vectors"))
                throw std::invalid_argument("ungale expects a \"vectors\" field");
            lstar::GaleConfiguration g;
            g.vectors = lstar::json_to_vecs(j.at("vectors"));
            g.rank = g.vectors.front().size();
            auto c = lstar::gale_inverse(g);
            Json r;
            r["points"] = lstar::vecs_to_json(c.points);
            return Outcome{r, Json{{"dim", c.ambient_dim}}};
        });

    if (*c_twist)
        return emit([&] {
            Json j = input_json();
            auto c = lstar::parse_point_configuration(j);
            if (!j.contains("sym"))
                throw std::invalid_argument("twist expects a \"sym\" field");
            auto t = lstar::lawrence_twist(c, lstar::json_to_vecs(j.at("sym")));
            Json r;
            r["points"] = lstar::vecs_to_json(t.points);
            return Outcome{r, Json{{"dim", t.ambient_dim}}};
        });

    if (*c_circuit)
        return emit([&] {
            auto c = lstar::circuit(parse_gamma(gamma_str));
            Json r;
            r["points"] = lstar::vecs_to_json(c.config.points);
            r["polytope"] = lstar::polytope_to_json(c.polytope);
            return Outcome{r, Json{{"dim", c.polytope.dim()}}};
        });

    if (*c_cgf)
        return emit([&] {
            auto gamma = parse_gamma(gamma_str);
            auto ab = lstar::alphas_betas(gamma);
            auto l = lstar::cgf_local_hstar(gamma);
            Json r = lstar_result(l);
            Json as = Json::array(), bs = Json::array();
            for (const auto& a : ab.alphas) as.push_back(rat_str(a));
            for (const auto& b : ab.betas) bs.push_back(rat_str(b));
            r["alphas"] = as;
            r["betas"] = bs;
            r["K"] = ab.K;
            r["m_minus"] = ab.m_minus;
            return Outcome{r, Json{{"dim", l.dim}}};
        });

    if (*c_verify)
        return emit([&] {
            std::vector<std::string> names =
                scenario == "all" ? lstar::scenario_names() : std::vector<std::string>{scenario};
            Json reports = Json::array();
            int passed = 0, failed = 0;
            for (const std::string& name : names)
                for (const auto& rep : lstar::run_scenario(name, seed, count)) {
                    reports.push_back(lstar::report_to_json(rep));
                    (rep.pass ? passed : failed)++;
                }
            Json r;
            r["reports"] = reports;
            r["passed"] = passed;
            r["failed"] = failed;
            return Outcome{r, Json::object(), failed == 0 ? 0 : 4};
        });

    return 2;
}

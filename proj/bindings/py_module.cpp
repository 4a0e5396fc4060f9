// Python bindings for the lstar core: polytopes, the local Ehrhart
// invariants, the constructions, Gale duality and the verification
// scenarios. Exact integers cross the boundary as python ints.

#include "lstar/construct.hpp"
#include "lstar/ehrhart.hpp"
#include "lstar/gale.hpp"
#include "lstar/hyper.hpp"
#include "lstar/identities.hpp"
#include "lstar/localh.hpp"
#include "lstar/mixvol.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lstar;

namespace {

Int to_int(const py::handle& h) {
    if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
    return Int(py::str(h).cast<std::string>());
}

py::object to_py(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Vec to_vec(const py::handle& seq) {
    Vec v;
    for (const py::handle& x : py::reinterpret_borrow<py::iterable>(seq)) v.push_back(to_int(x));
    return v;
}

std::vector<Vec> to_vecs(const py::handle& seq) {
    std::vector<Vec> vs;
    for (const py::handle& row : py::reinterpret_borrow<py::iterable>(seq))
        vs.push_back(to_vec(row));
    return vs;
}

py::list from_vec(const Vec& v) {
    py::list l;
    for (const Int& x : v) l.append(to_py(x));
    return l;
}

py::list from_vecs(const std::vector<Vec>& vs) {
    py::list l;
    for (const Vec& v : vs) l.append(from_vec(v));
    return l;
}

LatticePolytope polytope_from_points(const py::handle& pts) {
    std::vector<Vec> vs = to_vecs(pts);
    if (vs.empty()) throw py::value_error("need at least one point");
    PointConfiguration c{vs.front().size(), std::move(vs)};
    return hull(c);
}

std::vector<Int> hstar_coeffs(const LatticePolytope& p) {
    HStarData h = hstar(p);
    std::vector<Int> c(h.dim + 1);
    for (int i = 0; i <= h.dim; ++i) c[i] = h.hstar.coeff(i);
    return c;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_lstar, m) {
    m.doc() = "exact invariants of local Ehrhart theory";

    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<LatticePolytope>(m, "Polytope")
        .def(py::init(&polytope_from_points), py::arg("points"),
             "convex hull of a list of integer points")
        .def_property_readonly("dim", &LatticePolytope::dim)
        .def_property_readonly("ambient_dim",
                               [](const LatticePolytope& p) { return p.ambient_dim(); })
        .def_property_readonly("vertices",
                               [](const LatticePolytope& p) { return from_vecs(p.vertices()); })
        .def_property_readonly("facets",
                               [](const LatticePolytope& p) {
                                   py::list l;
                                   for (const Facet& f : p.facets())
                                       l.append(py::make_tuple(from_vec(f.normal), to_py(f.offset)));
                                   return l;
                               })
        .def("hstar",
             [](const LatticePolytope& p) {
                 py::list l;
                 for (const Int& c : hstar_coeffs(p)) l.append(to_py(c));
                 return l;
             },
             "h*-vector, length dim+1")
        .def("normalized_volume",
             [](const LatticePolytope& p) { return to_py(normalized_volume(p)); })
        .def("degree", [](const LatticePolytope& p) { return hstar(p).degree; })
        .def("local_hstar",
             [](const LatticePolytope& p) { return from_vec(local_hstar(p).lstar); },
             "local h*-vector (l*_1 .. l*_d)")
        .def("hodge_vector",
             [](const LatticePolytope& p) { return from_vec(local_hstar(p).hodge); })
        .def("is_thin", [](const LatticePolytope& p) { return predicates(p).thin; })
        .def("is_trivially_thin",
             [](const LatticePolytope& p) { return predicates(p).trivially_thin; })
        .def("is_nearly_thin",
             [](const LatticePolytope& p) { return predicates(p).nearly_thin; })
        .def("count",
             [](const LatticePolytope& p, const py::handle& dilate, bool interior) {
                 return to_py(count_lattice_points(p, to_int(dilate), interior));
             },
             py::arg("dilate") = 1, py::arg("interior") = false)
        .def("diamond3d",
             [](const LatticePolytope& p) {
                 HStarDiamond3D d = diamond_3d(p);
                 py::dict r;
                 r["h00"] = to_py(d.h00);
                 r["h10"] = to_py(d.h10);
                 r["h01"] = to_py(d.h01);
                 r["h20"] = to_py(d.h20);
                 r["h11"] = to_py(d.h11);
                 r["h02"] = to_py(d.h02);
                 r["middle_row"] = from_vec(d.middle_row());
                 return r;
             })
        .def("face_profile",
             [](const LatticePolytope& p) {
                 py::list l;
                 for (std::size_t n : face_lattice(p).rank_profile()) l.append(n);
                 return l;
             },
             "number of faces per rank, empty face and polytope included")
        .def("project_along",
             [](const LatticePolytope& p, const py::handle& basis) {
                 return project_along(p, to_vecs(basis));
             })
        .def("dilate", [](const LatticePolytope& p, const py::handle& k) {
            return dilate(p, to_int(k));
        })
        .def("__repr__", [](const LatticePolytope& p) {
            std::ostringstream os;
            os << "Polytope(dim=" << p.dim() << ", ambient_dim=" << p.ambient_dim()
               << ", vertices=" << p.vertices().size() << ")";
            return os.str();
        });

    m.def("simplex", &simplex, py::arg("d"));
    m.def("segment",
          [](const py::handle& a, const py::handle& b) { return segment(to_int(a), to_int(b)); });
    m.def("cube", &cube, py::arg("d"));
    m.def("cross_polytope", &cross_polytope, py::arg("d"));
    m.def("sN_simplex", [](const py::handle& n) { return sN_simplex(to_int(n)); }, py::arg("N"));

    m.def("cayley",
          [](const std::vector<LatticePolytope>& ps, const std::string& embedding) {
              if (embedding == "standard") return cayley(ps, CayleyEmbedding::standard);
              if (embedding == "reduced") return cayley(ps, CayleyEmbedding::reduced);
              throw py::value_error("embedding must be 'standard' or 'reduced'");
          },
          py::arg("polytopes"), py::arg("embedding") = "reduced");
    m.def("free_join", &free_join);
    m.def("pyramid", &pyramid);
    m.def("minkowski_sum",
          [](const LatticePolytope& p, const LatticePolytope& q) { return minkowski_sum(p, q); });

    m.def("mixed_volume",
          [](const std::vector<LatticePolytope>& ps, const py::object& subspace) {
              Int mv = subspace.is_none() ? mixed_volume(ps)
                                          : mixed_volume(ps, to_vecs(subspace));
              return to_py(mv);
          },
          py::arg("polytopes"), py::arg("subspace") = py::none());
    m.def("bernstein_zero", &bernstein_zero);

    m.def("is_spanning", [](const py::handle& pts) {
        std::vector<Vec> vs = to_vecs(pts);
        PointConfiguration c{vs.front().size(), std::move(vs)};
        return is_spanning(c);
    });
    m.def("gale_transform", [](const py::handle& pts) {
        std::vector<Vec> vs = to_vecs(pts);
        PointConfiguration c{vs.front().size(), std::move(vs)};
        return from_vecs(gale_transform(c).vectors);
    });
    m.def("gale_inverse", [](const py::handle& vectors) {
        GaleConfiguration g;
        g.vectors = to_vecs(vectors);
        if (g.vectors.empty()) throw py::value_error("need at least one vector");
        g.rank = g.vectors.front().size();
        return from_vecs(gale_inverse(g).points);
    });
    m.def("lawrence_twist", [](const py::handle& pts, const py::handle& sym) {
        std::vector<Vec> vs = to_vecs(pts);
        PointConfiguration c{vs.front().size(), std::move(vs)};
        return from_vecs(lawrence_twist(c, to_vecs(sym)).points);
    });

    m.def("circuit", [](const py::handle& gamma) {
        Circuit c = circuit(to_vec(gamma));
        return py::make_tuple(from_vecs(c.config.points), c.polytope);
    });
    m.def("alphas_betas", [](const py::handle& gamma) {
        AlphaBeta ab = alphas_betas(to_vec(gamma));
        py::dict r;
        py::list as, bs;
        for (const Rat& a : ab.alphas) as.append(rat_str(a));
        for (const Rat& b : ab.betas) bs.append(rat_str(b));
        r["alphas"] = as;
        r["betas"] = bs;
        r["K"] = ab.K;
        r["m_minus"] = ab.m_minus;
        return r;
    });
    m.def("cgf_local_hstar",
          [](const py::handle& gamma) { return from_vec(cgf_local_hstar(to_vec(gamma)).lstar); });

    m.def("scenario_names", &scenario_names);
    m.def("run_scenario",
          [](const std::string& name, std::uint64_t seed, int count) {
              py::list out;
              for (const VerificationReport& r : run_scenario(name, seed, count)) {
                  py::dict d;
                  d["scenario"] = r.scenario;
                  d["instance"] = r.instance;
                  d["left"] = r.left;
                  d["right"] = r.right;
                  d["pass"] = r.pass;
                  d["timing_ms"] = r.timing_ms;
                  out.append(d);
              }
              return out;
          },
          py::arg("name"), py::arg("seed") = 1, py::arg("count") = 0);

    m.def("set_counting_budget", &set_counting_budget);
    m.def("counting_budget", &counting_budget);
}

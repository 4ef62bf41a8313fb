#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/khovanskii.hpp"
#include "sumsetlab/minimal.hpp"
#include "sumsetlab/solve.hpp"
#include "sumsetlab/structure.hpp"

namespace py = pybind11;
using namespace sumsetlab;

namespace {

EnumerationBudget g_budget;

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int from_py(const py::handle& h) {
    return Int(py::str(h).cast<std::string>());
}

py::object to_fraction(const Rat& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(boost::multiprecision::numerator(r)),
                    to_py(boost::multiprecision::denominator(r)));
}

Point point_from_py(const py::handle& seq) {
    Point p;
    for (const auto& c : seq) p.push_back(from_py(c));
    return p;
}

py::tuple point_to_py(const Point& p) {
    py::tuple t(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) t[i] = to_py(p[i]);
    return t;
}

PointSet set_from_py(const py::iterable& pts) {
    std::vector<Point> v;
    for (const auto& p : pts) v.push_back(point_from_py(p));
    if (v.empty()) throw UsageError("empty point list");
    return PointSet(std::move(v));
}

py::list set_to_py(const PointSet& s) {
    py::list out;
    for (const Point& p : s) out.append(point_to_py(p));
    return out;
}

py::dict poly_to_py(const RationalPolynomial& p) {
    py::list coeffs;
    for (const Rat& c : p.coefficients()) coeffs.append(to_fraction(c));
    py::dict d;
    d["coefficients"] = coeffs;
    d["pretty"] = p.to_string();
    d["degree"] = p.degree();
    return d;
}

IntegerMatrix matrix_from_py(const py::iterable& rows) {
    IntegerMatrix m;
    for (const auto& row : rows) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(from_py(v));
        m.entries.push_back(std::move(r));
    }
    return m;
}

std::vector<Int> vec_from_py(const py::iterable& seq) {
    std::vector<Int> v;
    for (const auto& x : seq) v.push_back(from_py(x));
    return v;
}

py::list vec_to_py(const std::vector<Int>& v) {
    py::list out;
    for (const Int& x : v) out.append(to_py(x));
    return out;
}

py::list thresholds_to_py(const ThresholdReport& rep) {
    py::list out;
    for (const auto& e : rep.entries) {
        py::dict d;
        d["name"] = e.name;
        d["applicable"] = e.applicable;
        d["exact"] = e.exact;
        d["value"] = to_py(e.value);
        out.append(d);
    }
    return out;
}

FiniteAbelianGroup group_from_py(const py::iterable& invariants) {
    std::vector<Int> inv;
    for (const auto& v : invariants) inv.push_back(from_py(v));
    return group_from_invariants(inv);
}

}  // namespace

PYBIND11_MODULE(_sumsetlab, m) {
    m.doc() = "exact iterated-sumset computations in Z^d";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<BoundViolationError>(m, "BoundViolationError", PyExc_RuntimeError);

    m.def("set_budget", [](unsigned long long max_points, unsigned long long max_nodes) {
        g_budget.max_points = max_points;
        g_budget.max_nodes = max_nodes;
    }, py::arg("max_points") = 10'000'000ull, py::arg("max_nodes") = 8'000'000ull);

    m.def("sumset", [](const py::iterable& a, int n) {
        return set_to_py(sumset(set_from_py(a), n, g_budget));
    }, py::arg("points"), py::arg("n"));

    m.def("growth_table", [](const py::iterable& a, int n_max) {
        GrowthTable t = growth_table(set_from_py(a), n_max, g_budget);
        return vec_to_py(t.sizes);
    }, py::arg("points"), py::arg("n_max"));

    m.def("width", [](const py::iterable& a) { return to_py(width(set_from_py(a))); });

    m.def("min_rep_length", [](const py::iterable& a, const py::iterable& v, int cap) {
        auto r = min_rep_length(set_from_py(a), point_from_py(v), cap, g_budget);
        return r ? py::object(py::int_(*r)) : py::object(py::none());
    }, py::arg("points"), py::arg("v"), py::arg("cap") = 256);

    m.def("psa_membership", [](const py::iterable& a, const py::iterable& x) {
        return psa_membership(set_from_py(a), point_from_py(x), g_budget);
    }, py::arg("points"), py::arg("x"));

    m.def("exceptional_set", [](const py::iterable& a, const py::iterable& region, long long scale) {
        PolytopeDescription reg = convex_hull(set_from_py(region));
        return set_to_py(exceptional_set(set_from_py(a), reg, Int(scale), g_budget));
    }, py::arg("points"), py::arg("region_points"), py::arg("scale") = 1,
       "E(A) intersected with scale * hull(region_points)");

    m.def("convex_hull", [](const py::iterable& a) {
        PolytopeDescription h = convex_hull(set_from_py(a));
        py::dict d;
        d["vertices"] = set_to_py(h.vertices);
        py::list facets;
        for (const Facet& f : h.facets) {
            py::dict fd;
            fd["normal"] = point_to_py(f.normal);
            fd["offset"] = to_fraction(f.offset);
            facets.append(fd);
        }
        d["facets"] = facets;
        d["affine_dim"] = h.affine_dim;
        return d;
    });

    m.def("cone_normals", [](const py::iterable& a) {
        ConeDescription c = cone_of(set_from_py(a));
        py::list out;
        for (const Point& n : c.normals) out.append(point_to_py(n));
        return out;
    });

    m.def("is_simplex", [](const py::iterable& a) -> py::object {
        auto b = is_simplex(set_from_py(a));
        return b ? py::object(set_to_py(*b)) : py::object(py::none());
    });

    m.def("normalized_volume",
          [](const py::iterable& a) { return to_py(normalized_volume(set_from_py(a))); });

    m.def("caratheodory_cover", [](const py::iterable& a) {
        py::list out;
        for (const PointSet& s : caratheodory_cover(set_from_py(a))) out.append(set_to_py(s));
        return out;
    });

    m.def("polytope_lattice_points",
          [](const py::iterable& hull_points, long long n, const py::iterable& lattice_gens,
             const py::iterable& shift) {
              PolytopeDescription p = convex_hull(set_from_py(hull_points));
              IntegerLattice l = hermite_normal_form(
                  [&] {
                      std::vector<Point> g;
                      for (const auto& x : lattice_gens) g.push_back(point_from_py(x));
                      return g;
                  }());
              return set_to_py(polytope_lattice_points(p, Int(n), l, point_from_py(shift), g_budget));
          },
          py::arg("hull_points"), py::arg("n"), py::arg("lattice_generators"), py::arg("shift"));

    m.def("hermite_normal_form", [](const py::iterable& gens) {
        std::vector<Point> g;
        for (const auto& x : gens) g.push_back(point_from_py(x));
        IntegerLattice l = hermite_normal_form(g);
        py::list out;
        for (const Point& b : l.basis()) out.append(point_to_py(b));
        return out;
    });

    m.def("lattice_contains", [](const py::iterable& gens, const py::iterable& x) {
        std::vector<Point> g;
        for (const auto& p : gens) g.push_back(point_from_py(p));
        return hermite_normal_form(g).contains(point_from_py(x));
    });

    m.def("quotient_invariants", [](const py::iterable& sup, const py::iterable& sub) {
        std::vector<Point> gs, gb;
        for (const auto& p : sup) gs.push_back(point_from_py(p));
        for (const auto& p : sub) gb.push_back(point_from_py(p));
        auto g = quotient_group(hermite_normal_form(gs), hermite_normal_form(gb));
        return vec_to_py(g.invariant_factors());
    });

    m.def("davenport_constant", [](const py::iterable& invariants) {
        return davenport_constant(group_from_py(invariants), g_budget);
    });

    m.def("k_constant", [](const py::iterable& invariants, const py::iterable& h) {
        FiniteAbelianGroup g = group_from_py(invariants);
        std::vector<std::vector<Int>> hs;
        for (const auto& e : h) hs.push_back(vec_from_py(e.cast<py::iterable>()));
        return k_constant(g, hs, g_budget);
    });

    m.def("b_minimal", [](const py::iterable& a, const py::iterable& basis, int cap) {
        PointSet A = set_from_py(a);
        PointSet B(A.dim());
        std::vector<Point> bpts;
        for (const auto& p : basis) bpts.push_back(point_from_py(p));
        if (!bpts.empty()) B = PointSet(A.dim(), bpts);
        BMinimalFamily fam = b_minimal_elements(A, B, cap, g_budget);
        py::dict d;
        py::list elems;
        for (const auto& e : fam.elements) {
            py::dict x;
            x["u"] = point_to_py(e.u);
            x["rep_length"] = e.rep_length;
            elems.append(x);
        }
        d["elements"] = elems;
        d["complete"] = fam.complete;
        d["K"] = fam.complete ? py::object(py::int_(K_of(fam))) : py::object(py::none());
        return d;
    }, py::arg("points"), py::arg("basis"), py::arg("cap") = 256);

    m.def("minimal_useless", [](const py::iterable& a, int cap) {
        UselessFamily fam = minimal_useless(set_from_py(a), cap, g_budget);
        py::dict d;
        py::list members;
        for (const auto& u : fam.members) {
            py::dict e;
            e["exponents"] = vec_to_py(u.exponents);
            e["witness"] = vec_to_py(u.witness);
            members.append(e);
        }
        d["members"] = members;
        d["certified"] = fam.certified;
        d["cap_used"] = fam.cap_used;
        return d;
    }, py::arg("points"), py::arg("cap") = 6);

    m.def("khovanskii_general", [](const py::iterable& a, int cap) {
        UselessFamily fam = minimal_useless(set_from_py(a), cap, g_budget);
        py::dict d = poly_to_py(khovanskii_poly_general(fam, g_budget));
        d["certified"] = fam.certified;
        return d;
    }, py::arg("points"), py::arg("cap") = 6);

    m.def("fit_growth", [](const py::iterable& a, int n_max) {
        PointSet A = set_from_py(a);
        int d = convex_hull(A).affine_dim;
        FitResult fit = fit_polynomial(growth_table(A, n_max, g_budget), d);
        py::dict out = poly_to_py(fit.polynomial);
        out["onset"] = fit.empirical_onset;
        out["horizon"] = fit.horizon;
        return out;
    }, py::arg("points"), py::arg("n_max"));

    m.def("khovanskii_simplex", [](const py::iterable& a) {
        PointSet A = set_from_py(a);
        PolytopeDescription hull = convex_hull(A);
        A = translate(A, neg(hull.vertices[0]));
        SimplexPolyResult sp = khovanskii_poly_simplex(A, g_budget);
        py::dict d;
        d["total"] = poly_to_py(sp.total);
        d["onset"] = sp.onset;
        d["K"] = K_of(sp.family);
        d["k_bound"] = sp.k_bound;
        py::list cosets;
        for (const auto& cd : sp.cosets) {
            py::dict c;
            c["residues"] = vec_to_py(cd.residues);
            c["polynomial"] = poly_to_py(cd.polynomial);
            c["n_full"] = to_py(cd.n_full);
            auto refinement = onset_refinement(cd);
            c["h"] = refinement.h;
            c["refined_onset"] = to_py(refinement.refined_onset);
            cosets.append(c);
        }
        d["cosets"] = cosets;
        return d;
    }, py::arg("points"), "translates the first hull vertex to 0 before applying the coset formula");

    m.def("khovanskii_thresholds",
          [](const py::iterable& a) { return thresholds_to_py(khovanskii_thresholds(set_from_py(a))); });
    m.def("structure_thresholds", [](const py::iterable& a) {
        return thresholds_to_py(structure_thresholds(set_from_py(a), g_budget));
    });

    m.def("rhs_structure_set", [](const py::iterable& a, int n) {
        return set_to_py(rhs_structure_set(set_from_py(a), n, g_budget));
    });

    m.def("verify_structure", [](const py::iterable& a, int n) {
        StructureVerdict v = verify_structure(set_from_py(a), n, g_budget);
        py::dict d;
        d["n"] = v.n;
        d["equal"] = v.equal;
        d["lhs_size"] = to_py(v.lhs_size);
        d["rhs_size"] = to_py(v.rhs_size);
        d["inclusion"] = v.lhs_subset_of_rhs;
        d["witness"] = v.witness ? py::object(point_to_py(*v.witness)) : py::object(py::none());
        return d;
    });

    m.def("structure_onset", [](const py::iterable& a, int n_max) {
        StructureReport r = empirical_structure_onset(set_from_py(a), n_max, g_budget);
        py::dict d;
        d["onset"] = r.empirical_onset;
        d["horizon"] = r.horizon;
        py::list verdicts;
        for (const auto& v : r.verdicts) {
            py::dict e;
            e["n"] = v.n;
            e["equal"] = v.equal;
            e["inclusion"] = v.lhs_subset_of_rhs;
            verdicts.append(e);
        }
        d["verdicts"] = verdicts;
        return d;
    });

    m.def("small_kernel_vector", [](const py::iterable& matrix) {
        return point_to_py(small_kernel_vector(matrix_from_py(matrix)));
    });

    m.def("bounded_kernel_basis", [](const py::iterable& matrix) {
        KernelBasisResult r = bounded_kernel_basis(matrix_from_py(matrix));
        py::dict d;
        py::list basis;
        for (const auto& v : r.basis) basis.append(point_to_py(v));
        d["basis"] = basis;
        d["norm_product"] = to_py(r.norm_product);
        d["bound_holds"] = r.bound_holds;
        return d;
    });

    m.def("positive_solution",
          [](const py::iterable& matrix, const py::iterable& rhs, const py::iterable& witness) {
              return vec_to_py(
                  positive_solution(matrix_from_py(matrix), vec_from_py(rhs), vec_from_py(witness)));
          });

    m.def("minimal_positive_solutions",
          [](const py::iterable& matrix, const py::iterable& rhs, int n1, long long box_cap) {
              MinimalSolutionFamily fam = minimal_positive_solutions(
                  matrix_from_py(matrix), vec_from_py(rhs), n1, Int(box_cap), g_budget);
              py::dict d;
              py::list sols;
              for (const auto& s : fam.solutions) sols.append(vec_to_py(s));
              d["solutions"] = sols;
              d["certified"] = fam.certified;
              d["lemma_bound"] = to_py(fam.lemma_bound);
              return d;
          },
          py::arg("matrix"), py::arg("rhs"), py::arg("n1"), py::arg("box_cap") = 100000);

    m.def("minmax_identity", [](const py::iterable& values) {
        return to_py(minmax_inclusion_exclusion(vec_from_py(values)));
    });
}

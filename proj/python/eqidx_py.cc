#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqidx/gspace.hpp"
#include "eqidx/index_calc.hpp"
#include "eqidx/invertible.hpp"

namespace py = pybind11;
using namespace eqidx;

namespace {

// Holder for the shared, immutable ring.
struct Ring {
  RingPtr ptr;
};

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(numerator_i64(r), denominator_i64(r));
}

Rational to_rational(const py::handle& h) {
  return make_rational(h.attr("numerator").cast<std::int64_t>(), h.attr("denominator").cast<std::int64_t>());
}

SubgroupId subgroup_of(const RingPtr& ring, const std::string& label) {
  auto h = ring->lattice().find_label(label);
  if (!h) throw DomainError("unknown subgroup label '" + label + "'");
  return *h;
}

BurnsideElement element_of(const RingPtr& ring, const std::map<std::string, std::int64_t>& terms) {
  std::vector<std::int64_t> c(ring->rank(), 0);
  for (const auto& [label, v] : terms) c[ring->lattice().class_of(subgroup_of(ring, label))] += v;
  return ring->element(std::move(c));
}

std::map<std::string, std::int64_t> terms_of(const BurnsideElement& b) {
  std::map<std::string, std::int64_t> out;
  for (ClassId c = 0; c < b.ring().rank(); ++c)
    if (b.coeff(c) != 0) out[b.ring().lattice().class_label(c)] = b.coeff(c);
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>((i + 1) % n);
  return FiniteGroup::from_permutations(n, {p});
}

std::vector<std::int64_t> per_subgroup(const RingPtr& ring, const std::map<std::string, std::int64_t>& values) {
  const auto& lat = ring->lattice();
  std::vector<std::optional<std::int64_t>> v(lat.size());
  for (const auto& [label, x] : values) v[subgroup_of(ring, label)] = x;
  std::vector<std::int64_t> out;
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    if (!v[h]) throw DomainError("missing value for " + lat.label(h));
    out.push_back(*v[h]);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Burnside ring valued indices and Euler characteristics";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Ring>(m, "BurnsideRing")
      .def_static("cyclic", [](std::size_t n) { return Ring{BurnsideRing::create(cyclic_group(n))}; })
      .def_static(
          "from_permutations",
          [](const std::vector<std::vector<int>>& gens, std::size_t degree) {
            if (degree == 0 && !gens.empty()) degree = gens.front().size();
            return Ring{BurnsideRing::create(FiniteGroup::from_permutations(degree, gens))};
          },
          py::arg("generators"), py::arg("degree") = 0)
      .def_static(
          "from_phases",
          [](const std::vector<std::vector<py::object>>& gens, std::size_t dim) {
            std::vector<std::vector<Rational>> g;
            for (const auto& row : gens) {
              std::vector<Rational> r;
              for (const auto& x : row) r.push_back(to_rational(x));
              g.push_back(std::move(r));
            }
            if (dim == 0 && !g.empty()) dim = g.front().size();
            return Ring{BurnsideRing::create(FiniteGroup::from_phases(dim, g))};
          },
          py::arg("generators"), py::arg("dim") = 0)
      .def_property_readonly("order", [](const Ring& r) { return r.ptr->group().order(); })
      .def_property_readonly("rank", [](const Ring& r) { return r.ptr->rank(); })
      .def_property_readonly("abelian", [](const Ring& r) { return r.ptr->group().is_abelian(); })
      .def("subgroups",
           [](const Ring& r) {
             std::vector<std::string> out;
             for (SubgroupId h = 0; h < r.ptr->lattice().size(); ++h) out.push_back(r.ptr->lattice().label(h));
             return out;
           })
      .def("classes",
           [](const Ring& r) {
             std::vector<std::string> out;
             for (ClassId c = 0; c < r.ptr->rank(); ++c) out.push_back(r.ptr->lattice().class_label(c));
             return out;
           })
      .def("marks",
           [](const Ring& r) {
             std::vector<std::vector<std::int64_t>> out(r.ptr->rank());
             for (ClassId c = 0; c < r.ptr->rank(); ++c)
               for (ClassId h = 0; h < r.ptr->rank(); ++h) out[c].push_back(r.ptr->marks()(c, h));
             return out;
           })
      .def("one", [](const Ring& r) { return r.ptr->one(); })
      .def("zero", [](const Ring& r) { return r.ptr->zero(); })
      .def("orbit", [](const Ring& r, const std::string& h) { return r.ptr->orbit(subgroup_of(r.ptr, h)); })
      .def("element", [](const Ring& r, const std::map<std::string, std::int64_t>& t) { return element_of(r.ptr, t); })
      .def("subgroup_ring",
           [](const Ring& r, const std::string& h) { return Ring{r.ptr->subgroup_ring(subgroup_of(r.ptr, h))}; })
      .def("invert",
           [](const Ring& r, const std::map<std::string, std::int64_t>& values) {
             return index_from_fixed_indices({r.ptr, per_subgroup(r.ptr, values), std::nullopt});
           },
           "Index from the fixed-set indices of every subgroup.")
      .def("gsv",
           [](const Ring& r, const std::map<std::string, std::int64_t>& dims,
              const std::map<std::string, std::int64_t>& fixed_dim, std::int64_t k) {
             std::map<SubgroupId, std::int64_t> d;
             for (const auto& [label, v] : dims) d[subgroup_of(r.ptr, label)] = v;
             return gsv_assemble_from_dims(r.ptr, d, per_subgroup(r.ptr, fixed_dim), k);
           },
           py::arg("dims"), py::arg("fixed_dim"), py::arg("k"));

  py::class_<BurnsideElement>(m, "BurnsideElement")
      .def("terms", &terms_of)
      .def("cardinality", [](const BurnsideElement& b) { return cardinality(b); })
      .def("r_k", [](const BurnsideElement& b, int k) { return r_k(b, k); }, py::arg("k"))
      .def("fixed_indices",
           [](const BurnsideElement& b) {
             auto f = fixed_indices_from_index(b);
             std::map<std::string, std::int64_t> out;
             for (SubgroupId h = 0; h < b.ring().lattice().size(); ++h) out[b.ring().lattice().label(h)] = f.per_subgroup[h];
             return out;
           })
      .def("restrict", [](const BurnsideElement& b, const Ring& sub) { return restrict(b, sub.ptr); })
      .def("induce", [](const BurnsideElement& b, const Ring& target) { return induce(b, target.ptr); })
      .def("__add__", [](const BurnsideElement& a, const BurnsideElement& b) { return a + b; })
      .def("__sub__", [](const BurnsideElement& a, const BurnsideElement& b) { return a - b; })
      .def("__mul__", [](const BurnsideElement& a, const BurnsideElement& b) { return a * b; })
      .def("__mul__", [](const BurnsideElement& a, std::int64_t k) { return k * a; })
      .def("__rmul__", [](const BurnsideElement& a, std::int64_t k) { return k * a; })
      .def("__neg__", [](const BurnsideElement& a) { return -a; })
      .def("__eq__", [](const BurnsideElement& a, const BurnsideElement& b) { return a == b; })
      .def("__str__", &BurnsideElement::to_string)
      .def("__repr__", [](const BurnsideElement& b) { return "BurnsideElement(" + b.to_string() + ")"; });

  m.def(
      "chi_G_simplicial",
      [](std::size_t vertices, const std::vector<Simplex>& simplices,
         const std::vector<std::vector<std::size_t>>& generators) {
        auto x = GSimplicialComplex::from_generators(SimplicialComplex::from_simplices(vertices, simplices), generators);
        if (!x.is_regular()) x = barycentric_subdivide(x);
        return py::make_tuple(Ring{x.ring()}, chi_G_simplicial(x), chi_k_direct(x, 1));
      },
      py::arg("vertices"), py::arg("simplices"), py::arg("generators"),
      "(ring, chi_G, orbifold Euler characteristic) of a simplicial G-complex.");

  m.def(
      "poincare_hopf",
      [](const BurnsideElement& chi_g, const std::vector<std::pair<std::string, BurnsideElement>>& orbits) {
        std::vector<SingularOrbitDatum> data;
        for (const auto& [label, local] : orbits) data.push_back({subgroup_of(chi_g.ring_ptr(), label), local});
        auto rep = poincare_hopf_check(chi_g, data);
        return py::make_tuple(rep.pass, rep.discrepancy);
      },
      py::arg("chi_G"), py::arg("orbits"));

  py::class_<InvertiblePolynomial>(m, "InvertiblePolynomial")
      .def(py::init([](const IntMatrix& e) { return validate(e); }), py::arg("E"))
      .def_property_readonly("num_variables", &InvertiblePolynomial::num_variables)
      .def_property_readonly("det", &InvertiblePolynomial::det)
      .def_property_readonly("exponents", &InvertiblePolynomial::exponents)
      .def_property_readonly("weights",
                             [](const InvertiblePolynomial& f) {
                               py::list out;
                               for (const auto& w : f.weights()) out.append(fraction(w));
                               return out;
                             })
      .def_property_readonly("milnor_number", [](const InvertiblePolynomial& f) { return milnor_number(f); })
      .def("atoms",
           [](const InvertiblePolynomial& f) {
             py::list out;
             for (const auto& a : f.atoms()) out.append(py::make_tuple(atom_kind_name(a.kind), a.vars, a.exponents));
             return out;
           })
      .def("transpose", [](const InvertiblePolynomial& f) { return transpose(f); })
      .def("symmetry_ring", [](const InvertiblePolynomial& f) { return Ring{BurnsideRing::create(symmetry_group(f))}; })
      .def("chi_G", [](const InvertiblePolynomial& f, const Ring& r) { return chi_G_milnor(f, r.ptr); })
      .def("index", [](const InvertiblePolynomial& f, const Ring& r) { return index_df(f, r.ptr); })
      .def("duality",
           [](const InvertiblePolynomial& f) {
             DualityPair pair(f);
             auto rep = duality_check(pair);
             py::list rows;
             for (const auto& p : rep.pairs)
               rows.append(py::make_tuple(pair.ring()->lattice().label(p.h), pair.dual_ring()->lattice().label(p.h_dual),
                                          p.r1, p.r1_dual));
             py::dict out;
             out["r0"] = rep.r0;
             out["r0_dual"] = rep.r0_dual;
             out["pairs"] = rows;
             out["r1_equal"] = rep.r1_equal();
             out["r1_equal_up_to_sign"] = rep.r1_equal_signed();
             return out;
           })
      .def("__str__", &InvertiblePolynomial::to_string)
      .def("__repr__", [](const InvertiblePolynomial& f) { return "InvertiblePolynomial(" + f.to_string() + ")"; });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "proxkit/corpus.hpp"
#include "proxkit/dot.hpp"
#include "proxkit/errors.hpp"
#include "proxkit/exhaustive.hpp"
#include "proxkit/generate.hpp"
#include "proxkit/morphism.hpp"
#include "proxkit/pospace.hpp"

namespace py = pybind11;
using namespace proxkit;

PYBIND11_MODULE(_proxkit, m) {
    m.doc() = "finite distributive lattices, subordinations and their dual spaces";

    py::register_exception<Error>(m, "Error");

    py::class_<SmallSet>(m, "ElementSet")
        .def(py::init([](uint32_t universe, const std::vector<uint32_t>& members) {
                 SmallSet s = SmallSet::empty(universe);
                 for (uint32_t i : members) s.add(i);
                 return s;
             }),
             py::arg("universe"), py::arg("members") = std::vector<uint32_t>{})
        .def_property_readonly("universe", &SmallSet::universe)
        .def("indices", &SmallSet::indices)
        .def("contains", &SmallSet::contains)
        .def("count", &SmallSet::count)
        .def("subset_of", &SmallSet::subset_of)
        .def("complement", &SmallSet::complement)
        .def("__and__", &SmallSet::operator&)
        .def("__or__", &SmallSet::operator|)
        .def("__eq__", [](const SmallSet& a, const SmallSet& b) { return a == b; })
        .def("__len__", &SmallSet::count)
        .def("__repr__", [](const SmallSet& s) {
            std::string out = "ElementSet{";
            bool first = true;
            for (uint32_t i : s.indices()) {
                if (!first) out += ",";
                out += std::to_string(i);
                first = false;
            }
            return out + "}";
        });

    py::class_<Rel>(m, "Relation")
        .def(py::init<uint32_t>(), py::arg("size"))
        .def(py::init([](uint32_t size,
                         const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
                 Rel r(size);
                 for (auto [i, j] : pairs) r.set(i, j);
                 return r;
             }),
             py::arg("size"), py::arg("pairs"))
        .def_property_readonly("size", &Rel::size)
        .def("at", &Rel::at)
        .def("set", &Rel::set, py::arg("i"), py::arg("j"), py::arg("value") = true)
        .def("pairs", &Rel::pairs)
        .def("reflexive", &Rel::reflexive)
        .def("transitive", &Rel::transitive)
        .def("preorder", &Rel::preorder)
        .def("__eq__", [](const Rel& a, const Rel& b) { return a == b; });

    py::class_<BiRel>(m, "BiRelation")
        .def(py::init([](uint32_t rows, uint32_t cols,
                         const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
                 BiRel r(rows, cols);
                 for (auto [i, j] : pairs) r.set(i, j);
                 return r;
             }),
             py::arg("rows"), py::arg("cols"),
             py::arg("pairs") = std::vector<std::pair<uint32_t, uint32_t>>{})
        .def_property_readonly("rows", &BiRel::rows)
        .def_property_readonly("cols", &BiRel::cols)
        .def("at", &BiRel::at)
        .def("pairs", &BiRel::pairs)
        .def("__eq__", [](const BiRel& a, const BiRel& b) { return a == b; });

    py::class_<Poset>(m, "Poset")
        .def_property_readonly("size", &Poset::size)
        .def_property_readonly("names", [](const Poset& p) { return p.names(); })
        .def("leq", &Poset::leq)
        .def("hasse_edges", &Poset::hasse_edges)
        .def("all_upsets", &Poset::all_upsets)
        .def("dual", &Poset::dual)
        .def("as_relation", &Poset::as_relation)
        .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

    py::class_<Lattice, std::shared_ptr<Lattice>>(m, "Lattice")
        .def_property_readonly("size", &Lattice::size)
        .def_property_readonly("poset", &Lattice::poset)
        .def_property_readonly("bottom", &Lattice::bottom)
        .def_property_readonly("top", &Lattice::top)
        .def("leq", &Lattice::leq)
        .def("meet", &Lattice::meet)
        .def("join", &Lattice::join)
        .def("name", &Lattice::name);

    py::class_<PriestleySpace, std::shared_ptr<PriestleySpace>>(m, "PriestleySpace")
        .def_readonly("source", &PriestleySpace::source)
        .def_readonly("points", &PriestleySpace::points)
        .def_readonly("order", &PriestleySpace::order)
        .def_property_readonly("size", &PriestleySpace::size);

    py::class_<UpsetLattice>(m, "UpsetLattice")
        .def_readonly("lattice", &UpsetLattice::lattice)
        .def_readonly("upset_of", &UpsetLattice::upset_of)
        .def("index_of", &UpsetLattice::index_of);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("passed", &CheckResult::pass)
        .def_readonly("witness", &CheckResult::witness)
        .def_readonly("detail", &CheckResult::detail)
        .def("__bool__", [](const CheckResult& c) { return c.pass; });

    py::enum_<Axiom>(m, "Axiom")
        .value("S1", Axiom::S1)
        .value("S2", Axiom::S2)
        .value("S3", Axiom::S3)
        .value("S4", Axiom::S4)
        .value("S5", Axiom::S5)
        .value("S6", Axiom::S6)
        .value("S8", Axiom::S8);

    py::class_<AxiomFlags>(m, "AxiomFlags")
        .def_readonly("s1", &AxiomFlags::s1)
        .def_readonly("s2", &AxiomFlags::s2)
        .def_readonly("s3", &AxiomFlags::s3)
        .def_readonly("s4", &AxiomFlags::s4)
        .def_readonly("s5", &AxiomFlags::s5)
        .def_readonly("s6", &AxiomFlags::s6)
        .def_readonly("s8", &AxiomFlags::s8)
        .def("is_subordination", &AxiomFlags::is_subordination)
        .def("is_proximity", &AxiomFlags::is_proximity);

    py::class_<Subordination>(m, "Subordination")
        .def_readonly("lattice", &Subordination::lattice)
        .def_readonly("rel", &Subordination::rel)
        .def_readonly("flags", &Subordination::flags)
        .def("prec", &Subordination::prec);

    py::class_<RoundFilter>(m, "RoundFilter")
        .def(py::init<SmallSet>())
        .def_readonly("set", &RoundFilter::set);
    py::class_<End>(m, "End").def_readonly("set", &End::set);

    py::class_<GleasonFlags>(m, "GleasonFlags")
        .def_readonly("closed", &GleasonFlags::closed)
        .def_readonly("compat", &GleasonFlags::compat)
        .def_readonly("contains_leq", &GleasonFlags::contains_leq)
        .def_readonly("preorder", &GleasonFlags::preorder)
        .def_readonly("saturation", &GleasonFlags::saturation)
        .def("all", &GleasonFlags::all);

    py::class_<GleasonSpace>(m, "GleasonSpace")
        .def(py::init([](const Poset& order, const Rel& r) {
                 return GleasonSpace{order, r, std::nullopt};
             }),
             py::arg("order"), py::arg("r"))
        .def_readonly("order", &GleasonSpace::order)
        .def_readonly("r", &GleasonSpace::r)
        .def_readonly("space", &GleasonSpace::space)
        .def_property_readonly("size", &GleasonSpace::size);

    py::class_<QuotientPospace>(m, "QuotientPospace")
        .def_readonly("class_of", &QuotientPospace::class_of)
        .def_readonly("classes", &QuotientPospace::classes)
        .def_readonly("order", &QuotientPospace::order)
        .def_property_readonly("size", &QuotientPospace::size);

    py::class_<SigmaReport>(m, "SigmaReport")
        .def_readonly("passed", &SigmaReport::pass)
        .def_readonly("sigma", &SigmaReport::sigma)
        .def_readonly("well_defined", &SigmaReport::well_defined)
        .def_readonly("bijective", &SigmaReport::bijective)
        .def_readonly("order_iso", &SigmaReport::order_iso)
        .def_readonly("minimal_witness", &SigmaReport::minimal_witness)
        .def_readonly("subbase", &SigmaReport::subbase)
        .def("__bool__", [](const SigmaReport& r) { return r.pass; });

    py::class_<BirkhoffReport>(m, "BirkhoffReport")
        .def_readonly("passed", &BirkhoffReport::pass)
        .def_readonly("element_to_upset", &BirkhoffReport::element_to_upset)
        .def_readonly("upset_to_element", &BirkhoffReport::upset_to_element)
        .def_readonly("detail", &BirkhoffReport::detail)
        .def("__bool__", [](const BirkhoffReport& r) { return r.pass; });

    py::class_<PospaceReport>(m, "PospaceReport")
        .def_readonly("passed", &PospaceReport::pass)
        .def_readonly("point_to_end", &PospaceReport::point_to_end)
        .def_readonly("detail", &PospaceReport::detail)
        .def("__bool__", [](const PospaceReport& r) { return r.pass; });

    py::class_<CollapseReport>(m, "CollapseReport")
        .def_readonly("scanned", &CollapseReport::scanned)
        .def_readonly("survivors", &CollapseReport::survivors)
        .def_readonly("only_leq", &CollapseReport::only_leq)
        .def_readonly("exhaustive", &CollapseReport::exhaustive);

    py::enum_<HAxiom>(m, "HAxiom")
        .value("H0", HAxiom::H0)
        .value("H1", HAxiom::H1)
        .value("H2", HAxiom::H2);

    py::class_<HemiMorphism>(m, "HemiMorphism")
        .def(py::init([](LatticePtr src, LatticePtr tgt, std::vector<uint32_t> map) {
                 return HemiMorphism{std::move(src), std::move(tgt), std::move(map)};
             }),
             py::arg("source"), py::arg("target"), py::arg("map"))
        .def_readonly("source", &HemiMorphism::source)
        .def_readonly("target", &HemiMorphism::target)
        .def_readonly("map", &HemiMorphism::map)
        .def("__call__", &HemiMorphism::apply);

    py::class_<HemiConditionFlags>(m, "HemiConditionFlags")
        .def_readonly("c1", &HemiConditionFlags::c1)
        .def_readonly("c2", &HemiConditionFlags::c2)
        .def_readonly("c3", &HemiConditionFlags::c3)
        .def_readonly("c4", &HemiConditionFlags::c4)
        .def("strong", &HemiConditionFlags::strong);

    py::class_<HemiRelation>(m, "HemiRelation")
        .def_readonly("row_space", &HemiRelation::row_space)
        .def_readonly("col_space", &HemiRelation::col_space)
        .def_readonly("rel", &HemiRelation::rel)
        .def_readonly("flags", &HemiRelation::flags)
        .def("flipped", &HemiRelation::flipped);

    py::class_<XiMap>(m, "XiMap")
        .def_readonly("row_quotient", &XiMap::row_quotient)
        .def_readonly("col_quotient", &XiMap::col_quotient)
        .def_readonly("map", &XiMap::map);

    py::class_<NamedLattice>(m, "NamedLattice")
        .def_readonly("name", &NamedLattice::name)
        .def_readonly("lattice", &NamedLattice::lattice);

    // order core
    m.def("close_order", &close_order, py::arg("pairs"), py::arg("size"),
          py::arg("names") = std::vector<std::string>{});
    m.def("lattice_from_poset", &lattice_ptr_from_poset);
    m.def("join_irreducibles", &join_irreducibles);
    m.def("filter_generated", &filter_generated);
    m.def("ideal_generated", &ideal_generated);

    // priestley
    m.def("prime_filters", &prime_filters);
    m.def("priestley_dual", [](LatticePtr l) { return priestley_dual(std::move(l)); });
    m.def("eta", &eta);
    m.def("upset_lattice", &upset_lattice);
    m.def("downset_lattice", &downset_lattice);
    m.def("birkhoff_check", &birkhoff_check);

    // subordinations
    m.def("make_subordination", &make_subordination);
    m.def("leq_subordination", &leq_subordination);
    m.def("check_axiom", &check_axiom);
    m.def("up_arrow", py::overload_cast<const Subordination&, const SmallSet&>(&up_arrow));
    m.def("up_arrow", py::overload_cast<const Subordination&, uint32_t>(&up_arrow));
    m.def("down_arrow", py::overload_cast<const Subordination&, const SmallSet&>(&down_arrow));
    m.def("down_arrow", py::overload_cast<const Subordination&, uint32_t>(&down_arrow));
    m.def("round_filters", &round_filters);
    m.def("ends", &ends);
    m.def("mu", &mu);
    m.def("subordination_closure", &subordination_closure);
    m.def("collapse_check", &collapse_check, py::arg("lattice"),
          py::arg("sample_count") = 100000, py::arg("seed") = 0);

    // gleason spaces
    m.def("relation_from_subordination", &relation_from_subordination);
    m.def("subordination_from_relation", &subordination_from_relation);
    m.def("r_image", &r_image);
    m.def("r_preimage", &r_preimage);
    m.def("check_gleason_axioms", &check_gleason_axioms);
    m.def("r_minimals_in", &r_minimals_in);
    m.def("quotient", &quotient);
    m.def("phi", &phi);
    m.def("phi_inverse", &phi_inverse);
    m.def("sigma_check", &sigma_check);

    // morphisms
    m.def("check_h", &check_h, py::arg("h"), py::arg("which"), py::arg("src") = nullptr,
          py::arg("tgt") = nullptr);
    m.def("relation_from_hemimorphism", &relation_from_hemimorphism);
    m.def("hemimorphism_from_relation", &hemimorphism_from_relation);
    m.def("check_ofc", &check_ofc);
    m.def("check_dvc", &check_dvc);
    m.def("star", &star);
    m.def("compose_hemirelations", &compose_hemirelations);
    m.def("ends_map", &ends_map);
    m.def("xi_map", &xi_map);
    m.def("enumerate_strong_meet_hemimorphisms", &enumerate_strong_meet_hemimorphisms);

    // pospaces
    m.def("omega", &omega);
    m.def("k_set", &k_set);
    m.def("roundtrip_pospace", &roundtrip_pospace);

    // corpus and generators
    m.def("chain_poset", &chain_poset);
    m.def("antichain_poset", &antichain_poset);
    m.def("boolean_poset", &boolean_poset);
    m.def("m3_poset", &m3_poset);
    m.def("n5_poset", &n5_poset);
    m.def("chain_lattice", &chain_lattice);
    m.def("boolean_lattice", &boolean_lattice);
    m.def("corpus_lattices", &corpus_lattices);
    m.def("all_posets", &all_posets);
    m.def("random_poset", &random_poset);
    m.def("random_subordination", &random_subordination);

    // exports
    m.def("dot_poset", &dot_poset, py::arg("poset"), py::arg("graph_name") = "poset");
    m.def("dot_gleason", &dot_gleason, py::arg("gleason"), py::arg("graph_name") = "gleason");
}

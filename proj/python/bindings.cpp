// Python bindings for the braid / Alexander toolkit.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidre/alexander.hpp"
#include "braidre/braid.hpp"
#include "braidre/freegroup.hpp"
#include "braidre/laurent.hpp"
#include "braidre/presentation.hpp"
#include "braidre/realstructure.hpp"

namespace py = pybind11;
using namespace braidre;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Braid groups, Garside normal forms, real-structure factorizations, "
              "and Alexander invariants.";

    // ---- Laurent polynomials over the rationals ----
    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<>())
        .def_static("zero", &LaurentPoly::zero)
        .def_static("one", &LaurentPoly::one)
        .def_static("t", &LaurentPoly::t)
        .def_static(
            "term", [](long c, long e) { return LaurentPoly::term(Rational(c), e); },
            py::arg("coefficient"), py::arg("exponent"))
        .def("is_zero", &LaurentPoly::is_zero)
        .def("is_unit", &LaurentPoly::is_unit)
        .def("min_exp", &LaurentPoly::min_exp)
        .def("max_exp", &LaurentPoly::max_exp)
        .def("span", &LaurentPoly::span)
        .def("pow", [](const LaurentPoly& p, unsigned long n) { return p.pow(n); }, py::arg("n"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", [](const LaurentPoly& p) { return to_text(p); })
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + to_text(p) + "')"; });

    m.def("parse_laurent", &parse_laurent, py::arg("text"));
    m.def("normalize", &normalize, py::arg("p"),
          "Unit-normalized form: minimal exponent 0, primitive integer "
          "coefficients, positive leading coefficient.");
    m.def("laurent_gcd", &laurent_gcd, py::arg("a"), py::arg("b"));
    m.def("divides_up_to_units", &divides_up_to_units, py::arg("p"), py::arg("q"));
    m.def("multiplicity_of_factor", &multiplicity_of_factor, py::arg("factor"), py::arg("p"));

    // ---- braid words ----
    py::class_<BraidWord>(m, "BraidWord")
        .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters") = std::vector<int>{})
        .def_readonly("strands", &BraidWord::strands)
        .def_readonly("letters", &BraidWord::letters)
        .def("exponent_sum", &BraidWord::exponent_sum)
        .def(py::self == py::self)
        .def("__str__", [](const BraidWord& b) { return to_text(b); })
        .def("__repr__", [](const BraidWord& b) { return "BraidWord('" + to_text(b) + "')"; });

    m.def("parse_braid", &parse_braid, py::arg("text"));
    m.def("braid_text", [](const BraidWord& b) { return to_text(b); }, py::arg("b"));
    m.def("compose", [](const BraidWord& a, const BraidWord& b) { return compose(a, b); },
          py::arg("a"), py::arg("b"));
    m.def("inverse", [](const BraidWord& b) { return inverse(b); }, py::arg("b"));
    m.def("rev", &rev, py::arg("b"), "Reverse the order of the letters.");
    m.def("rmap", &rmap, py::arg("b"), "Index flip s_i -> s_(n-i).");
    m.def("free_reduce", &free_reduce, py::arg("b"));
    m.def("delta", &delta, py::arg("strands"), "Half twist.");
    m.def("block_half_twist", &block_half_twist, py::arg("strands"), py::arg("lo"), py::arg("hi"));
    m.def("block_full_twist", &block_full_twist, py::arg("strands"), py::arg("lo"), py::arg("hi"));
    m.def("stabilize", &stabilize, py::arg("b"), py::arg("strands"));
    m.def("strand_permutation", &strand_permutation, py::arg("b"));
    m.def("equals", &equals, py::arg("a"), py::arg("b"),
          "Equality in the braid group (BraidWord == compares letters only).");
    m.def("is_trivial", &is_trivial, py::arg("b"));

    // ---- Garside machinery ----
    py::class_<NormalForm>(m, "NormalForm")
        .def_readonly("strands", &NormalForm::strands)
        .def_readonly("inf", &NormalForm::inf)
        .def_readonly("factors", &NormalForm::factors)
        .def("sup", &NormalForm::sup)
        .def("canonical_length", &NormalForm::canonical_length)
        .def(py::self == py::self)
        .def("__repr__", [](const NormalForm& nf) {
            return "NormalForm(strands=" + std::to_string(nf.strands) +
                   ", inf=" + std::to_string(nf.inf) +
                   ", len=" + std::to_string(nf.canonical_length()) + ")";
        });

    m.def("left_normal_form", &left_normal_form, py::arg("b"));
    m.def("permutation_braid_word", &permutation_braid_word, py::arg("strands"), py::arg("perm"));
    m.def("normal_form_word", &normal_form_word, py::arg("nf"));
    m.def("conjugate_to_delta", &conjugate_to_delta, py::arg("b"));

    // ---- free group and the braid action ----
    py::class_<FreeWord>(m, "FreeWord")
        .def(py::init<int, std::vector<int>>(), py::arg("rank"), py::arg("letters"))
        .def_static("generator", &FreeWord::generator, py::arg("rank"), py::arg("j"))
        .def_readonly("rank", &FreeWord::rank)
        .def_readonly("letters", &FreeWord::letters)
        .def("is_identity", &FreeWord::is_identity)
        .def("exponent_sum", &FreeWord::exponent_sum)
        .def(py::self == py::self)
        .def("__str__", [](const FreeWord& w) { return to_text(w); })
        .def("__repr__", [](const FreeWord& w) { return "FreeWord('" + to_text(w) + "')"; });

    m.def("parse_free_word", &parse_free_word, py::arg("rank"), py::arg("text"));
    m.def("word_text", [](const FreeWord& w) { return to_text(w); }, py::arg("w"));
    m.def("word_mul", &mul, py::arg("a"), py::arg("b"));
    m.def("word_inverse", [](const FreeWord& w) { return inverse(w); }, py::arg("w"));

    py::class_<FreeAuto>(m, "FreeAuto")
        .def_readonly("rank", &FreeAuto::rank)
        .def_readonly("images", &FreeAuto::images)
        .def("apply", &FreeAuto::apply, py::arg("w"))
        .def("is_identity", &FreeAuto::is_identity);

    m.def("artin_action", &artin_action, py::arg("b"), py::arg("w"));
    m.def("artin_automorphism", &artin_automorphism, py::arg("b"));

    // ---- conjugation structure ----
    py::class_<ConjParams>(m, "ConjParams")
        .def(py::init<int, int>(), py::arg("strands"), py::arg("pairs"))
        .def_readonly("strands", &ConjParams::strands)
        .def_readonly("pairs", &ConjParams::pairs)
        .def("real_points", &ConjParams::real_points);

    m.def("conj_involution", &conj_involution, py::arg("params"));
    m.def("conj_bar", &conj_bar, py::arg("b"), py::arg("params"));

    // ---- presentations ----
    py::class_<Presentation>(m, "Presentation")
        .def(py::init<>())
        .def_readwrite("generators", &Presentation::generators)
        .def_readwrite("relators", &Presentation::relators)
        .def_readonly("provenance", &Presentation::provenance)
        .def("__repr__", [](const Presentation& p) {
            return "Presentation(generators=" + std::to_string(p.generators) +
                   ", relators=" + std::to_string(p.relators.size()) + ")";
        });

    m.def("van_kampen",
          [](const std::vector<BraidWord>& braids) { return van_kampen(braids); },
          py::arg("braids"));
    m.def("van_kampen",
          [](const std::vector<BraidWord>& braids, int d) { return van_kampen(braids, d); },
          py::arg("braids"), py::arg("generators"));
    m.def("link_group", &link_group, py::arg("b"));
    m.def("presentation_text", [](const Presentation& p) { return to_text(p); }, py::arg("p"));
    m.def("parse_presentation", &parse_presentation, py::arg("text"));

    // ---- Alexander invariants ----
    py::class_<SmithResult>(m, "SmithResult")
        .def_readonly("rank", &SmithResult::rank)
        .def_readonly("divisors", &SmithResult::divisors);

    py::class_<AlexanderResult>(m, "AlexanderResult")
        .def_readonly("polynomial", &AlexanderResult::polynomial)
        .def_readonly("elementary_divisors", &AlexanderResult::elementary_divisors)
        .def_readonly("free_rank_flag", &AlexanderResult::free_rank_flag)
        .def("__repr__", [](const AlexanderResult& r) {
            return "AlexanderResult(polynomial='" + to_text(r.polynomial) + "', free=" +
                   (r.free_rank_flag ? std::string("True") : std::string("False")) + ")";
        });

    m.def("alexander_matrix", &alexander_matrix, py::arg("p"));
    m.def("smith_form", &smith_form, py::arg("matrix"));
    m.def("alexander_poly", &alexander_poly, py::arg("p"));
    m.def("burau_reduced", &burau_reduced, py::arg("b"));
    m.def("laurent_det", &laurent_det, py::arg("matrix"));
    m.def("alexander_from_burau", &alexander_from_burau, py::arg("b"));
    m.def("cyclotomic_poly", &cyclotomic_poly, py::arg("n"));
    m.def("hopf_link", &hopf_link, py::arg("components"));
    m.def("delta_closure_even", &delta_closure_even, py::arg("strands"));
    m.def("delta_closure_odd", &delta_closure_odd, py::arg("strands"));
    m.def("milnor_orlik", &milnor_orlik, py::arg("a"), py::arg("b"));
    m.def("check_divisibility", &check_divisibility, py::arg("sub"), py::arg("full"));

    // ---- real-structure factorizations ----
    py::class_<RealFactorization>(m, "RealFactorization")
        .def(py::init<int, int, std::vector<BraidWord>, std::vector<BraidWord>>(),
             py::arg("strands"), py::arg("pairs"),
             py::arg("upper") = std::vector<BraidWord>{},
             py::arg("real") = std::vector<BraidWord>{})
        .def_readonly("strands", &RealFactorization::strands)
        .def_readonly("fiber", &RealFactorization::fiber)
        .def_readonly("upper", &RealFactorization::upper)
        .def_readonly("real", &RealFactorization::real)
        .def("__repr__", [](const RealFactorization& f) {
            return "RealFactorization(strands=" + std::to_string(f.strands) +
                   ", upper=" + std::to_string(f.upper.size()) +
                   ", real=" + std::to_string(f.real.size()) + ")";
        });

    m.def("derive_lower", &derive_lower, py::arg("f"));
    m.def("verify_decomposition", &verify_decomposition, py::arg("f"));
    m.def("check_central_equation", &check_central_equation, py::arg("b"));
    m.def("build_acnode", &build_acnode, py::arg("strands"), py::arg("block"));
    m.def("build_unreal_arrangement", &build_unreal_arrangement, py::arg("groups"));
    m.def("verify_garside_class", &verify_garside_class, py::arg("f"));
    m.def("factorization_text", [](const RealFactorization& f) { return to_text(f); },
          py::arg("f"));
    m.def("parse_real_factorization", &parse_real_factorization, py::arg("text"));
}

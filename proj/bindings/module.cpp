#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetarich/core.hpp"
#include "thetarich/palindromic.hpp"

namespace py = pybind11;
using namespace thetarich;

PYBIND11_MODULE(_core, m) {
    m.doc() = "theta-palindromic richness toolkit";

    py::class_<Alphabet>(m, "Alphabet")
        .def(py::init<std::vector<std::string>>())
        .def("__len__", &Alphabet::size)
        .def("name", &Alphabet::name)
        .def("parse", &Alphabet::parse);

    py::class_<Word>(m, "Word")
        .def(py::init<Alphabet, std::vector<Letter>>())
        .def("__len__", &Word::size)
        .def("__str__", &Word::display)
        .def("display", &Word::display)
        .def("__eq__", [](const Word& a, const Word& b) { return a == b; });

    py::class_<Antimorphism>(m, "Antimorphism")
        .def(py::init<Alphabet, std::vector<Letter>>())
        .def_static("reversal", &Antimorphism::reversal)
        .def("apply", &Antimorphism::apply)
        .def("palindrome", &Antimorphism::palindrome);

    m.def("theta_palindromic_closure", &theta_palindromic_closure);
    m.def("longest_theta_palindromic_suffix", &longest_theta_palindromic_suffix);
    m.def("richness_defect", [](const Antimorphism& t, const Word& w) {
        return richness_report(t, w).defect;
    });
    m.def("is_rich", [](const Antimorphism& t, const Word& w) {
        return richness_report(t, w).is_rich;
    });
}

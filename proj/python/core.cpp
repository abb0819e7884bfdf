#include "rotlab/amalgam.hpp"
#include "rotlab/certify.hpp"
#include "rotlab/errors.hpp"
#include "rotlab/explore.hpp"
#include "rotlab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rotlab;

namespace {

// Results cross the boundary as JSON text in the report format; the Python
// side parses them, so both surfaces share one serialization.
std::string dump(const Json& j) { return j.dump(); }

Word parse_in(const GroupSpec& s, const std::string& text) {
  Word w = Word::parse(text);
  check_alphabet(s, w);
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact toolkit for two-generator rotation groups in SO(3)";

  static py::exception<Error> error(mod, "Error");
  static py::exception<UsageError> usage(mod, "UsageError", error.ptr());
  static py::exception<HypothesisError> hypothesis(mod, "HypothesisError", error.ptr());
  static py::exception<UnsupportedCase> unsupported(mod, "UnsupportedCase", error.ptr());
  static py::exception<InternalError> internal(mod, "InternalError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UsageError& e) {
      usage(e.what());
    } catch (const HypothesisError& e) {
      hypothesis(e.what());
    } catch (const UnsupportedCase& e) {
      unsupported(e.what());
    } catch (const InternalError& e) {
      internal(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  mod.attr("SCHEMA_VERSION") = kSchemaVersion;

  py::class_<GroupSpec>(mod, "GroupSpec")
      .def_static("gnm", &GroupSpec::gnm, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("m"))
      .def_static("gpq", &GroupSpec::gpq, py::arg("p"), py::arg("q"))
      .def_static("hatg", &GroupSpec::hatg, py::arg("m"))
      .def_property_readonly("alphabet", &GroupSpec::alphabet)
      .def_property_readonly("label", &GroupSpec::str)
      .def("to_json", [](const GroupSpec& s) { return dump(to_json(s)); })
      .def("__eq__", &GroupSpec::operator==)
      .def("__repr__", [](const GroupSpec& s) { return "<GroupSpec " + s.str() + ">"; });

  mod.def("parse_word", [](const std::string& text) { return Word::parse(text).str(); }, py::arg("text"),
          "Canonical printed form of a word; raises UsageError (with column) on bad syntax.");

  mod.def(
      "classify",
      [](const GroupSpec& s, bool express) {
        StructureReport r = classify(s);
        Json j = to_json(r);
        j["presentation"] = r.presentation ? to_json(*r.presentation) : Json(nullptr);
        if (express) {
          Json ex = Json::array();
          for (const auto& e : express_generators(r.canonical.spec)) ex.push_back(to_json(e));
          j["expressions"] = ex;
        }
        return dump(j);
      },
      py::arg("spec"), py::arg("express") = false);

  mod.def(
      "is_identity", [](const GroupSpec& s, const std::string& w) { return dump(to_json(is_identity(s, parse_in(s, w)))); },
      py::arg("spec"), py::arg("word"));
  mod.def(
      "normalize", [](const GroupSpec& s, const std::string& w) { return dump(to_json(normalize(s, parse_in(s, w)))); },
      py::arg("spec"), py::arg("word"));
  mod.def("verify", [](const GroupSpec& s) { return dump(to_json(verify_relations(s))); }, py::arg("spec"));
  mod.def(
      "amalgam",
      [](const GroupSpec& s, const std::string& w) {
        AmalgamDecomposition d = amalgam_for(s);
        Json j = to_json(amalgam_nf(parse_in(s, w), d));
        j["decomposition"] = d.left + " *_" + d.common + " " + d.right;
        return dump(j);
      },
      py::arg("spec"), py::arg("word"));

  mod.def(
      "certify",
      [](long long m, const std::string& w, const std::string& variant) {
        Word x = Word::parse(w);
        check_alphabet(GroupSpec::hatg(m), x);
        return dump(to_json(certify_non_identity(FoundationHypotheses::from_word(m, x, parse_variant(variant)))));
      },
      py::arg("m"), py::arg("word"), py::arg("variant") = "lemma");
  mod.def(
      "ext2", [](const std::string& w, long long p, long long q) { return dump(to_json(ext2_check(Word::parse(w), p, q))); },
      py::arg("word"), py::arg("p"), py::arg("q"));
  mod.def(
      "free_cert", [](long long m, const std::string& w) { return dump(to_json(certify_free(m, Word::parse(w)))); },
      py::arg("m"), py::arg("word"));
  mod.def(
      "foundation_batch",
      [](long long m, int max_n, int max_exp) {
        py::gil_scoped_release release;
        return dump(to_json(foundation_batch(m, max_n, max_exp)));
      },
      py::arg("m"), py::arg("max_n") = 3, py::arg("max_exp") = 3);
  mod.def(
      "free_batch",
      [](long long m, int max_length) {
        py::gil_scoped_release release;
        return dump(to_json(free_batch(m, max_length)));
      },
      py::arg("m"), py::arg("max_length") = 5);

  mod.def(
      "enumerate",
      [](const GroupSpec& s, int radius, std::size_t budget) {
        py::gil_scoped_release release;
        return dump(to_json(bfs_ball(s, radius, budget ? budget : default_budget())));
      },
      py::arg("spec"), py::arg("radius"), py::arg("budget") = 0);
  mod.def(
      "growth",
      [](const GroupSpec& s, int radius, std::size_t budget) {
        py::gil_scoped_release release;
        return dump(to_json(growth_compare(s, radius, budget ? budget : default_budget())));
      },
      py::arg("spec"), py::arg("radius"), py::arg("budget") = 0);

  mod.def(
      "make_document",
      [](const std::string& command, const std::string& inputs, const std::string& result) {
        return dump(make_document(command, Json::parse(inputs), Json::parse(result)));
      },
      py::arg("command"), py::arg("inputs"), py::arg("result"));
}

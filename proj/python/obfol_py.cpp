// Python bindings: a thin JSON-string facade over the C++ core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <obf/jsonio.hpp>
#include <obf/morita.hpp>
#include <obf/movie.hpp>
#include <obf/slcalc.hpp>

namespace py = pybind11;
using namespace obf;

namespace {

std::pair<SurfaceSig, MappingClass> openbook(const std::string& j) {
  return openbook_from_json(json::parse(j));
}

std::string sl_json(const std::string& openbook_json, const std::string& braid_json) {
  auto [sig, phi] = openbook(openbook_json);
  BraidWord b = braid_from_json(json::parse(braid_json), sig);
  SlReport r = self_linking(phi, b);
  json out = sl_report_to_json(r);
  return out.dump();
}

long long c_of(const std::string& openbook_json, const std::vector<long long>& coords) {
  auto [sig, phi] = openbook(openbook_json);
  Vec v;
  for (auto x : coords) v.push_back(x);
  return c_value(phi, rel_from_rho_prime_coords(sig, v)).convert_to<long long>();
}

long long k_of(const std::string& openbook_json, const std::vector<long long>& coords) {
  auto [sig, phi] = openbook(openbook_json);
  Vec v;
  for (auto x : coords) v.push_back(x);
  return k_value(phi, rel_from_rho_prime_coords(sig, v)).convert_to<long long>();
}

py::dict compile_movie_text(const std::string& text) {
  FoliatedSurface fs = compile_movie(parse_movie(text), true);
  auto c = counts(fs);
  py::dict d;
  d["e_plus"] = c.e_plus.convert_to<long long>();
  d["e_minus"] = c.e_minus.convert_to<long long>();
  d["h_plus"] = c.h_plus.convert_to<long long>();
  d["h_minus"] = c.h_minus.convert_to<long long>();
  d["chi"] = euler_char(fs).convert_to<long long>();
  d["boundary"] = has_boundary(fs);
  if (has_boundary(fs)) d["sl"] = sl_boundary(fs).convert_to<long long>();
  d["ot_disc"] = is_transverse_ot_disc(fs);
  d["foliation"] = foliation_to_json(fs).dump();
  return d;
}

std::vector<std::string> validate_foliation_json(const std::string& j) {
  return validate(foliation_from_json(json::parse(j)));
}

}  // namespace

PYBIND11_MODULE(obfol_py, m) {
  m.doc() = "self-linking numbers of braided links in open books, and open book foliations";
  py::register_exception<InputError>(m, "InputError");
  py::register_exception<DomainError>(m, "DomainError");
  m.def("sl", &sl_json, py::arg("openbook_json"), py::arg("braid_json"),
        "Self-linking report as a JSON string.");
  m.def("c_value", &c_of, py::arg("openbook_json"), py::arg("a"),
        "c(phi, a) for a in rho' coordinates.");
  m.def("k_value", &k_of, py::arg("openbook_json"), py::arg("a"),
        "k(phi, a) for a in rho' coordinates.");
  m.def("compile_movie", &compile_movie_text, py::arg("text"),
        "Compile a movie script; returns counts, chi, sl and the foliation JSON.");
  m.def("validate_foliation", &validate_foliation_json, py::arg("foliation_json"),
        "List of violations; empty means valid.");
}

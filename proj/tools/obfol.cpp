// obfol: self-linking numbers of braided links in open books, and
// combinatorial open book foliations.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "obf/jsonio.hpp"
#include "obf/morita.hpp"
#include "obf/props.hpp"

using namespace obf;

namespace {

constexpr int kExitOk = 0, kExitDomain = 1, kExitInput = 2;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Options {
  std::string openbook, braid, foliation, movie, a_override, format = "json", suite, then;
  uint64_t seed = 1;
};

Vec parse_a(const std::string& s) {
  Vec v;
  std::istringstream is(s);
  std::string t;
  while (std::getline(is, t, ',')) v.push_back(Int(t));
  return v;
}

std::pair<SurfaceSig, MappingClass> need_openbook(const Options& o) {
  if (o.openbook.empty()) throw InputError("--openbook FILE is required");
  return openbook_from_json(load_json(o.openbook));
}

BraidWord need_braid(const Options& o, SurfaceSig sig) {
  if (o.braid.empty()) throw InputError("--braid FILE is required");
  return braid_from_json(load_json(o.braid), sig);
}

FoliatedSurface need_foliation(const Options& o) {
  if (o.foliation.empty()) throw InputError("--foliation FILE is required");
  FoliatedSurface fs = foliation_from_json(load_json(o.foliation));
  auto bad = validate(fs);
  if (!bad.empty()) throw InputError("invalid foliated surface: " + bad[0]);
  return fs;
}

void emit(const Options& o, const json& j) {
  if (o.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  for (auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
}

json surface_report(const FoliatedSurface& fs) {
  auto c = counts(fs);
  json j;
  j["schema"] = 1;
  j["e_plus"] = c.e_plus.convert_to<long long>();
  j["e_minus"] = c.e_minus.convert_to<long long>();
  j["h_plus"] = c.h_plus.convert_to<long long>();
  j["h_minus"] = c.h_minus.convert_to<long long>();
  j["chi"] = euler_char(fs).convert_to<long long>();
  j["boundary"] = has_boundary(fs);
  if (has_boundary(fs)) j["sl"] = sl_boundary(fs).convert_to<long long>();
  return j;
}

int run_foliation_cmd(const std::string& cmd, const Options& o, const FoliatedSurface& fs) {
  json j = surface_report(fs);
  if (cmd == "chi") {
    emit(o, j);
  } else if (cmd == "ot-check") {
    j["ot_disc"] = is_transverse_ot_disc(fs);
    auto w = find_ot_witness(fs);
    j["witness"] = w.has_value();
    emit(o, j);
  } else if (cmd == "be-check") {
    bool holds = be_inequality_holds(fs);
    j["violated"] = !holds;
    j["ot_disc"] = is_transverse_ot_disc(fs);
    emit(o, j);
  } else if (cmd == "validate") {
    j = json{{"schema", 1}, {"valid", true}};
    emit(o, j);
  } else {
    throw InputError("unknown follow-up command: " + cmd);
  }
  return kExitOk;
}

int dispatch(const std::string& cmd, const Options& o) {
  if (cmd == "sl" || cmd == "c" || cmd == "k") {
    auto [sig, phi] = need_openbook(o);
    if (cmd == "sl") {
      BraidWord b = need_braid(o, sig);
      std::optional<Vec> a;
      if (!o.a_override.empty()) a = parse_a(o.a_override);
      SlReport r = self_linking(phi, b, a);
      json j = sl_report_to_json(r);
      j["normal_form"] = normal_form_to_json(normal_form(rel_from_rho_prime_coords(sig, r.a)));
      emit(o, j);
    } else {
      if (o.a_override.empty()) throw InputError("--a \"x1,x2,...\" is required");
      RelClass a = rel_from_rho_prime_coords(sig, parse_a(o.a_override));
      json j{{"schema", 1}};
      if (cmd == "c")
        j["c"] = c_value(phi, a).convert_to<long long>();
      else
        j["k"] = k_value(phi, a).convert_to<long long>();
      emit(o, j);
    }
    return kExitOk;
  }
  if (cmd == "validate") {
    if (o.foliation.empty()) throw InputError("--foliation FILE is required");
    FoliatedSurface fs = foliation_from_json(load_json(o.foliation));
    auto bad = validate(fs);
    json j{{"schema", 1}, {"valid", bad.empty()}, {"violations", bad}};
    emit(o, j);
    return bad.empty() ? kExitOk : kExitInput;
  }
  if (cmd == "chi" || cmd == "ot-check" || cmd == "be-check")
    return run_foliation_cmd(cmd, o, need_foliation(o));
  if (cmd == "movie-compile") {
    if (o.movie.empty()) throw InputError("movie-compile needs a movie file argument");
    std::string text = slurp(o.movie);
    MoviePresentation m;
    if (!text.empty() && text[0] == '{')
      m = movie_from_json(json::parse(text));
    else
      m = parse_movie(text);
    FoliatedSurface fs = compile_movie(m, true);
    if (!o.then.empty()) return run_foliation_cmd(o.then, o, fs);
    json j = foliation_to_json(fs);
    j["report"] = surface_report(fs);
    emit(o, j);
    return kExitOk;
  }
  if (cmd == "props") {
    auto rs = props::run_suites(o.seed, o.suite);
    if (rs.empty()) throw InputError("unknown suite: " + o.suite);
    json suites = json::object();
    long failures = 0;
    for (auto& r : rs) {
      suites[r.name] = {{"cases", r.cases}, {"failures", r.failures}, {"notes", r.notes}};
      failures += r.failures;
    }
    emit(o, json{{"schema", 1}, {"seed", o.seed}, {"suites", suites}});
    return failures == 0 ? kExitOk : kExitDomain;
  }
  throw InputError("unknown command: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-linking numbers and open book foliations"};
  app.require_subcommand(1);
  Options o;
  std::vector<CLI::App*> subs;
  for (const char* name : {"sl", "c", "k", "validate", "chi", "ot-check", "be-check",
                           "movie-compile", "props"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("--openbook", o.openbook);
    s->add_option("--braid", o.braid);
    s->add_option("--foliation", o.foliation);
    s->add_option("--a", o.a_override);
    s->add_option("--seed", o.seed);
    s->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    s->add_option("--suite", o.suite);
    if (std::string(name) == "movie-compile") {
      s->add_option("movie", o.movie);
      s->add_option("--then", o.then);
    }
    subs.push_back(s);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInput : kExitOk;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o);
  } catch (const DomainError& e) {
    std::cout << json{{"schema", 1}, {"error", e.what()}, {"kind", "domain"}}.dump() << "\n";
    return kExitDomain;
  } catch (const InputError& e) {
    std::cout << json{{"schema", 1}, {"error", e.what()}, {"kind", "input"}}.dump() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cout << json{{"schema", 1}, {"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return kExitInput;
  }
}

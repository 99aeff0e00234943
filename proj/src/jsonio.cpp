#include "obf/jsonio.hpp"

#include <cctype>
#include <charconv>

namespace obf {

namespace {

long get_long(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("missing or non-integer field '") + key + "'");
  return j[key].get<long>();
}

// Words over a1,A1,b1,B1,... (capital = inverse) into the capped-surface
// letters p_i = 2i-1 (= beta_{g-i+1}), q_i = 2i (with alpha_j = q_{g-j+1}^-1).
FreeWord external_word(const std::string& s, int genus) {
  FreeWord w;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    char c = s[i];
    bool alpha = c == 'a' || c == 'A';
    bool beta = c == 'b' || c == 'B';
    if (!alpha && !beta) throw InputError("bad pi_1 word letter in '" + s + "'");
    int inv = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    size_t k = ++i;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    int idx = 0;
    auto res = std::from_chars(s.data() + i, s.data() + k, idx);
    if (res.ec != std::errc{} || idx < 1 || idx > genus)
      throw InputError("bad pi_1 word index in '" + s + "'");
    i = k;
    int handle = genus - idx + 1;
    if (beta)
      w.push({2 * handle - 1, inv});
    else
      w.push({2 * handle, -inv});  // alpha_j = q^{-1}
  }
  return w;
}

FreeEndo pi1_from_json(const json& j, int genus) {
  FreeEndo e = FreeEndo::identity(2 * genus);
  for (int idx = 1; idx <= genus; ++idx) {
    std::string ka = "alpha_" + std::to_string(idx), kb = "beta_" + std::to_string(idx);
    int handle = genus - idx + 1;
    if (j.contains(ka))
      e.im[2 * handle - 1] = external_word(j[ka].get<std::string>(), genus).inverse();
    if (j.contains(kb)) e.im[2 * handle - 2] = external_word(j[kb].get<std::string>(), genus);
  }
  return e;
}

}  // namespace

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an integer array");
  Vec v;
  for (auto& x : j) {
    if (!x.is_number_integer()) throw InputError("expected an integer array");
    v.push_back(Int(x.get<long long>()));
  }
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

std::pair<SurfaceSig, MappingClass> openbook_from_json(const json& j) {
  SurfaceSig sig{static_cast<int>(get_long(j, "genus")), static_cast<int>(get_long(j, "boundary"))};
  sig.check();
  std::vector<std::pair<TwistGenerator, long>> word;
  if (j.contains("word")) {
    for (auto& e : j["word"]) {
      std::string name = e.at("twist").get<std::string>();
      long power = e.contains("power") ? e["power"].get<long>() : 1;
      TwistGenerator g;
      if (name == "custom") {
        g.kind = TwistGenerator::Custom;
        g.custom_class = vec_from_json(e.at("homology"));
        if (e.contains("pi1")) g.custom_pi1 = pi1_from_json(e["pi1"], sig.genus);
      } else {
        g = TwistGenerator::parse(name, sig);
      }
      word.push_back({g, power});
    }
  }
  return {sig, from_word(sig, word)};
}

BraidWord braid_from_json(const json& j, SurfaceSig sig) {
  BraidWord b;
  b.strands = static_cast<int>(get_long(j, "strands"));
  if (j.contains("word")) {
    for (auto& e : j["word"]) {
      std::string name = e.at("gen").get<std::string>();
      BraidLetter l;
      l.power = e.contains("power") ? e["power"].get<long>() : 1;
      if (name.rfind("s_", 0) == 0)
        l.is_sigma = true;
      else if (name.rfind("r_", 0) == 0)
        l.is_sigma = false;
      else
        throw InputError("bad braid generator '" + name + "'");
      l.index = std::stoi(name.substr(2));
      b.letters.push_back(l);
    }
  }
  check_braid(sig, b);
  return b;
}

FoliatedSurface foliation_from_json(const json& j) {
  FoliatedSurface fs;
  if (j.contains("atom")) {
    std::string a = j["atom"].get<std::string>();
    if (a == "a_disc")
      fs = atom_surface(AtomKind::a_disc);
    else if (a == "b_sphere")
      fs = atom_surface(AtomKind::b_sphere);
    else if (a == "c_torus")
      fs = atom_surface(AtomKind::c_torus);
    else
      throw InputError("unknown atom kind '" + a + "'");
    return fs;
  }
  for (auto& e : j.at("elliptic")) {
    EllipticPoint p;
    p.id = e.at("id").get<std::string>();
    p.sign = static_cast<int>(get_long(e, "sign"));
    if (e.contains("binding")) p.binding = e["binding"].get<std::string>();
    fs.elliptic.push_back(p);
  }
  std::map<std::string, int> ridx;
  for (auto& e : j.at("regions")) {
    Region r;
    r.id = e.at("id").get<std::string>();
    r.kind = kind_from_name(e.at("type").get<std::string>());
    r.sign = static_cast<int>(get_long(e, "sign"));
    if (e.contains("split")) r.split = e["split"].get<bool>();
    if (e.contains("corners"))
      for (auto& c : e["corners"]) r.corners.push_back(c.get<std::string>());
    ridx[r.id] = static_cast<int>(fs.regions.size());
    fs.regions.push_back(r);
  }
  auto side_ref = [&](const std::string& s) {
    auto dot = s.rfind(".s");
    if (dot == std::string::npos) throw InputError("side reference '" + s + "' is not R.sN");
    std::string rid = s.substr(0, dot);
    if (!ridx.count(rid)) throw InputError("side reference to unknown region '" + rid + "'");
    return SideRef{ridx[rid], std::stoi(s.substr(dot + 2))};
  };
  if (j.contains("gluing"))
    for (auto& p : j["gluing"]) {
      if (!p.is_array() || p.size() != 2) throw InputError("gluing entries are pairs");
      fs.gluing.push_back({side_ref(p[0].get<std::string>()), side_ref(p[1].get<std::string>())});
    }
  return fs;
}

json foliation_to_json(const FoliatedSurface& fs) {
  json j;
  j["schema"] = 1;
  if (fs.regions.empty() && fs.atom != AtomKind::none) {
    j["atom"] = fs.atom == AtomKind::a_disc    ? "a_disc"
                : fs.atom == AtomKind::b_sphere ? "b_sphere"
                                                : "c_torus";
    return j;
  }
  j["elliptic"] = json::array();
  for (auto& e : fs.elliptic) {
    json p{{"id", e.id}, {"sign", e.sign}};
    if (!e.binding.empty()) p["binding"] = e.binding;
    j["elliptic"].push_back(p);
  }
  j["regions"] = json::array();
  for (auto& r : fs.regions) {
    json p{{"id", r.id}, {"type", kind_name(r.kind)}, {"sign", r.sign}};
    if (!r.corners.empty()) p["corners"] = r.corners;
    if (r.split) p["split"] = true;
    j["regions"].push_back(p);
  }
  j["gluing"] = json::array();
  for (auto& [a, b] : fs.gluing) {
    auto name = [&](SideRef s) {
      return fs.regions[s.region].id + ".s" + std::to_string(s.side);
    };
    j["gluing"].push_back(json::array({name(a), name(b)}));
  }
  return j;
}

json sl_report_to_json(const SlReport& r) {
  json j;
  j["schema"] = 1;
  j["sl"] = r.sl.convert_to<long long>();
  j["a"] = vec_to_json(r.a);
  j["n"] = r.n;
  j["hat_exp"] = r.hat.convert_to<long long>();
  j["pairing_term"] = r.pairing_term.convert_to<long long>();
  j["c"] = r.c.convert_to<long long>();
  return j;
}

json normal_form_to_json(const NormalForm& nf) {
  json j = json::array();
  for (auto& e : nf.entries) {
    json c;
    c["chamber"] = e.chamber.kind == Chamber::Torus ? "torus" : "annulus";
    c["index"] = e.chamber.index;
    c["coords"] = vec_to_json(e.coords);
    j.push_back(c);
  }
  return j;
}

MoviePresentation movie_from_json(const json& j) {
  // The JSON form mirrors the text form; rebuild the text and reuse the
  // parser so both stay in sync.
  std::string text;
  text += "openbook " + std::to_string(get_long(j, "genus")) + " " +
          std::to_string(get_long(j, "boundary")) + "\n";
  if (j.contains("monodromy")) text += "monodromy " + j["monodromy"].get<std::string>() + "\n";
  if (j.contains("braid")) text += "braid " + j["braid"].get<std::string>() + "\n";
  for (auto& l : j.at("leaves")) text += "leaf " + l.get<std::string>() + "\n";
  if (j.contains("events"))
    for (auto& e : j["events"]) text += "event " + e.get<std::string>() + "\n";
  if (j.contains("close")) text += "close " + j["close"].get<std::string>() + "\n";
  return parse_movie(text);
}

}  // namespace obf

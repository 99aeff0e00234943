#pragma once
// JSON (de)serialization for all CLI-facing objects.  Schema version 1.
#include <json.hpp>

#include "obf/foliation.hpp"
#include "obf/movie.hpp"
#include "obf/slcalc.hpp"

namespace obf {

using nlohmann::json;

// {"schema":1,"genus":g,"boundary":r,"word":[{"twist":"a_1","power":-2},...]}
// custom entries: {"twist":"custom","homology":[..],"pi1":{"alpha_1":"a1B1",...}}
std::pair<SurfaceSig, MappingClass> openbook_from_json(const json& j);

// {"schema":1,"strands":n,"word":[{"gen":"s_1","power":3},{"gen":"r_2","power":-1}]}
BraidWord braid_from_json(const json& j, SurfaceSig sig);

// {"schema":1,"elliptic":[{"id":..,"sign":..,"binding":..}],
//  "regions":[{"id":..,"type":"ab","sign":-1,"corners":[..],"split":false}],
//  "gluing":[["R1.s1","R2.s3"],...]}   (side indices are 0-based model slots)
// or {"schema":1,"atom":"a_disc"}.
FoliatedSurface foliation_from_json(const json& j);
json foliation_to_json(const FoliatedSurface& fs);

json sl_report_to_json(const SlReport& r);
json normal_form_to_json(const NormalForm& nf);

MoviePresentation movie_from_json(const json& j);

Vec vec_from_json(const json& j);
json vec_to_json(const Vec& v);

}  // namespace obf

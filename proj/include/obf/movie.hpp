#pragma once
// Movie presentations: a slice/event script describing leaves of the page
// foliation and describing-arc surgeries, compiled into a FoliatedSurface.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obf/foliation.hpp"
#include "obf/mapclass.hpp"
#include "obf/slcalc.hpp"

namespace obf {

struct MovieLeaf {
  std::string id;
  char type = 'a';        // 'a', 'b', 'c'
  std::string bind1, bind2;  // binding labels ("1".."r"); a uses bind1 only
  int strand = 0;         // a only
  int sign1 = 0, sign2 = 0;  // optional endpoint sign annotations (b only)
};

struct MovieEvent {
  int sign = 1;
  std::string l1, l2;
  int slot1 = 1, slot2 = 1;
  bool has_time = false;
  long tnum = 0, tden = 1;
  std::vector<std::string> new_ids;  // names for circles created by the event
};

struct MoviePresentation {
  SurfaceSig sig{0, 1};
  std::vector<std::pair<TwistGenerator, long>> monodromy;
  BraidWord braid;
  std::vector<MovieLeaf> leaves;
  std::vector<MovieEvent> events;
  std::vector<std::pair<std::string, std::string>> closure;  // final = initial
};

// Line-oriented script; see README.md for the grammar.  Throws InputError
// with a line number on malformed input.
MoviePresentation parse_movie(const std::string& text);
std::string serialize_movie(const MoviePresentation& m);

// Compile to a foliated surface.  With auto_signs, ambiguous b-endpoint signs
// are anchored deterministically instead of rejected.
FoliatedSurface compile_movie(const MoviePresentation& m, bool auto_signs = false);

// The same movie run backwards (aa/ab/bb events only): event order and
// hyperbolic signs reversed, leaf states taken from the end of the forward
// run, endpoint signs flipped.
MoviePresentation time_reverse(const MoviePresentation& m, bool auto_signs = false);

}  // namespace obf

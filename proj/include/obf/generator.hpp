#pragma once
// Randomized movie scripts and the foliated surfaces they compile to, for
// property suites.
#include <random>

#include "obf/movie.hpp"

namespace obf {

struct GenOptions {
  bool c_free = false;      // only aa/ab/bb events, no circle leaves
  int max_events = 6;
  int max_b_leaves = 4;
  double neg_bias = 0.5;    // probability that an event is negative
};

struct Generated {
  MoviePresentation movie;
  FoliatedSurface fs;
};

// Keeps sampling random movies until one compiles; always returns a surface
// that passes validate.
Generated random_surface(std::mt19937_64& rng, const GenOptions& opt = {});

// Structure-breaking mutations of a valid surface; every result must be
// flagged by validate.  Returns however many mutations apply to fs.
std::vector<FoliatedSurface> sign_mutations(const FoliatedSurface& fs);

}  // namespace obf

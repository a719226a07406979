#pragma once
#include "ncwb/action.h"
#include <memory>

namespace ncwb::config {

// validated session assembled from a plain-text config file.
// The algebra and group are heap-held so the session can be moved around
// without invalidating the group's back-pointer into the algebra.
struct Session {
	long field_order = 1; // m: lcm of every root order the config needs
	const scalar::CycloField *field = nullptr;
	std::shared_ptr<algebra::QuotientAlgebra> alg; // null when no [algebra]
	std::shared_ptr<action::ActionGroup> group;    // null when no [group]
	int degree_bound = 0;
	size_t closure_cap = 10000;
	std::string scenario; // empty when no [scenario]
};

// Plain-text format, line oriented:
//
//   [field]
//   order = auto            # or an explicit positive integer
//   [algebra]
//   preset = vn             # vn | wn | sklyanin | downup
//   n = 4                   # generator count (vn/wn)
//   a = 1                   # scalar parameters, expression syntax with zeta(k)
//   b = 2
//   c = -1
//   alpha = -2              # down-up parameters
//   beta = -1
//   degree_bound = 12       # optional; default 12 for n <= 4, 8 beyond
//   [group]
//   perm = (1 2)(3 4)       # cycle notation
//   diag = -1, zeta(4)      # diagonal matrix entries
//   matrix = 0, -1; 1, -1   # full matrix, rows separated by ';'
//   closure_cap = 10000     # optional
//   [scenario]
//   name = table-S3
//
// '#' starts a comment. With order = auto the field order is the lcm
// of all zeta(k) orders appearing in scalar entries, joined with any root
// order the named scenario requires. Errors cite "path:line:".
Session load_config(const std::string &path);
Session parse_config(const std::string &text, const std::string &label = "<config>");

} // namespace ncwb::config

#pragma once
#include "ncwb/freealg.h"
#include <map>

namespace ncwb::parser {

using freealg::FreePoly;
using freealg::Gens;
using scalar::CycloField;
using scalar::CycloScalar;

// Expression grammar (frozen; errors cite line:column):
//
//   expr    = [ "+" | "-" ] term { ("+" | "-") term } ;
//   term    = factor { "*" factor } ;          (* juxtaposition is NOT a product *)
//   factor  = primary [ "^" natural ] ;
//   primary = rational | name | "z" | "zeta" "(" natural ")" | "(" expr ")" ;
//   rational = natural [ "/" natural ] ;
//   name    = letter { letter | digit | "_" } ;
//
// A name resolves, in order, to: a generator, a bound scalar parameter,
// the field generator "z", or the function "zeta". Exponents are nonnegative.
FreePoly parse_poly(const std::string &text, std::shared_ptr<const Gens> gens,
                    const CycloField *field,
                    const std::map<std::string, CycloScalar> &params = {});

// convenience: expression with no generators allowed (pure scalar)
CycloScalar parse_scalar_expr(const std::string &text, const CycloField *field,
                              const std::map<std::string, CycloScalar> &params = {});

} // namespace ncwb::parser

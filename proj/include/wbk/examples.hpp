#pragma once
// Shipped test operads.

#include "wbk/operad.hpp"

namespace wbk {

TruncatedOperad rational_operad();          // A = Q
TruncatedOperad n3_operad();                // strictly upper triangular 3x3, basis e12, e23, e13
TruncatedOperad ass_operad(int max_arity);  // nonunital Ass, basis = orderings of the inputs
TruncatedOperad com_operad(int max_arity);  // nonunital Com

}  // namespace wbk

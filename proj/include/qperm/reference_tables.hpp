#pragma once

#include "qperm/matrix.hpp"

namespace qperm::reference {

// Published reference matrices for the Gram/Weingarten pairs at small order,
// as functions of the dimension n. Row/column order is the one used in the
// source tables, which is not this library's canonical order — comparisons
// go through match_up_to_permutation.

RationalMatrix gram_k2(int n);
RationalMatrix gram_inverse_k2(int n);
RationalMatrix gram_k3(int n);
RationalMatrix gram_inverse_k3(int n);
RationalMatrix gram_k4(int n);

}  // namespace qperm::reference

// Independent oracles used by the verification suites. Deliberately naive and
// kept apart from the canonical implementations they cross-check: homology
// dimensions via a from-scratch fraction-free elimination (no shared rref),
// tensor dimensions via direct basis enumeration.

#pragma once

#include "enricat/base.hpp"

namespace enricat::naive {

// rank by plain forward elimination with column pivot search
int rank(std::vector<std::vector<long>> rows, int p);

// dim H_degree = nullity(d_degree) - rank(d_{degree+1})
int homology_dim(const BaseValue& v, int degree);

std::vector<int> tensor_dims(const BaseValue& a, const BaseValue& b);

}  // namespace enricat::naive

#pragma once

// Torus-side invariants of Weyl elements.

#include <vector>

#include "trilocal/weyl.hpp"

namespace trilocal {

// e_{tau,i} - e_{tau,j}, i != j, as integer vectors of length sigma * n.
// Cached per shape.
const std::vector<std::vector<long long>>& roots(const EmbeddingShape& shape);

// Rank of the lattice spanned by {w(alpha) - alpha : alpha a root}.
int d_of(const WeylElement& w);

// dim t^w, the sum of the cycle counts of the parts.
int fixed_space_dim(const WeylElement& w);

int dim_group(const EmbeddingShape& shape);         // sigma n^2
int dim_flag_variety(const EmbeddingShape& shape);  // sigma n(n-1)/2
int dim_torus(const EmbeddingShape& shape);         // sigma n
int dim_borel(const EmbeddingShape& shape);         // sigma n(n+1)/2

}  // namespace trilocal

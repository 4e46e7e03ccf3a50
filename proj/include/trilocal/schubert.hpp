#pragma once

// Tangent spaces of the closures of the G-orbits U_w in G/B x G/B.

#include <string>
#include <vector>

#include "trilocal/flags.hpp"
#include "trilocal/weyl.hpp"

namespace trilocal {

// #{transpositions t : v t <= w}; the T-fixed-point tangent count of X_w at vB.
int fixed_point_tangent_count(const Permutation& w, const Permutation& v);

// Zariski tangent dimension of the Schubert variety X_w subset GL_n/B at the
// flag h (columns), from the Jacobian of Fulton's rank minors in the opposite
// chart h(1 + L). Throws PreconditionError if the flag is not in X_w.
int jacobian_tangent_dim(const Permutation& w, const RationalMatrix& h);
// Same for Ubar_w at a pair of flags.
int jacobian_tangent_dim(const WeylElement& w, const Flag& f1, const Flag& f2);

// dim T_{(B, vB)} Ubar_w = dim G/B + sum_tau T(X_{w_tau}, v_tau). Memoized.
int schubert_tangent_dim(const WeylElement& w, const WeylElement& v);
// dim Ubar_w = dim G/B + lg(w).
int orbit_closure_dim(const WeylElement& w);

bool contains_pattern(const Permutation& w, const Permutation& pattern);
// Lakshmibai-Sandhya: avoids 3412 and 4231 in every part.
bool is_smooth_everywhere(const WeylElement& w);

// dim T Ubar_w at w' + dim t^{w w'^{-1}} + lg(w' w0).
int tangent_bound(const WeylElement& w, const WeylElement& wp);

struct TangentRow {
  WeylElement w, v;
  int dim_cell = 0;
  int tangent_dim = 0;
  bool smooth = false;
};
// One row per v <= w, canonical order.
std::vector<TangentRow> tangent_table(const WeylElement& w);

struct TriangulineTangentReport {
  WeylElement w, wx;
  int dim_group = 0;
  int tangent_bound = 0;
  int delta_bound = 0;
  // Set when w = w0: lg(w_x w0) - d_{w_x w0}, equal to delta_bound there.
  std::optional<int> specialized_bound;
  bool schubert_smooth_at_point = false;
  // Smoothness of X_tri at x is equivalent to smoothness of X_w at x_pdR.
  bool tri_smooth_iff_schubert_smooth = true;
};
TriangulineTangentReport trianguline_tangent_report(const WeylElement& w, const WeylElement& wx);

// True when d_{w_x w0} < lg(w_x w0), which forces X_tri to be singular at x.
bool singularity_verdict(const WeylElement& wx);

}  // namespace trilocal

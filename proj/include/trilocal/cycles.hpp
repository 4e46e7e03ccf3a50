#pragma once

// Cycles on the irreducible components Z_w of the Steinberg variety, and the
// Breuil-Mezard style decompositions of the fibre cycles.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilocal/weyl.hpp"

namespace trilocal {

// Formal Z-combination of the [Z_w]; zero coefficients are never stored.
class Cycle {
 public:
  Cycle() = default;
  static Cycle basis(const WeylElement& w, long long c = 1);

  void add(const WeylElement& w, long long c);
  Cycle operator+(const Cycle& o) const;
  Cycle operator-(const Cycle& o) const;
  Cycle scaled(long long c) const;
  long long coeff(const WeylElement& w) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  // Drop [Z_v] unless wx <= v: these vanish in the complete local ring at x.
  Cycle localized(const WeylElement& wx) const;

  const std::map<WeylElement, long long>& terms() const { return terms_; }
  bool operator==(const Cycle&) const = default;

 private:
  std::map<WeylElement, long long> terms_;
};

// Integers a_{w,w'}, unitriangular for the Bruhat order. Entries not listed
// default to the identity matrix.
class AMatrix {
 public:
  AMatrix() = default;
  explicit AMatrix(EmbeddingShape shape) : shape_(shape) {}
  static AMatrix identity(const EmbeddingShape& shape) { return AMatrix(shape); }

  // Checks a_{w,w} = 1 and a_{w,w'} = 0 unless w' <= w.
  void set(const WeylElement& w, const WeylElement& wp, long long value);
  long long get(const WeylElement& w, const WeylElement& wp) const;
  bool is_default() const { return entries_.empty() && !user_supplied_; }
  void mark_user_supplied() { user_supplied_ = true; }
  const EmbeddingShape& shape() const { return shape_; }

 private:
  EmbeddingShape shape_;
  std::map<std::pair<WeylElement, WeylElement>, long long> entries_;
  bool user_supplied_ = false;
};

// Below this n the identity a-matrix is accepted without a user-supplied one.
constexpr int kDefaultAMatrixMaxN = 7;

// c_w = sum_{w'} a_{w,w'} [Z_{w'}]. Throws AMatrixGuard for n >= 8 with the default matrix.
Cycle simple_cycle(const WeylElement& w, const AMatrix& a);
// sum_{w' <= w} P_{w0 w, w0 w'}(1) c_{w'}.
Cycle verma_cycle(const WeylElement& w, const AMatrix& a);
// The cycle of the fibre at x with relative position w_x: the localized
// c_{w'} summed over [w_x, w].
Cycle fiber_cycle(const WeylElement& w, const WeylElement& wx, const AMatrix& a);

struct BMTerm {
  long long multiplicity = 0;
  Cycle cycle;
};
// w' -> (pi_multiplicity(w, w'), localized c_{w'}) for the nonzero products.
// Checks on return that the sum equals fiber_cycle(w, w_x, a).
std::map<WeylElement, BMTerm> breuil_mezard_decomposition(const WeylElement& w, const WeylElement& wx,
                                                          const AMatrix& a);

// Each [Z_w] of the Steinberg variety has dimension dim G - dim T.
struct SteinbergComponent {
  WeylElement w;
  int dimension = 0;
};
std::vector<SteinbergComponent> steinberg_basis(const EmbeddingShape& shape);

// Matrix (P_{w0 w, w0 w'}(1))_{w, w'} in canonical order.
std::vector<std::vector<long long>> verma_change_of_basis(const EmbeddingShape& shape);

// ---------------------------------------------------------------------------
// Companion-point induction replay.

struct ReplayStep {
  std::string rule;  // "base", "step5", "step8"
  WeylElement w;
  std::vector<WeylElement> used;  // elements whose cycles were already known
  std::string detail;
};

struct ReplayResult {
  bool success = false;
  WeylElement wy;
  long long m = 0;
  std::vector<ReplayStep> trace;
  // [L(w')] = m c_{w'} for every w' >= w_y, on success.
  std::map<WeylElement, Cycle> cycles;
  // On failure: the element where the deduction stopped and why.
  std::optional<WeylElement> failed_at;
  std::string failure;
};

// Replays the descending induction on [w_y, w0]: from [L(w0)] = m c_{w0},
// the support constraints and effectivity, deduce [L(w)] = m c_w for each w.
ReplayResult replay_companion_induction(const WeylElement& wy, long long m, const AMatrix& a);

std::string cycle_key(const WeylElement& w);

}  // namespace trilocal

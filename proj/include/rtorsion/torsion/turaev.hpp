#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rtorsion/algebra/matrix.hpp"
#include "rtorsion/algebra/rational_function.hpp"

namespace rtorsion::torsion {

using algebra::ExactMatrix;
using algebra::RationalFunction;

/// 0 → C3 --B3--> C2 --B2--> C1 --B1--> C0 → 0 with based chain groups of
/// dimensions n3, n2, n1, n0. Boundary maps act on column vectors, so B3 is
/// n2×n3, B2 is n1×n2 and B1 is n0×n1.
class BasedChainComplex {
 public:
  /// `dims` = {n3, n2, n1, n0}. Throws DimensionError on shape mismatches and
  /// InputError naming the offending entry when B2·B3 ≠ 0 or B1·B2 ≠ 0.
  BasedChainComplex(std::array<std::size_t, 4> dims, ExactMatrix b3, ExactMatrix b2, ExactMatrix b1);

  /// n_i for i = 0..3.
  std::size_t dim(int i) const { return dims_[static_cast<std::size_t>(3 - i)]; }
  const ExactMatrix& b3() const { return b3_; }
  const ExactMatrix& b2() const { return b2_; }
  const ExactMatrix& b1() const { return b1_; }

 private:
  std::array<std::size_t, 4> dims_;
  ExactMatrix b3_, b2_, b1_;
};

/// Rows of B3 and columns of B1 kept for A3 and A1; the same indices are
/// deleted from B2 (as columns and rows respectively) to form A2. 0-based.
struct Selection {
  std::vector<std::size_t> rows3;
  std::vector<std::size_t> cols1;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct TuraevResult {
  enum class Status { value, zero, selection_failure };
  Status status = Status::selection_failure;
  std::optional<RationalFunction> value;  // set iff status == value

  bool ok() const { return status != Status::selection_failure; }
};

/// τ = det(A3)^{-1}·det(A2)·det(A1)^{-1} for one selection.
///
/// Reports selection_failure when det A3 or det A1 vanishes, and zero when
/// both are nonzero but det A2 = 0 (the complex is then not acyclic). Empty
/// A3 or A1 contribute determinant 1. Throws DimensionError when the
/// selection does not produce square matrices.
TuraevResult turaev_torsion(const BasedChainComplex& c, const Selection& sel);

struct AllSelectionsResult {
  std::optional<RationalFunction> value;  // nullopt: τ = 0 (not acyclic)
  std::optional<Selection> selection;     // first successful selection
  std::size_t tried = 0;
  std::size_t succeeded = 0;
  bool verified = false;   // whether every selection was checked
  bool agreement = true;   // all successful selections agree up to sign
};

/// Tries selections in lexicographic order (rows3 first, then cols1) and
/// returns the first success. With `verify`, keeps going through every
/// selection and records whether all successful values agree up to sign.
AllSelectionsResult all_selections_torsion(const BasedChainComplex& c, bool verify = false);

}  // namespace rtorsion::torsion

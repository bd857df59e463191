#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rzlmi/matrix.hpp"
#include "rzlmi/polynomial.hpp"

namespace rzlmi {

/// x -> L0 + x1 L1 + ... + xm Lm with symmetric rational coefficients.
class LinearPencil {
 public:
  /// matrices = {L0, ..., Lm}; m >= 1 and all of one size, else DimensionError.
  explicit LinearPencil(std::vector<SymmetricMatrix> matrices);

  std::size_t size() const { return mats_.front().size(); }
  std::size_t num_vars() const { return mats_.size() - 1; }
  const std::vector<SymmetricMatrix>& matrices() const { return mats_; }
  const SymmetricMatrix& operator[](std::size_t k) const { return mats_[k]; }
  bool monic() const { return mats_.front().is_identity(); }
  friend bool operator==(const LinearPencil&, const LinearPencil&) = default;

 private:
  std::vector<SymmetricMatrix> mats_;
};

enum class Membership { Interior, Boundary, Outside };
const char* to_string(Membership m);

SymmetricMatrix evaluate_pencil(const LinearPencil& pencil, const Point& x);

/// Classifies x against the spectrahedron {x : L(x) PSD}. Interior means PSD with the
/// largest rank the pencil can reach (N minus the dimension of the common kernel of
/// L0..Lm), which for monic pencils is PD. Throws DomainError when L0 is not PSD.
Membership membership(const LinearPencil& pencil, const Point& x);

/// det(L0 + x1 L1 + ... + xm Lm) as an exact polynomial.
Polynomial determinant_polynomial(const LinearPencil& pencil);

/// Block-diagonal pencil. Throws DimensionError on variable-count mismatch or an empty list.
LinearPencil direct_sum(const std::vector<LinearPencil>& pencils);

/// L0 <- L0 + sum x0_i L_i.
LinearPencil shift_pencil(const LinearPencil& pencil, const Point& x0);

struct MonicReduction {
  LinearPencil pencil;
  /// Rank of the original L0.
  std::size_t rank;
  /// det(reduced(x)) = det_scale * det(Y^T L(x) Y), Y the chosen range basis of L0.
  Rational det_scale;
  /// Smallest epsilon that passed the interior test, per variable.
  std::vector<Rational> epsilons;
};

/// Congruence-based monic reduction of a pencil with PSD L0 and 0 interior to its
/// spectrahedron. Returns the input unchanged when already monic. Throws DomainError when
/// L0 is not PSD or 0 is not interior; Error when the range condition fails.
MonicReduction reduce_to_monic(const LinearPencil& pencil);

/// Rational a_1..a_k (k <= 4, minimal where found) with sum a_i^2 = q; q > 0.
std::vector<Rational> rational_sum_of_squares(const Rational& q);

/// Text format: `pencil N m`, then m+1 blocks `L k` of N rows each; `#` comments.
LinearPencil read_pencil(std::istream& in);
LinearPencil read_pencil_file(const std::string& path);
LinearPencil parse_pencil(const std::string& text);
void write_pencil(std::ostream& out, const LinearPencil& pencil);
std::string format_pencil(const LinearPencil& pencil);

}  // namespace rzlmi

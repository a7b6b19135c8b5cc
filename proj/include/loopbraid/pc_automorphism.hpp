#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopbraid/free_group.hpp"

namespace loopbraid {

/// 1-based permutation stored as the image list [p(1), ..., p(n)].
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (p o q)(i) = p(q(i)).
Permutation compose_permutations(const Permutation& p, const Permutation& q);
Permutation invert_permutation(const Permutation& p);
bool is_permutation(const Permutation& p);

struct PCShape {
  Permutation permutation;
  std::vector<int> signs;
  std::vector<FreeWord> conjugators;
};

/// Checks that every image is w_i^-1 x_{p(i)}^{e_i} w_i and that p is a
/// bijection. This certifies the shape only: it does not prove the
/// endomorphism defined by the images is invertible.
std::optional<PCShape> recognize_pc_shape(int rank, const std::vector<FreeWord>& images);

/// A permutation-conjugacy automorphism x_i -> w_i^-1 x_{p(i)}^{e_i} w_i of F_n.
///
/// The decomposition (p, e, w) is stored next to the raw images and is
/// recomputed whenever a new value is built, so the shape invariant holds for
/// every instance.
class PCAut {
 public:
  static PCAut identity(int n);

  /// sigma_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
  static PCAut sigma(int n, int i);
  /// sigma_i^-1: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
  static PCAut sigma_inverse(int n, int i);
  /// rho_i: swaps x_i and x_{i+1}.
  static PCAut rho(int n, int i);
  /// tau_i: x_i -> x_i^-1.
  static PCAut tau(int n, int i);
  /// alpha_ij: x_i -> x_j^-1 x_i x_j, straight from the closed form.
  static PCAut alpha(int n, int i, int j);

  /// Throws DomainError when the images are not of PC shape.
  static PCAut from_images(int rank, std::vector<FreeWord> images);

  int rank() const noexcept { return rank_; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }
  const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const Permutation& permutation() const noexcept { return shape_.permutation; }
  const std::vector<int>& signs() const noexcept { return shape_.signs; }
  const std::vector<FreeWord>& conjugators() const noexcept { return shape_.conjugators; }

  friend bool operator==(const PCAut& f, const PCAut& g) { return f.images_ == g.images_; }

 private:
  friend PCAut compose(const PCAut& f, const PCAut& g);

  PCAut(int rank, std::vector<FreeWord> images, PCShape shape)
      : rank_(rank), images_(std::move(images)), shape_(std::move(shape)) {}

  int rank_;
  std::vector<FreeWord> images_;
  PCShape shape_;
};

/// f o g, i.e. x -> f(g(x)). With this order, folding a braid word left to
/// right is a homomorphism into Aut(F_n) and the welded relations all hold.
PCAut compose(const PCAut& f, const PCAut& g);

FreeWord apply(const PCAut& f, const FreeWord& u);

/// Generator-by-generator comparison of images. Throws on rank mismatch.
bool equals(const PCAut& f, const PCAut& g);

/// One line per generator ("x_1 -> x2"), then "perm: [..]" and "signs: [..]".
std::string format(const PCAut& f);

}  // namespace loopbraid

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "loopbraid/braid_words.hpp"

namespace loopbraid {

/// A signed arrow between two intervals. Intervals are named by the top
/// position at which their strand enters; the arrow points from the strand
/// passing over to the strand passing under.
struct Arrow {
  int from = 1;
  int to = 2;
  int sign = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A braid Gauss diagram: n intervals, arrows at pairwise distinct times
/// (stored in time order), and the boundary permutation. `endpoints()[i-1]` is
/// the label of the right extremity of interval i, i.e. the bottom position
/// where that strand exits.
class GaussDiagram {
 public:
  /// Throws DomainError unless every arrow joins two distinct intervals in
  /// 1..strands with sign +-1 and endpoints is a permutation of 1..strands.
  GaussDiagram(int strands, std::vector<Arrow> arrows, Permutation endpoints);

  int strands() const noexcept { return strands_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Permutation& endpoints() const noexcept { return endpoints_; }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  int strands_;
  std::vector<Arrow> arrows_;
  Permutation endpoints_;
};

/// One arrow per classical crossing, in word order. sigma_i puts the strand at
/// position i+1 over the one at position i (sign +1); sigma_i^-1 puts the
/// strand at position i over (sign -1). rho only rewires strands.
/// Throws UnsupportedInput if w contains tau.
GaussDiagram from_word(const BraidWord& w);

/// A tau-free word w with from_word(w) == g. For each arrow, the lower of the
/// two strands is walked up with rho tokens until adjacent to the other (one
/// extra rho fixes the orientation if needed), the crossing is emitted and
/// the rho walk undone; a final rho block realizes the boundary permutation.
BraidWord realize(const GaussDiagram& g);

enum class GaussMoveKind {
  Omega2Remove,  // delete time-adjacent parallel arrows of opposite sign
  Omega2Insert,  // insert such a pair at `time`
  Omega3,        // reverse three time-adjacent arrows forming a triangle
  TailCommute,   // swap time-adjacent arrows sharing their tail
};

/// `time` is the 0-based index of the first arrow involved (or the insertion
/// slot). `from`, `to`, `sign` are read only by Omega2Insert.
struct GaussMove {
  GaussMoveKind kind = GaussMoveKind::TailCommute;
  std::size_t time = 0;
  int from = 0;
  int to = 0;
  int sign = 1;

  friend bool operator==(const GaussMove&, const GaussMove&) = default;
};

/// Throws MoveInapplicable if the configuration at `time` does not match.
///
/// Omega3 matches arrows (b->c, a->c, a->b) or (a->b, a->c, b->c) on three
/// distinct intervals with a common sign and swaps one form for the other.
/// TailCommute needs a common tail and distinct heads.
GaussDiagram apply_gauss_move(const GaussDiagram& g, const GaussMove& move);

/// All applicable non-inserting moves, ordered by time then kind.
std::vector<GaussMove> applicable_gauss_moves(const GaussDiagram& g);

/// Equality in the welded Gauss diagram group, decided through realize and
/// the automorphism representation. Throws DomainError on strand mismatch.
bool gauss_equal(const GaussDiagram& g1, const GaussDiagram& g2);

/// Canonical JSON: {"strands":n,"arrows":[{"t":1,"from":a,"to":b,"sign":s},..],"perm":[..]}.
std::string to_json(const GaussDiagram& g);

/// Validates the schema and every diagram invariant (t consecutive from 1).
GaussDiagram gauss_from_json(std::string_view text);

}  // namespace loopbraid

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopbraid/braid_words.hpp"

namespace loopbraid {

/// One instantiated relation lhs = rhs. Rules are two-sided: a move may
/// rewrite an occurrence of lhs into rhs (forward) or rhs into lhs (backward).
///
/// Families: R2 (s S, S s), V2 (r r), T2 (t t), R3, V3, M, F1, far
/// commutations FC-ss / FC-rr / FC-rs / FC-st / FC-rt, T-comm (t t'), TR,
/// TS, TSbar.
struct RewriteRule {
  std::string family;
  std::vector<int> params;
  std::vector<Token> lhs;
  std::vector<Token> rhs;
};

/// All admissible instances on `strands` strands. The tau families are
/// included only when `extended` is set.
std::vector<RewriteRule> rule_table(int strands, bool extended);

enum class Direction { Forward, Backward };

struct Move {
  std::size_t rule = 0;  // index into the rule table in use
  Direction direction = Direction::Forward;
  std::size_t position = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Rule table plus the insertion ceiling: a move is only generated when the
/// resulting word has at most `max_length` tokens. Without the ceiling the
/// neighbourhood of any word would be unbounded through inverse-pair
/// insertions.
struct RuleSet {
  int strands = 2;
  bool extended = false;
  std::size_t max_length = 0;
  std::vector<RewriteRule> rules;

  static RuleSet make(int strands, bool extended, std::size_t max_length);
};

/// Throws MoveInapplicable when the pattern is not present at the position.
BraidWord apply_move(const BraidWord& w, const RuleSet& rules, const Move& move);

struct Neighbor {
  Move move;
  BraidWord word;
};

/// Every single-move rewrite of w, in rule-table order then position.
std::vector<Neighbor> neighbor_moves(const BraidWord& w, const RuleSet& rules);

/// Distinct neighbouring words, sorted.
std::vector<BraidWord> neighbors(const BraidWord& w, const RuleSet& rules);

struct SearchOptions {
  std::size_t max_depth = 8;
  std::size_t max_states = 200000;
  /// Insertion ceiling; 0 means max(|w1|, |w2|) + 4.
  std::size_t max_length = 0;
  bool extended = true;
};

enum class SearchStatus { Connected, Inconclusive };

/// Connected carries a replayable path from w1 to w2. Inconclusive means no
/// path was found within the depth and state budget: it is NOT a proof that
/// the words differ. Use equal() to decide equality.
struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::vector<Move> path;
  std::size_t states = 0;
  RuleSet rules;
};

/// Bidirectional breadth-first search over the move graph.
SearchResult bfs_equivalent(const BraidWord& w1, const BraidWord& w2, const SearchOptions& options);

/// Replays a path; throws MoveInapplicable if any step does not match.
BraidWord replay(const BraidWord& start, const RuleSet& rules, const std::vector<Move>& path);

/// Greedy local search for a shorter equivalent word: cancel inverse pairs,
/// then explore length-non-increasing moves (at most `budget` states per
/// round) and restart from any strictly shorter word found. Among equally
/// short candidates the lexicographically smallest token sequence wins.
BraidWord simplify(const BraidWord& w, std::size_t budget);

/// Move path serialization: one JSON object per line,
/// {"rule":"F1","params":[1],"direction":"forward","position":2}.
std::string path_to_json_lines(const RuleSet& rules, const std::vector<Move>& path);
std::vector<Move> path_from_json_lines(const RuleSet& rules, std::string_view text);

}  // namespace loopbraid

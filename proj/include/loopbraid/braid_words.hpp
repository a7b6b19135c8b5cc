#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "loopbraid/pc_automorphism.hpp"

namespace loopbraid {

enum class TokenKind : std::uint8_t { SigmaPos, SigmaNeg, Rho, Tau };

/// One elementary diagram: sigma_i^{+-1} (classical), rho_i (welded), tau_i (wen).
struct Token {
  TokenKind kind = TokenKind::SigmaPos;
  int index = 1;

  friend auto operator<=>(const Token&, const Token&) = default;
};

inline Token sigma(int i) { return {TokenKind::SigmaPos, i}; }
inline Token sigma_inv(int i) { return {TokenKind::SigmaNeg, i}; }
inline Token rho(int i) { return {TokenKind::Rho, i}; }
inline Token tau(int i) { return {TokenKind::Tau, i}; }

/// Largest admissible index of a token kind on n strands.
int max_index(TokenKind kind, int strands) noexcept;
bool is_valid(Token token, int strands) noexcept;
Token inverse(Token token) noexcept;

/// A word in sigma_i^{+-1}, rho_i, tau_i on a fixed number of strands, read
/// left to right (top to bottom in the strand diagram).
class BraidWord {
 public:
  explicit BraidWord(int strands);
  /// Throws DomainError if any token index is invalid for `strands`.
  BraidWord(int strands, std::vector<Token> tokens);

  int strands() const noexcept { return strands_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  std::size_t length() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Token> tokens_;
};

/// Grammar: whitespace-separated `s<i>` (sigma_i), `S<i>` (sigma_i^-1),
/// `r<i>` (rho_i), `t<i>` (tau_i). Throws ParseError carrying the byte offset
/// of the offending token.
BraidWord parse_braid_word(std::string_view text, int strands);

/// Canonical spacing: tokens joined by single spaces; empty word is "".
std::string format(const BraidWord& w);
std::string format(Token token);

BraidWord concat(const BraidWord& u, const BraidWord& v);

PCAut evaluate(Token token, int strands);

/// Left-to-right fold under compose. Two words are equal in the (extended)
/// welded braid group iff their evaluations are equal.
PCAut evaluate(const BraidWord& w);

/// Decides the word problem. Throws DomainError on strand mismatch.
bool equal(const BraidWord& w1, const BraidWord& w2);

/// permutation(evaluate(w)): x_i is sent to a conjugate of x_{p(i)}.
Permutation permutation(const BraidWord& w);

/// Where each strand ends: entry i is the bottom position of the strand that
/// enters at top position i. Computed by tracing, independently of evaluate;
/// it is the inverse of permutation(w).
Permutation strand_endpoints(const BraidWord& w);

bool is_pure(const BraidWord& w);
bool is_extended(const BraidWord& w);

/// Reversed word with sigma <-> sigma^-1; rho and tau are involutions.
BraidWord inverse_word(const BraidWord& w);

/// A sigma/rho word evaluating to alpha_ij (x_i -> x_j^-1 x_i x_j).
BraidWord alpha_word(int strands, int i, int j);

/// Deterministic for a fixed seed; tokens drawn uniformly from all valid ones.
BraidWord random_word(int strands, std::size_t length, std::uint64_t seed, bool allow_tau);

/// sigma-only variant used by Artin-condition tests.
BraidWord random_sigma_word(int strands, std::size_t length, std::uint64_t seed);

}  // namespace loopbraid

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loopbraid {

/// A generator x_index raised to exponent +1 or -1. Indices are 1-based.
struct Letter {
  int index = 1;
  int exponent = 1;

  Letter inverse() const noexcept { return {index, -exponent}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group F_rank on x_1, ..., x_rank.
///
/// Every constructor reduces, so a FreeWord never holds an adjacent pair
/// x_i^e x_i^-e. Values are immutable.
class FreeWord {
 public:
  /// The empty word of the given rank. Throws DomainError if rank < 1.
  explicit FreeWord(int rank);

  /// Reduces raw letters. Throws DomainError on out-of-range indices or
  /// exponents other than +-1.
  static FreeWord reduce(int rank, std::span<const Letter> raw);

  static FreeWord generator(int rank, int index, int exponent = 1);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  FreeWord(int rank, std::vector<Letter> reduced) : rank_(rank), letters_(std::move(reduced)) {}

  int rank_;
  std::vector<Letter> letters_;
};

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);

/// reduce(w^-1 u w).
FreeWord conjugate(const FreeWord& u, const FreeWord& w);

struct GeneratorConjugate {
  int index;
  int sign;
  FreeWord conjugator;
};

/// Recognizes u = w^-1 x_index^sign w. Cyclically reduces u by peeling
/// matched outer letter pairs; succeeds iff the cyclic core is one letter.
/// The returned conjugator w is the peeled suffix, which is the minimal one.
std::optional<GeneratorConjugate> as_conjugate_of_generator(const FreeWord& u);

/// Text form: "x1 x2^-1 x1". The empty word prints as "1".
std::string format(const FreeWord& u);

/// Inverse of format. Accepts "1" or blank text for the empty word.
/// Throws ParseError on malformed tokens and DomainError on indices > rank.
FreeWord parse_free_word(std::string_view text, int rank);

}  // namespace loopbraid

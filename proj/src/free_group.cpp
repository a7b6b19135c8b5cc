#include "loopbraid/free_group.hpp"

#include <cctype>
#include <charconv>

#include "loopbraid/errors.hpp"

namespace loopbraid {

namespace {

void require_same_rank(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) {
    throw DomainError("free group rank mismatch: " + std::to_string(u.rank()) + " vs " +
                      std::to_string(v.rank()));
  }
}

// Stack-based free reduction; a single pass reaches the fixpoint.
void push_reduced(std::vector<Letter>& out, Letter letter) {
  if (!out.empty() && out.back() == letter.inverse()) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("free group rank must be positive");
}

FreeWord FreeWord::reduce(int rank, std::span<const Letter> raw) {
  if (rank < 1) throw DomainError("free group rank must be positive");
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& letter : raw) {
    if (letter.index < 1 || letter.index > rank) {
      throw DomainError("generator index " + std::to_string(letter.index) +
                        " outside 1.." + std::to_string(rank));
    }
    if (letter.exponent != 1 && letter.exponent != -1) {
      throw DomainError("letter exponent must be +1 or -1");
    }
    push_reduced(out, letter);
  }
  return FreeWord(rank, std::move(out));
}

FreeWord FreeWord::generator(int rank, int index, int exponent) {
  const Letter letter{index, exponent};
  return reduce(rank, std::span<const Letter>(&letter, 1));
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  require_same_rank(u, v);
  std::vector<Letter> raw;
  raw.reserve(u.length() + v.length());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return FreeWord::reduce(u.rank(), raw);
}

FreeWord invert(const FreeWord& u) {
  std::vector<Letter> raw;
  raw.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return FreeWord::reduce(u.rank(), raw);
}

FreeWord conjugate(const FreeWord& u, const FreeWord& w) {
  require_same_rank(u, w);
  return multiply(multiply(invert(w), u), w);
}

std::optional<GeneratorConjugate> as_conjugate_of_generator(const FreeWord& u) {
  const auto& letters = u.letters();
  const std::size_t n = letters.size();
  if (n % 2 == 0) return std::nullopt;
  std::size_t peeled = 0;
  while (2 * peeled + 1 < n && letters[peeled] == letters[n - 1 - peeled].inverse()) {
    ++peeled;
  }
  if (2 * peeled + 1 != n) return std::nullopt;
  const Letter core = letters[peeled];
  std::vector<Letter> suffix(letters.begin() + static_cast<std::ptrdiff_t>(peeled + 1), letters.end());
  return GeneratorConjugate{core.index, core.exponent, FreeWord::reduce(u.rank(), suffix)};
}

std::string format(const FreeWord& u) {
  if (u.empty()) return "1";
  std::string out;
  for (const Letter& letter : u.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(letter.index);
    if (letter.exponent < 0) out += "^-1";
  }
  return out;
}

FreeWord parse_free_word(std::string_view text, int rank) {
  std::vector<Letter> raw;
  std::size_t pos = 0;
  bool saw_identity = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(start, pos - start);
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    if (token.size() < 2 || token[0] != 'x') throw ParseError("expected x<i> or x<i>^-1", start);
    std::string_view digits = token.substr(1);
    int exponent = 1;
    if (digits.ends_with("^-1")) {
      exponent = -1;
      digits.remove_suffix(3);
    }
    int index = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed generator index in '" + std::string(token) + "'", start);
    }
    raw.push_back({index, exponent});
  }
  if (saw_identity && !raw.empty()) throw ParseError("'1' must stand alone", 0);
  return FreeWord::reduce(rank, raw);
}

}  // namespace loopbraid

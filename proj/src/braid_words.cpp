#include "loopbraid/braid_words.hpp"

#include <cctype>
#include <charconv>
#include <random>
#include <utility>

#include "loopbraid/errors.hpp"

namespace loopbraid {

int max_index(TokenKind kind, int strands) noexcept {
  return kind == TokenKind::Tau ? strands : strands - 1;
}

bool is_valid(Token token, int strands) noexcept {
  return token.index >= 1 && token.index <= max_index(token.kind, strands);
}

Token inverse(Token token) noexcept {
  switch (token.kind) {
    case TokenKind::SigmaPos: return sigma_inv(token.index);
    case TokenKind::SigmaNeg: return sigma(token.index);
    default: return token;
  }
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw DomainError("strand count must be positive");
}

BraidWord::BraidWord(int strands, std::vector<Token> tokens)
    : strands_(strands), tokens_(std::move(tokens)) {
  if (strands < 1) throw DomainError("strand count must be positive");
  for (const Token& token : tokens_) {
    if (!is_valid(token, strands)) {
      throw DomainError("token " + format(token) + " is not valid on " + std::to_string(strands) +
                        " strands");
    }
  }
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  if (strands < 1) throw DomainError("strand count must be positive");
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(start, pos - start);

    TokenKind kind;
    switch (token[0]) {
      case 's': kind = TokenKind::SigmaPos; break;
      case 'S': kind = TokenKind::SigmaNeg; break;
      case 'r': kind = TokenKind::Rho; break;
      case 't': kind = TokenKind::Tau; break;
      default: throw ParseError("unknown token '" + std::string(token) + "'", start);
    }
    const std::string_view digits = token.substr(1);
    int index = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed index in token '" + std::string(token) + "'", start);
    }
    const Token parsed{kind, index};
    if (!is_valid(parsed, strands)) {
      throw ParseError("index of '" + std::string(token) + "' out of range 1.." +
                           std::to_string(max_index(kind, strands)) + " for " +
                           std::to_string(strands) + " strands",
                       start);
    }
    tokens.push_back(parsed);
  }
  return BraidWord(strands, std::move(tokens));
}

std::string format(Token token) {
  static constexpr char kLetters[] = {'s', 'S', 'r', 't'};
  return kLetters[static_cast<int>(token.kind)] + std::to_string(token.index);
}

std::string format(const BraidWord& w) {
  std::string out;
  for (const Token& token : w.tokens()) {
    if (!out.empty()) out += ' ';
    out += format(token);
  }
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw DomainError("strand count mismatch");
  std::vector<Token> tokens = u.tokens();
  tokens.insert(tokens.end(), v.tokens().begin(), v.tokens().end());
  return BraidWord(u.strands(), std::move(tokens));
}

PCAut evaluate(Token token, int strands) {
  switch (token.kind) {
    case TokenKind::SigmaPos: return PCAut::sigma(strands, token.index);
    case TokenKind::SigmaNeg: return PCAut::sigma_inverse(strands, token.index);
    case TokenKind::Rho: return PCAut::rho(strands, token.index);
    case TokenKind::Tau: return PCAut::tau(strands, token.index);
  }
  throw DomainError("unknown token kind");
}

PCAut evaluate(const BraidWord& w) {
  PCAut result = PCAut::identity(w.strands());
  for (const Token& token : w.tokens()) result = compose(result, evaluate(token, w.strands()));
  return result;
}

bool equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) throw DomainError("strand count mismatch");
  return evaluate(w1) == evaluate(w2);
}

Permutation permutation(const BraidWord& w) { return evaluate(w).permutation(); }

Permutation strand_endpoints(const BraidWord& w) {
  // at[p] = strand currently at position p + 1
  std::vector<int> at = identity_permutation(w.strands());
  for (const Token& token : w.tokens()) {
    if (token.kind == TokenKind::Tau) continue;
    std::swap(at[static_cast<std::size_t>(token.index - 1)], at[static_cast<std::size_t>(token.index)]);
  }
  return invert_permutation(at);
}

bool is_pure(const BraidWord& w) { return permutation(w) == identity_permutation(w.strands()); }

bool is_extended(const BraidWord& w) {
  for (const Token& token : w.tokens()) {
    if (token.kind == TokenKind::Tau) return true;
  }
  return false;
}

BraidWord inverse_word(const BraidWord& w) {
  std::vector<Token> tokens;
  tokens.reserve(w.length());
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it) tokens.push_back(inverse(*it));
  return BraidWord(w.strands(), std::move(tokens));
}

BraidWord alpha_word(int strands, int i, int j) {
  if (i < 1 || j < 1 || i > strands || j > strands || i == j) {
    throw DomainError("alpha_word needs distinct indices in 1.." + std::to_string(strands));
  }
  // alpha_{k,k+1} = s_k r_k and alpha_{k+1,k} = r_k s_k; conjugating by a rho
  // chain carries the far index into place.
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  std::vector<Token> chain;
  for (int k = hi - 1; k > lo; --k) chain.push_back(rho(k));
  std::vector<Token> tokens = chain;
  if (i < j) {
    tokens.push_back(sigma(lo));
    tokens.push_back(rho(lo));
  } else {
    tokens.push_back(rho(lo));
    tokens.push_back(sigma(lo));
  }
  tokens.insert(tokens.end(), chain.rbegin(), chain.rend());
  return BraidWord(strands, std::move(tokens));
}

namespace {

std::vector<Token> all_tokens(int strands, bool allow_sigma_rho, bool allow_tau) {
  std::vector<Token> tokens;
  if (allow_sigma_rho) {
    for (int i = 1; i < strands; ++i) {
      tokens.push_back(sigma(i));
      tokens.push_back(sigma_inv(i));
      tokens.push_back(rho(i));
    }
  }
  if (allow_tau) {
    for (int i = 1; i <= strands; ++i) tokens.push_back(tau(i));
  }
  return tokens;
}

BraidWord draw(int strands, std::size_t length, std::uint64_t seed, const std::vector<Token>& pool) {
  if (length > 0 && pool.empty()) throw DomainError("no valid tokens on this many strands");
  std::mt19937_64 rng(seed);
  std::vector<Token> tokens;
  tokens.reserve(length);
  if (!pool.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t k = 0; k < length; ++k) tokens.push_back(pool[pick(rng)]);
  }
  return BraidWord(strands, std::move(tokens));
}

}  // namespace

BraidWord random_word(int strands, std::size_t length, std::uint64_t seed, bool allow_tau) {
  if (strands < 1) throw DomainError("strand count must be positive");
  return draw(strands, length, seed, all_tokens(strands, true, allow_tau));
}

BraidWord random_sigma_word(int strands, std::size_t length, std::uint64_t seed) {
  if (strands < 1) throw DomainError("strand count must be positive");
  std::vector<Token> pool;
  for (int i = 1; i < strands; ++i) {
    pool.push_back(sigma(i));
    pool.push_back(sigma_inv(i));
  }
  return draw(strands, length, seed, pool);
}

}  // namespace loopbraid

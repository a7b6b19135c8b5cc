#include "loopbraid/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

#include "loopbraid/errors.hpp"

namespace loopbraid {

namespace {

Token signed_sigma(int i, int sign) { return sign > 0 ? sigma(i) : sigma_inv(i); }

void add(std::vector<RewriteRule>& table, std::string family, std::vector<int> params,
         std::vector<Token> lhs, std::vector<Token> rhs) {
  table.push_back({std::move(family), std::move(params), std::move(lhs), std::move(rhs)});
}

bool matches(const std::vector<Token>& tokens, std::size_t position, const std::vector<Token>& pattern) {
  if (position + pattern.size() > tokens.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), tokens.begin() + static_cast<std::ptrdiff_t>(position));
}

std::vector<Token> splice(const std::vector<Token>& tokens, std::size_t position, std::size_t removed,
                          const std::vector<Token>& inserted) {
  std::vector<Token> out;
  out.reserve(tokens.size() - removed + inserted.size());
  out.insert(out.end(), tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), inserted.begin(), inserted.end());
  out.insert(out.end(), tokens.begin() + static_cast<std::ptrdiff_t>(position + removed), tokens.end());
  return out;
}

Direction flip(Direction d) { return d == Direction::Forward ? Direction::Backward : Direction::Forward; }

using Key = std::u16string;

Key encode(const std::vector<Token>& tokens) {
  Key key;
  key.reserve(tokens.size());
  for (const Token& t : tokens) {
    key.push_back(static_cast<char16_t>((static_cast<unsigned>(t.kind) << 12) | static_cast<unsigned>(t.index)));
  }
  return key;
}

std::vector<Token> decode(const Key& key) {
  std::vector<Token> tokens;
  tokens.reserve(key.size());
  for (char16_t c : key) {
    tokens.push_back({static_cast<TokenKind>(c >> 12), static_cast<int>(c & 0x0fff)});
  }
  return tokens;
}

struct Visit {
  Key parent;
  Move move;  // parent --move--> this
  std::size_t depth = 0;
};

using VisitMap = std::unordered_map<Key, Visit>;

}  // namespace

std::vector<RewriteRule> rule_table(int n, bool extended) {
  if (n < 2) throw DomainError("rule tables need at least 2 strands");
  std::vector<RewriteRule> t;

  for (int i = 1; i < n; ++i) {
    add(t, "R2", {i, 1}, {sigma(i), sigma_inv(i)}, {});
    add(t, "R2", {i, -1}, {sigma_inv(i), sigma(i)}, {});
    add(t, "V2", {i}, {rho(i), rho(i)}, {});
  }
  for (int i = 1; i + 1 < n; ++i) {
    add(t, "R3", {i, 1}, {sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)});
    add(t, "R3", {i, -1}, {sigma_inv(i), sigma_inv(i + 1), sigma_inv(i)},
        {sigma_inv(i + 1), sigma_inv(i), sigma_inv(i + 1)});
    add(t, "V3", {i}, {rho(i), rho(i + 1), rho(i)}, {rho(i + 1), rho(i), rho(i + 1)});
    for (int e : {1, -1}) {
      add(t, "M", {i, e}, {rho(i + 1), rho(i), signed_sigma(i + 1, e)},
          {signed_sigma(i, e), rho(i + 1), rho(i)});
    }
    add(t, "F1", {i}, {sigma(i + 1), sigma(i), rho(i + 1)}, {rho(i), sigma(i + 1), sigma(i)});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (int ei : {1, -1}) {
        for (int ej : {1, -1}) {
          add(t, "FC-ss", {i, j, ei, ej}, {signed_sigma(i, ei), signed_sigma(j, ej)},
              {signed_sigma(j, ej), signed_sigma(i, ei)});
        }
      }
      add(t, "FC-rr", {i, j}, {rho(i), rho(j)}, {rho(j), rho(i)});
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      for (int e : {1, -1}) add(t, "FC-rs", {i, j, e}, {rho(i), signed_sigma(j, e)}, {signed_sigma(j, e), rho(i)});
    }
  }
  if (!extended) return t;

  for (int i = 1; i <= n; ++i) {
    add(t, "T2", {i}, {tau(i), tau(i)}, {});
    for (int j = i + 1; j <= n; ++j) add(t, "T-comm", {i, j}, {tau(i), tau(j)}, {tau(j), tau(i)});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (std::abs(i - j) <= 1) continue;
      for (int e : {1, -1}) add(t, "FC-st", {i, j, e}, {signed_sigma(i, e), tau(j)}, {tau(j), signed_sigma(i, e)});
      add(t, "FC-rt", {i, j}, {rho(i), tau(j)}, {tau(j), rho(i)});
    }
  }
  for (int i = 1; i < n; ++i) {
    add(t, "TR", {i}, {tau(i), rho(i)}, {rho(i), tau(i + 1)});
    add(t, "TS", {i}, {tau(i), sigma(i)}, {sigma(i), tau(i + 1)});
    add(t, "TSbar", {i}, {tau(i + 1), sigma(i)}, {rho(i), sigma_inv(i), rho(i), tau(i)});
  }
  return t;
}

RuleSet RuleSet::make(int strands, bool extended, std::size_t max_length) {
  return RuleSet{strands, extended, max_length, rule_table(strands, extended)};
}

BraidWord apply_move(const BraidWord& w, const RuleSet& rules, const Move& move) {
  if (move.rule >= rules.rules.size()) throw MoveInapplicable("rule index out of range");
  if (w.strands() != rules.strands) throw DomainError("rule table built for a different strand count");
  const RewriteRule& rule = rules.rules[move.rule];
  const auto& from = move.direction == Direction::Forward ? rule.lhs : rule.rhs;
  const auto& to = move.direction == Direction::Forward ? rule.rhs : rule.lhs;
  if (move.position > w.length() || !matches(w.tokens(), move.position, from)) {
    throw MoveInapplicable("rule " + rule.family + " does not match at position " +
                           std::to_string(move.position));
  }
  return BraidWord(w.strands(), splice(w.tokens(), move.position, from.size(), to));
}

std::vector<Neighbor> neighbor_moves(const BraidWord& w, const RuleSet& rules) {
  if (w.strands() != rules.strands) throw DomainError("rule table built for a different strand count");
  std::vector<Neighbor> out;
  const auto& tokens = w.tokens();
  for (std::size_t r = 0; r < rules.rules.size(); ++r) {
    const RewriteRule& rule = rules.rules[r];
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const auto& from = d == Direction::Forward ? rule.lhs : rule.rhs;
      const auto& to = d == Direction::Forward ? rule.rhs : rule.lhs;
      if (from.size() > tokens.size()) continue;
      if (tokens.size() - from.size() + to.size() > rules.max_length) continue;
      for (std::size_t p = 0; p + from.size() <= tokens.size(); ++p) {
        if (!matches(tokens, p, from)) continue;
        out.push_back({Move{r, d, p}, BraidWord(w.strands(), splice(tokens, p, from.size(), to))});
      }
    }
  }
  return out;
}

std::vector<BraidWord> neighbors(const BraidWord& w, const RuleSet& rules) {
  std::vector<BraidWord> words;
  for (auto& n : neighbor_moves(w, rules)) words.push_back(std::move(n.word));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

BraidWord replay(const BraidWord& start, const RuleSet& rules, const std::vector<Move>& path) {
  BraidWord current = start;
  for (const Move& move : path) current = apply_move(current, rules, move);
  return current;
}

SearchResult bfs_equivalent(const BraidWord& w1, const BraidWord& w2, const SearchOptions& options) {
  if (w1.strands() != w2.strands()) throw DomainError("strand count mismatch");
  const int n = w1.strands();
  const bool extended = options.extended || is_extended(w1) || is_extended(w2);
  const std::size_t ceiling =
      options.max_length ? options.max_length : std::max(w1.length(), w2.length()) + 4;

  SearchResult result;
  result.rules = n >= 2 ? RuleSet::make(n, extended, ceiling) : RuleSet{n, extended, ceiling, {}};
  const RuleSet& rules = result.rules;

  const Key start = encode(w1.tokens());
  const Key goal = encode(w2.tokens());
  if (start == goal) {
    result.status = SearchStatus::Connected;
    result.states = 1;
    return result;
  }

  VisitMap fwd{{start, Visit{}}};
  VisitMap bwd{{goal, Visit{}}};
  std::vector<Key> fwd_frontier{start};
  std::vector<Key> bwd_frontier{goal};
  std::size_t fwd_depth = 0;
  std::size_t bwd_depth = 0;
  std::optional<Key> meet;

  auto expand = [&](VisitMap& mine, const VisitMap& other, std::vector<Key>& frontier, std::size_t& depth) {
    std::vector<Key> next;
    for (const Key& key : frontier) {
      const BraidWord word(n, decode(key));
      for (auto& nb : neighbor_moves(word, rules)) {
        Key k = encode(nb.word.tokens());
        if (mine.contains(k)) continue;
        mine.emplace(k, Visit{key, nb.move, depth + 1});
        if (other.contains(k)) {
          meet = k;
          return;
        }
        next.push_back(std::move(k));
        if (fwd.size() + bwd.size() > options.max_states) return;
      }
    }
    frontier = std::move(next);
    ++depth;
  };

  while (!meet && fwd_depth + bwd_depth < options.max_depth) {
    if (fwd_frontier.empty() || bwd_frontier.empty()) break;
    if (fwd_frontier.size() <= bwd_frontier.size()) {
      expand(fwd, bwd, fwd_frontier, fwd_depth);
    } else {
      expand(bwd, fwd, bwd_frontier, bwd_depth);
    }
    if (fwd.size() + bwd.size() > options.max_states) break;
  }
  result.states = fwd.size() + bwd.size();
  if (!meet) return result;

  std::vector<Move> head;
  for (Key k = *meet; k != start;) {
    const Visit& v = fwd.at(k);
    head.push_back(v.move);
    k = v.parent;
  }
  std::reverse(head.begin(), head.end());
  for (Key k = *meet; k != goal;) {
    const Visit& v = bwd.at(k);
    head.push_back(Move{v.move.rule, flip(v.move.direction), v.move.position});
    k = v.parent;
  }
  result.status = SearchStatus::Connected;
  result.path = std::move(head);
  return result;
}

namespace {

bool cancels(Token a, Token b) {
  if (a.index != b.index) return false;
  if (a.kind == TokenKind::SigmaPos) return b.kind == TokenKind::SigmaNeg;
  if (a.kind == TokenKind::SigmaNeg) return b.kind == TokenKind::SigmaPos;
  return a.kind == b.kind;
}

std::vector<Token> cancel_pairs(const std::vector<Token>& tokens) {
  std::vector<Token> out;
  for (const Token& t : tokens) {
    if (!out.empty() && cancels(out.back(), t)) {
      out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return out;
}

bool shorter_or_smaller(const std::vector<Token>& a, const std::vector<Token>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

BraidWord simplify(const BraidWord& w, std::size_t budget) {
  std::vector<Token> current = cancel_pairs(w.tokens());
  const int n = w.strands();
  if (n < 2 || current.empty()) return BraidWord(n, current);
  const bool extended = is_extended(w);

  for (;;) {
    const RuleSet rules = RuleSet::make(n, extended, current.size());
    std::vector<Token> best = current;
    std::unordered_map<Key, bool> seen{{encode(current), true}};
    std::deque<std::vector<Token>> queue{current};
    while (!queue.empty() && seen.size() < budget) {
      const BraidWord word(n, std::move(queue.front()));
      queue.pop_front();
      for (auto& nb : neighbor_moves(word, rules)) {
        std::vector<Token> reduced = cancel_pairs(nb.word.tokens());
        if (!seen.emplace(encode(reduced), true).second) continue;
        if (shorter_or_smaller(reduced, best)) best = reduced;
        queue.push_back(std::move(reduced));
        if (seen.size() >= budget) break;
      }
    }
    const bool improved = best.size() < current.size();
    current = std::move(best);
    if (!improved || current.empty()) break;
  }
  return BraidWord(n, std::move(current));
}

std::string path_to_json_lines(const RuleSet& rules, const std::vector<Move>& path) {
  std::ostringstream out;
  for (const Move& move : path) {
    const RewriteRule& rule = rules.rules.at(move.rule);
    nlohmann::json record = {{"rule", rule.family},
                             {"params", rule.params},
                             {"direction", move.direction == Direction::Forward ? "forward" : "backward"},
                             {"position", move.position}};
    out << record.dump() << '\n';
  }
  return out.str();
}

std::vector<Move> path_from_json_lines(const RuleSet& rules, std::string_view text) {
  std::vector<Move> path;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
      const auto family = record.at("rule").get<std::string>();
      const auto params = record.at("params").get<std::vector<int>>();
      const auto direction = record.at("direction").get<std::string>();
      if (direction != "forward" && direction != "backward") throw ParseError("bad direction", line_start);
      auto it = std::find_if(rules.rules.begin(), rules.rules.end(),
                             [&](const RewriteRule& r) { return r.family == family && r.params == params; });
      if (it == rules.rules.end()) throw ParseError("unknown rule " + family, line_start);
      path.push_back(Move{static_cast<std::size_t>(it - rules.rules.begin()),
                          direction == "forward" ? Direction::Forward : Direction::Backward,
                          record.at("position").get<std::size_t>()});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid move record: ") + e.what(), line_start);
    }
  }
  return path;
}

}  // namespace loopbraid

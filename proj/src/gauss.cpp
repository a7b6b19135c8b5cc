#include "loopbraid/gauss.hpp"

#include <algorithm>
#include <json.hpp>
#include <utility>

#include "loopbraid/errors.hpp"

namespace loopbraid {

GaussDiagram::GaussDiagram(int strands, std::vector<Arrow> arrows, Permutation endpoints)
    : strands_(strands), arrows_(std::move(arrows)), endpoints_(std::move(endpoints)) {
  if (strands < 1) throw DomainError("strand count must be positive");
  for (const Arrow& a : arrows_) {
    if (a.from < 1 || a.from > strands || a.to < 1 || a.to > strands) {
      throw DomainError("arrow endpoint outside 1.." + std::to_string(strands));
    }
    if (a.from == a.to) throw DomainError("arrow must join two different intervals");
    if (a.sign != 1 && a.sign != -1) throw DomainError("arrow sign must be +1 or -1");
  }
  if (static_cast<int>(endpoints_.size()) != strands || !is_permutation(endpoints_)) {
    throw DomainError("boundary labels must form a permutation of 1.." + std::to_string(strands));
  }
}

GaussDiagram from_word(const BraidWord& w) {
  if (is_extended(w)) throw UnsupportedInput("Gauss diagrams are defined only for tau-free words");
  std::vector<int> at = identity_permutation(w.strands());  // at[p-1] = strand at position p
  std::vector<Arrow> arrows;
  for (const Token& token : w.tokens()) {
    const auto lo = static_cast<std::size_t>(token.index - 1);
    const auto hi = static_cast<std::size_t>(token.index);
    if (token.kind == TokenKind::SigmaPos) arrows.push_back({at[hi], at[lo], 1});
    if (token.kind == TokenKind::SigmaNeg) arrows.push_back({at[lo], at[hi], -1});
    std::swap(at[lo], at[hi]);
  }
  return GaussDiagram(w.strands(), std::move(arrows), invert_permutation(at));
}

BraidWord realize(const GaussDiagram& g) {
  const int n = g.strands();
  std::vector<int> at = identity_permutation(n);
  std::vector<Token> out;
  auto swap_at = [&](int p) {  // swap positions p and p+1
    std::swap(at[static_cast<std::size_t>(p - 1)], at[static_cast<std::size_t>(p)]);
  };
  auto position_of = [&](int strand) {
    return static_cast<int>(std::find(at.begin(), at.end(), strand) - at.begin()) + 1;
  };

  for (const Arrow& arrow : g.arrows()) {
    const int pa = position_of(arrow.from);
    const int pb = position_of(arrow.to);
    const int lo = std::min(pa, pb);
    const int hi = std::max(pa, pb);
    std::vector<int> walk;
    for (int p = lo; p < hi - 1; ++p) {
      walk.push_back(p);
      swap_at(p);
    }
    // sigma_i: over strand at i+1, under at i; sigma_i^-1: over at i.
    const int c = hi - 1;
    const int want_at_c = arrow.sign > 0 ? arrow.to : arrow.from;
    if (at[static_cast<std::size_t>(c - 1)] != want_at_c) {
      walk.push_back(c);
      swap_at(c);
    }
    for (int p : walk) out.push_back(rho(p));
    out.push_back(arrow.sign > 0 ? sigma(c) : sigma_inv(c));
    swap_at(c);
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      out.push_back(rho(*it));
      swap_at(*it);
    }
  }

  // Bubble sort towards the target arrangement with welded crossings.
  const Permutation target = invert_permutation(g.endpoints());  // target[p-1] = strand ending at p
  for (int pass = 0; pass < n; ++pass) {
    for (int p = 1; p < n; ++p) {
      const auto pos = [&](int strand) { return g.endpoints()[static_cast<std::size_t>(strand - 1)]; };
      if (pos(at[static_cast<std::size_t>(p - 1)]) > pos(at[static_cast<std::size_t>(p)])) {
        out.push_back(rho(p));
        swap_at(p);
      }
    }
  }
  if (at != target) throw DomainError("internal: boundary permutation not realized");
  return BraidWord(n, std::move(out));
}

namespace {

[[noreturn]] void inapplicable(const std::string& what, std::size_t time) {
  throw MoveInapplicable(what + " does not apply at time " + std::to_string(time));
}

bool omega2_pair(const Arrow& a, const Arrow& b) {
  return a.from == b.from && a.to == b.to && a.sign == -b.sign;
}

bool tail_commute_pair(const Arrow& a, const Arrow& b) { return a.from == b.from && a.to != b.to; }

// (b->c, a->c, a->b) or its time reversal (a->b, a->c, b->c), common sign.
bool omega3_triple(const Arrow& x, const Arrow& y, const Arrow& z) {
  if (x.sign != y.sign || y.sign != z.sign) return false;
  const bool first_form = x.to == y.to && y.from == z.from && z.to == x.from;
  const bool second_form = x.from == y.from && y.to == z.to && x.to == z.from;
  return first_form || second_form;
}

}  // namespace

GaussDiagram apply_gauss_move(const GaussDiagram& g, const GaussMove& move) {
  std::vector<Arrow> arrows = g.arrows();
  const std::size_t t = move.time;
  switch (move.kind) {
    case GaussMoveKind::Omega2Remove:
      if (t + 1 >= arrows.size() || !omega2_pair(arrows[t], arrows[t + 1])) inapplicable("Omega2", t);
      arrows.erase(arrows.begin() + static_cast<std::ptrdiff_t>(t),
                   arrows.begin() + static_cast<std::ptrdiff_t>(t + 2));
      break;
    case GaussMoveKind::Omega2Insert: {
      if (t > arrows.size()) inapplicable("Omega2 insertion", t);
      const Arrow first{move.from, move.to, move.sign};
      const Arrow second{move.from, move.to, -move.sign};
      arrows.insert(arrows.begin() + static_cast<std::ptrdiff_t>(t), {first, second});
      break;
    }
    case GaussMoveKind::Omega3:
      if (t + 2 >= arrows.size() || !omega3_triple(arrows[t], arrows[t + 1], arrows[t + 2])) {
        inapplicable("Omega3", t);
      }
      std::swap(arrows[t], arrows[t + 2]);
      break;
    case GaussMoveKind::TailCommute:
      if (t + 1 >= arrows.size() || !tail_commute_pair(arrows[t], arrows[t + 1])) inapplicable("TC", t);
      std::swap(arrows[t], arrows[t + 1]);
      break;
  }
  return GaussDiagram(g.strands(), std::move(arrows), g.endpoints());
}

std::vector<GaussMove> applicable_gauss_moves(const GaussDiagram& g) {
  std::vector<GaussMove> out;
  const auto& a = g.arrows();
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (t + 1 < a.size() && omega2_pair(a[t], a[t + 1])) out.push_back({GaussMoveKind::Omega2Remove, t});
    if (t + 2 < a.size() && omega3_triple(a[t], a[t + 1], a[t + 2])) out.push_back({GaussMoveKind::Omega3, t});
    if (t + 1 < a.size() && tail_commute_pair(a[t], a[t + 1])) out.push_back({GaussMoveKind::TailCommute, t});
  }
  return out;
}

bool gauss_equal(const GaussDiagram& g1, const GaussDiagram& g2) {
  if (g1.strands() != g2.strands()) throw DomainError("strand count mismatch");
  return evaluate(realize(g1)) == evaluate(realize(g2));
}

std::string to_json(const GaussDiagram& g) {
  nlohmann::ordered_json doc;
  doc["strands"] = g.strands();
  doc["arrows"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < g.arrows().size(); ++k) {
    const Arrow& a = g.arrows()[k];
    nlohmann::ordered_json arrow;
    arrow["t"] = k + 1;
    arrow["from"] = a.from;
    arrow["to"] = a.to;
    arrow["sign"] = a.sign;
    doc["arrows"].push_back(std::move(arrow));
  }
  doc["perm"] = g.endpoints();
  return doc.dump();
}

GaussDiagram gauss_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    const int strands = doc.at("strands").get<int>();
    std::vector<Arrow> arrows;
    std::size_t expected_t = 1;
    for (const auto& item : doc.at("arrows")) {
      if (item.at("t").get<std::size_t>() != expected_t) {
        throw DomainError("arrow times must be consecutive from 1 in sorted order");
      }
      ++expected_t;
      arrows.push_back({item.at("from").get<int>(), item.at("to").get<int>(), item.at("sign").get<int>()});
    }
    return GaussDiagram(strands, std::move(arrows), doc.at("perm").get<Permutation>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed Gauss diagram: ") + e.what());
  }
}

}  // namespace loopbraid

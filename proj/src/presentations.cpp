#include "loopbraid/presentations.hpp"

#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "loopbraid/errors.hpp"

namespace loopbraid {

std::string sigma_symbol(int i) { return "s" + std::to_string(i); }
std::string rho_symbol(int i) { return "r" + std::to_string(i); }
std::string tau_symbol(int i) { return "t" + std::to_string(i); }
std::string alpha_symbol(int i, int j) { return "a" + std::to_string(i) + "_" + std::to_string(j); }

namespace {

using Word = std::vector<SymbolLetter>;

Word inv(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->symbol, -it->exponent});
  return out;
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word S(int i) { return {{sigma_symbol(i), 1}}; }
Word Sinv(int i) { return {{sigma_symbol(i), -1}}; }
Word R(int i) { return {{rho_symbol(i), 1}}; }
Word T(int i) { return {{tau_symbol(i), 1}}; }
Word A(int i, int j) { return {{alpha_symbol(i, j), 1}}; }
Word Ainv(int i, int j) { return {{alpha_symbol(i, j), -1}}; }

template <typename... Ws>
Word seq(const Ws&... parts) {
  Word out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

// u = v becomes the relator u v^-1.
void equate(Presentation& p, std::string family, std::vector<int> indices, const Word& u, const Word& v) {
  p.relators.push_back({std::move(family), std::move(indices), cat(u, inv(v))});
}

void relator(Presentation& p, std::string family, std::vector<int> indices, Word r) {
  p.relators.push_back({std::move(family), std::move(indices), std::move(r)});
}

void require_strands(int n) {
  if (n < 2) throw DomainError("presentations need at least 2 strands");
}

void add_sigma_rho_generators(Presentation& p, int n) {
  for (int i = 1; i < n; ++i) {
    p.generators.push_back(sigma_symbol(i));
    p.interpretation.emplace(sigma_symbol(i), Interpretation{PCAut::sigma(n, i), PCAut::sigma_inverse(n, i)});
  }
  for (int i = 1; i < n; ++i) {
    p.generators.push_back(rho_symbol(i));
    p.interpretation.emplace(rho_symbol(i), Interpretation{PCAut::rho(n, i), PCAut::rho(n, i)});
  }
}

void add_tau_generators(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i) {
    p.generators.push_back(tau_symbol(i));
    p.interpretation.emplace(tau_symbol(i), Interpretation{PCAut::tau(n, i), PCAut::tau(n, i)});
  }
}

PCAut alpha_inverse_closed_form(int n, int i, int j) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= n; ++k) images.push_back(FreeWord::generator(n, k));
  const Letter letters[] = {{j, 1}, {i, 1}, {j, -1}};
  images[static_cast<std::size_t>(i - 1)] = FreeWord::reduce(n, letters);
  return PCAut::from_images(n, std::move(images));
}

void add_alpha_generators(Presentation& p, int n, AlphaSource source) {
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      p.generators.push_back(alpha_symbol(i, j));
      if (source == AlphaSource::Words) {
        const BraidWord w = alpha_word(n, i, j);
        p.interpretation.emplace(alpha_symbol(i, j), Interpretation{evaluate(w), evaluate(inverse_word(w))});
      } else {
        p.interpretation.emplace(alpha_symbol(i, j),
                                 Interpretation{PCAut::alpha(n, i, j), alpha_inverse_closed_form(n, i, j)});
      }
    }
  }
}

bool distinct(std::initializer_list<int> values) {
  for (auto a = values.begin(); a != values.end(); ++a) {
    for (auto b = a + 1; b != values.end(); ++b) {
      if (*a == *b) return false;
    }
  }
  return true;
}

// Shared by both pure presentations: alpha_ij alpha_kl = alpha_kl alpha_ij.
void add_disjoint_alpha_commutations(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (!distinct({i, j, k, l}) || std::pair(i, j) > std::pair(k, l)) continue;
          equate(p, "comm-disjoint", {i, j, k, l}, seq(A(i, j), A(k, l)), seq(A(k, l), A(i, j)));
        }
}

constexpr const char* kDistinctNote =
    "indices in every family are pairwise distinct (triangle family included)";

}  // namespace

Presentation ur_presentation(int n) {
  require_strands(n);
  Presentation p;
  p.name = "UR";
  p.strands = n;
  add_sigma_rho_generators(p, n);

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) equate(p, "far-ss", {i, j}, seq(S(i), S(j)), seq(S(j), S(i)));
  for (int i = 1; i + 1 < n; ++i)
    equate(p, "braid-ss", {i}, seq(S(i), S(i + 1), S(i)), seq(S(i + 1), S(i), S(i + 1)));
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) equate(p, "far-rr", {i, j}, seq(R(i), R(j)), seq(R(j), R(i)));
  for (int i = 1; i + 1 < n; ++i)
    equate(p, "braid-rr", {i}, seq(R(i), R(i + 1), R(i)), seq(R(i + 1), R(i), R(i + 1)));
  for (int i = 1; i < n; ++i) relator(p, "rr", {i}, seq(R(i), R(i)));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (std::abs(i - j) > 1) equate(p, "far-rs", {i, j}, seq(R(i), S(j)), seq(S(j), R(i)));
  for (int i = 1; i + 1 < n; ++i)
    equate(p, "mixed", {i}, seq(R(i + 1), R(i), S(i + 1)), seq(S(i), R(i + 1), R(i)));
  for (int i = 1; i + 1 < n; ++i)
    equate(p, "welded", {i}, seq(S(i + 1), S(i), R(i + 1)), seq(R(i), S(i + 1), S(i)));
  return p;
}

Presentation r_presentation(int n) {
  Presentation p = ur_presentation(n);
  p.name = "R";
  add_tau_generators(p, n);

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) equate(p, "tt-comm", {i, j}, seq(T(i), T(j)), seq(T(j), T(i)));
  for (int i = 1; i <= n; ++i) relator(p, "tt", {i}, seq(T(i), T(i)));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(i - j) > 1) equate(p, "far-st", {i, j}, seq(S(i), T(j)), seq(T(j), S(i)));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(i - j) > 1) equate(p, "far-rt", {i, j}, seq(R(i), T(j)), seq(T(j), R(i)));
  for (int i = 1; i < n; ++i) equate(p, "tr", {i}, seq(T(i), R(i)), seq(R(i), T(i + 1)));
  for (int i = 1; i < n; ++i) equate(p, "ts", {i}, seq(T(i), S(i)), seq(S(i), T(i + 1)));
  for (int i = 1; i < n; ++i)
    equate(p, "ts-bar", {i}, seq(T(i + 1), S(i)), seq(R(i), Sinv(i), R(i), T(i)));
  return p;
}

Presentation pur_presentation(int n, AlphaSource source) {
  require_strands(n);
  Presentation p;
  p.name = "PUR";
  p.strands = n;
  p.notes.push_back(kDistinctNote);
  add_alpha_generators(p, n, source);

  add_disjoint_alpha_commutations(p, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        equate(p, "comm-common-target", {i, j, k}, seq(A(i, k), A(j, k)), seq(A(j, k), A(i, k)));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        equate(p, "triangle", {i, j, k}, seq(A(i, j), A(i, k), A(j, k)), seq(A(i, k), A(j, k), A(i, j)));
      }
  return p;
}

Presentation plbe_presentation(int n, AlphaSource source) {
  require_strands(n);
  Presentation p;
  p.name = "PLBE";
  p.strands = n;
  p.notes.push_back(kDistinctNote);
  add_alpha_generators(p, n, source);
  add_tau_generators(p, n);

  add_disjoint_alpha_commutations(p, n);
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        if (!distinct({i, j, k})) continue;
        equate(p, "comm-common-target", {i, j, k}, seq(A(i, j), A(k, j)), seq(A(k, j), A(i, j)));
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        equate(p, "triangle", {i, j, k}, seq(A(i, j), A(k, j), A(i, k)), seq(A(i, k), A(i, j), A(k, j)));
      }
  for (int i = 1; i <= n; ++i) relator(p, "tt", {i}, seq(T(i), T(i)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) equate(p, "t-alpha-source", {i, j}, seq(T(i), A(i, j)), seq(A(i, j), T(i)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (distinct({i, j, k})) equate(p, "t-alpha-disjoint", {i, j, k}, seq(T(i), A(j, k)), seq(A(j, k), T(i)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) equate(p, "t-alpha-target", {i, j}, seq(T(i), A(j, i), T(i)), Ainv(j, i));
  return p;
}

std::string format_relator(const Relator& r) {
  std::string out;
  for (const SymbolLetter& letter : r.word) {
    if (!out.empty()) out += ' ';
    out += letter.symbol;
    if (letter.exponent < 0) out += "^-1";
  }
  return out;
}

VerifyReport verify(const Presentation& p) {
  VerifyReport report;
  report.presentation = p.name;
  report.strands = p.strands;
  report.notes = p.notes;
  report.pass = true;
  const PCAut id = PCAut::identity(p.strands);

  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    const Relator& r = p.relators[k];
    PCAut value = id;
    for (const SymbolLetter& letter : r.word) {
      auto it = p.interpretation.find(letter.symbol);
      if (it == p.interpretation.end()) {
        throw ConfigurationError("symbol '" + letter.symbol + "' has no interpretation in " + p.name);
      }
      value = compose(value, letter.exponent > 0 ? it->second.image : it->second.inverse);
    }
    RelatorCheck check{k + 1, r.family, r.indices, format_relator(r), value == id, 0, {}};
    if (!check.pass) {
      report.pass = false;
      for (int i = 1; i <= p.strands; ++i) {
        if (value.image(i) != id.image(i)) {
          check.witness_generator = i;
          check.witness_image = format(value.image(i));
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string format_report_table(const VerifyReport& report) {
  std::ostringstream out;
  out << "presentation " << report.presentation << " on " << report.strands << " strands\n";
  for (const auto& note : report.notes) out << "note: " << note << '\n';
  out << std::left << std::setw(6) << "id" << std::setw(22) << "family" << std::setw(14) << "indices"
      << std::setw(6) << "ok"
      << "relator\n";
  for (const auto& check : report.checks) {
    std::string indices;
    for (int v : check.indices) indices += (indices.empty() ? "" : ",") + std::to_string(v);
    out << std::setw(6) << check.id << std::setw(22) << check.family << std::setw(14) << indices
        << std::setw(6) << (check.pass ? "pass" : "FAIL") << check.text << '\n';
    if (!check.pass) {
      out << "      witness: x_" << check.witness_generator << " -> " << check.witness_image << '\n';
    }
  }
  std::size_t passed = 0;
  for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
  out << passed << "/" << report.checks.size() << " relators verified: " << (report.pass ? "PASS" : "FAIL")
      << '\n';
  return out.str();
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["presentation"] = report.presentation;
  doc["strands"] = report.strands;
  doc["pass"] = report.pass;
  doc["notes"] = report.notes;
  doc["relators"] = nlohmann::ordered_json::array();
  for (const auto& check : report.checks) {
    nlohmann::ordered_json item;
    item["id"] = check.id;
    item["family"] = check.family;
    item["indices"] = check.indices;
    item["relator"] = check.text;
    item["pass"] = check.pass;
    if (!check.pass) {
      item["witness"] = {{"generator", check.witness_generator}, {"image", check.witness_image}};
    }
    doc["relators"].push_back(std::move(item));
  }
  return doc.dump(2);
}

}  // namespace loopbraid

#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopbraid/braid_words.hpp"
#include "loopbraid/pc_automorphism.hpp"

namespace loopbraid {

/// A generator symbol raised to +-1, e.g. {"a1_2", -1}.
struct SymbolLetter {
  std::string symbol;
  int exponent = 1;
};

/// A relator r, meaning r = 1. Equalities u = v are stored as u v^-1.
struct Relator {
  std::string family;
  std::vector<int> indices;
  std::vector<SymbolLetter> word;
};

struct Interpretation {
  PCAut image;
  PCAut inverse;
};

struct Presentation {
  std::string name;
  int strands = 2;
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  std::map<std::string, Interpretation> interpretation;
  /// Free-form notes carried into verification reports.
  std::vector<std::string> notes;
};

/// Symbols: s<i>, r<i>, t<i>, a<i>_<j> (alpha_ij).
std::string sigma_symbol(int i);
std::string rho_symbol(int i);
std::string tau_symbol(int i);
std::string alpha_symbol(int i, int j);

/// Unrestricted (loop braid) presentation: sigma_i, rho_i with the eight
/// relation families far-ss, braid-ss, far-rr, braid-rr, rr, far-rs, mixed,
/// welded.
Presentation ur_presentation(int n);

/// ur_presentation plus tau_1..tau_n and tt-comm, tt, far-st, far-rt, tr, ts,
/// ts-bar.
Presentation r_presentation(int n);

enum class AlphaSource {
  Words,       // evaluate(alpha_word(n, i, j))
  ClosedForm,  // x_i -> x_j^-1 x_i x_j directly
};

/// Pure loop braid presentation on alpha_ij, families comm-disjoint,
/// comm-common-target, triangle.
Presentation pur_presentation(int n, AlphaSource source = AlphaSource::Words);

/// Pure extended presentation on alpha_ij and tau_i (seven families).
Presentation plbe_presentation(int n, AlphaSource source = AlphaSource::Words);

struct RelatorCheck {
  std::size_t id = 0;
  std::string family;
  std::vector<int> indices;
  std::string text;
  bool pass = false;
  /// On failure: first generator not fixed and its image.
  int witness_generator = 0;
  std::string witness_image;
};

struct VerifyReport {
  std::string presentation;
  int strands = 0;
  std::vector<RelatorCheck> checks;
  std::vector<std::string> notes;
  bool pass = false;
};

/// Evaluates every relator under the interpretation. Throws
/// ConfigurationError if a relator uses a symbol with no interpretation.
VerifyReport verify(const Presentation& p);

std::string format_relator(const Relator& r);
std::string format_report_table(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);

}  // namespace loopbraid

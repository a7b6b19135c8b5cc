#include "loopbraid/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "loopbraid/braid_words.hpp"
#include "loopbraid/errors.hpp"
#include "loopbraid/gauss.hpp"
#include "loopbraid/presentations.hpp"
#include "loopbraid/render.hpp"
#include "loopbraid/rewriting.hpp"

namespace loopbraid::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + std::to_string(values[k]);
  return out + "]";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loop braid toolkit: word problem, presentations, rewriting, Gauss diagrams"};
  app.require_subcommand(1);

  int strands = 0;
  bool extended = false;
  bool json = false;
  std::size_t depth = 8;
  std::size_t max_states = 200000;
  std::size_t budget = 20000;
  std::uint64_t seed = 1;
  std::size_t length = 10;
  std::string word1;
  std::string word2;
  std::string file;
  std::string name = "ur";
  bool svg = false;

  auto add_strands = [&](CLI::App* sub) { sub->add_option("-n,--strands", strands, "Number of strands")->required(); };

  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "Print the automorphism of F_n represented by a word");
  add_strands(eval);
  eval->add_option("word", word1, "Braid word, e.g. \"s1 S2 r1 t3\"")->required();
  eval->callback([&] {
    action = [&] {
      out << format(evaluate(parse_braid_word(word1, strands)));
      return kOk;
    };
  });

  auto* eq = app.add_subcommand("equal", "Decide whether two words are equal (exit 0 equal, 1 different)");
  add_strands(eq);
  eq->add_option("first", word1)->required();
  eq->add_option("second", word2)->required();
  eq->callback([&] {
    action = [&] {
      const bool same = equal(parse_braid_word(word1, strands), parse_braid_word(word2, strands));
      out << (same ? "equal" : "different") << '\n';
      return same ? kOk : kDifferent;
    };
  });

  auto* perm = app.add_subcommand("perm", "Print the permutation and purity of a word");
  add_strands(perm);
  perm->add_option("word", word1)->required();
  perm->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(word1, strands);
      out << "perm: " << join(permutation(w)) << '\n'
          << "strands: " << join(strand_endpoints(w)) << '\n'
          << "pure: " << (is_pure(w) ? "true" : "false") << '\n'
          << "extended: " << (is_extended(w) ? "true" : "false") << '\n';
      return kOk;
    };
  });

  auto* to_gauss = app.add_subcommand("to-gauss", "Convert a tau-free word to Gauss diagram JSON");
  add_strands(to_gauss);
  to_gauss->add_option("word", word1)->required();
  to_gauss->callback([&] {
    action = [&] {
      out << to_json(from_word(parse_braid_word(word1, strands))) << '\n';
      return kOk;
    };
  });

  auto* from_gauss = app.add_subcommand("from-gauss", "Realize a Gauss diagram JSON file as a word");
  from_gauss->add_option("file", file, "Gauss diagram JSON")->required();
  from_gauss->callback([&] {
    action = [&] {
      out << format(realize(gauss_from_json(read_file(file)))) << '\n';
      return kOk;
    };
  });

  auto* simp = app.add_subcommand("simplify", "Search for a shorter equivalent word");
  add_strands(simp);
  simp->add_option("word", word1)->required();
  simp->add_option("--budget", budget, "States explored per round");
  simp->callback([&] {
    action = [&] {
      out << format(simplify(parse_braid_word(word1, strands), budget)) << '\n';
      return kOk;
    };
  });

  auto* search = app.add_subcommand("search", "Find a move path between two words (exit 3 if inconclusive)");
  add_strands(search);
  search->add_option("first", word1)->required();
  search->add_option("second", word2)->required();
  search->add_option("--depth", depth, "Maximum number of moves");
  search->add_option("--max-states", max_states, "State budget");
  search->add_flag("--extended", extended, "Use the extended (tau) rules even for tau-free words");
  search->callback([&] {
    action = [&] {
      const BraidWord a = parse_braid_word(word1, strands);
      const BraidWord b = parse_braid_word(word2, strands);
      SearchOptions options;
      options.max_depth = depth;
      options.max_states = max_states;
      options.extended = extended;
      const SearchResult result = bfs_equivalent(a, b, options);
      if (result.status == SearchStatus::Inconclusive) {
        out << "inconclusive\n";
        return kInconclusive;
      }
      out << path_to_json_lines(result.rules, result.path);
      return kOk;
    };
  });

  auto* replay_cmd = app.add_subcommand("replay", "Apply a JSON-lines move path to a word");
  add_strands(replay_cmd);
  replay_cmd->add_option("word", word1)->required();
  replay_cmd->add_option("path", file, "File produced by `search`")->required();
  replay_cmd->add_flag("--extended", extended, "Path was produced with the extended rules");
  replay_cmd->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(word1, strands);
      const bool ext = extended || is_extended(w);
      const RuleSet rules = RuleSet::make(strands, ext, std::numeric_limits<std::size_t>::max());
      out << format(replay(w, rules, path_from_json_lines(rules, read_file(file)))) << '\n';
      return kOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify-presentation", "Check every relator against the automorphisms");
  add_strands(verify_cmd);
  verify_cmd->add_option("--name", name, "ur | r | pur | plbe")
      ->check(CLI::IsMember({"ur", "r", "pur", "plbe"}));
  verify_cmd->add_flag("--json", json, "Emit a JSON report");
  verify_cmd->callback([&] {
    action = [&] {
      Presentation p = name == "ur"    ? ur_presentation(strands)
                       : name == "r"   ? r_presentation(strands)
                       : name == "pur" ? pur_presentation(strands)
                                       : plbe_presentation(strands);
      const VerifyReport report = verify(p);
      out << (json ? report_to_json(report) + "\n" : format_report_table(report));
      return report.pass ? kOk : kDifferent;
    };
  });

  auto* random_cmd = app.add_subcommand("random", "Print a random word");
  add_strands(random_cmd);
  random_cmd->add_option("--length", length);
  random_cmd->add_option("--seed", seed);
  random_cmd->add_flag("--extended", extended, "Allow tau tokens");
  random_cmd->callback([&] {
    action = [&] {
      out << format(random_word(strands, length, seed, extended)) << '\n';
      return kOk;
    };
  });

  auto* render = app.add_subcommand("render", "Draw the strand diagram of a word");
  add_strands(render);
  render->add_option("word", word1)->required();
  render->add_flag("--svg", svg, "SVG instead of ASCII");
  render->callback([&] {
    action = [&] {
      const BraidWord w = parse_braid_word(word1, strands);
      out << (svg ? render_svg(w) : render_ascii(w));
      return kOk;
    };
  });

  std::vector<const char*> argv{"loopbraid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace loopbraid::cli

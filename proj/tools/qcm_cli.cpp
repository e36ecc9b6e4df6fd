#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "qcm/errors.hpp"
#include "qcm/verify.hpp"

using namespace qcm;

namespace {

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c < '1' || c > '9') throw Error("word must be a digit string, got: " + s);
    w.push_back(c - '0');
  }
  return w;
}

CartanPtr resolve_type(std::string type, const Word& word) {
  if (!type.empty()) return make_cartan(type);
  int mx = 1;
  for (int l : word) mx = std::max(mx, l);
  return make_cartan("A" + std::to_string(mx));
}

std::vector<int> parse_seq(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item) - 1);
  return out;
}

// Edge list "pos/len,pos/len,..." applied from a base word, 1-based.
EdgePath parse_cycle(const CartanDatum& datum, const Word& base, const std::string& s) {
  EdgePath path;
  Word cur = base;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto slash = item.find('/');
    if (slash == std::string::npos) throw Error("edge must be pos/len: " + item);
    const int pos = std::stoi(item.substr(0, slash)) - 1;
    const int len = std::stoi(item.substr(slash + 1));
    if (pos < 0 || pos + len > static_cast<int>(cur.size()))
      throw Error("edge window out of range: " + item);
    const int a = cur[pos], b = cur[pos + 1];
    const int kind = datum.m(a, b);
    if ((kind == 3 ? 3 : kind) != len)
      throw Error("pattern length does not match m_ab at " + item);
    CoxeterMove m{pos, a, b, kind};
    path.push_back({cur, m});
    cur = apply_move(datum, cur, m);
  }
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum cluster mutations over reduced word graphs"};
  app.require_subcommand(1);

  std::string type, word_str_opt, format = "json", seq_str, expr, cycle_str, orientation = "default";
  bool quotient_flag = false, trace = false, with_decompose = false, json_out = false;

  auto* cartan_cmd = app.add_subcommand("cartan", "dump Cartan data as JSON");
  cartan_cmd->add_option("--type", type)->required();

  auto* words_cmd = app.add_subcommand("words", "reduced word graph of w0");
  words_cmd->add_option("--type", type)->required();
  words_cmd->add_flag("--quotient", quotient_flag);
  words_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* quiver_cmd = app.add_subcommand("quiver", "basic quiver of a reduced word");
  quiver_cmd->add_option("--word", word_str_opt)->required();
  quiver_cmd->add_option("--type", type);
  quiver_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a torus element along a vertex sequence");
  mutate_cmd->add_option("--word", word_str_opt)->required();
  mutate_cmd->add_option("--type", type);
  mutate_cmd->add_option("--seq", seq_str)->required();
  mutate_cmd->add_option("--expr", expr)->required();
  mutate_cmd->add_flag("--trace", trace);

  auto* decomp_cmd = app.add_subcommand("decompose", "decompose a closed path into Tits generators");
  decomp_cmd->add_option("--type", type)->required();
  decomp_cmd->add_option("--word", word_str_opt, "base word (default: longest word)");
  decomp_cmd->add_option("--cycle", cycle_str, "edges pos/len,... from the base word")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  auto* rank3_cmd = verify_cmd->add_subcommand("rank3", "built-in A3/B3 cycle verification");
  rank3_cmd->add_option("--type", type)->required()->check(CLI::IsMember({"A3", "B3"}));
  rank3_cmd->add_flag("--trace", trace);
  rank3_cmd->add_flag("--json", json_out);
  auto* cycle_cmd = verify_cmd->add_subcommand("cycle", "verify an arbitrary closed path");
  cycle_cmd->add_option("--type", type)->required();
  cycle_cmd->add_option("--word", word_str_opt, "base word (default: longest word)");
  cycle_cmd->add_option("--cycle", cycle_str)->required();
  cycle_cmd->add_flag("--decompose", with_decompose);
  cycle_cmd->add_flag("--json", json_out);

  auto* lusztig_cmd = app.add_subcommand("lusztig", "Lusztig coordinates of a longest word");
  lusztig_cmd->add_option("--word", word_str_opt)->required();
  lusztig_cmd->add_option("--type", type);
  lusztig_cmd->add_option("--orientation", orientation)->check(CLI::IsMember({"default", "reverse"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cartan_cmd) {
      std::cout << make_cartan(type)->to_json() << "\n";
      return 0;
    }
    if (*words_cmd) {
      auto datum = make_cartan(type);
      auto graph = build_word_graph(datum, longest_word(*datum));
      if (quotient_flag) {
        auto q = quotient(graph);
        std::cout << (format == "dot" ? q.to_dot(graph) : q.to_json(graph)) << "\n";
      } else {
        std::cout << (format == "dot" ? graph.to_dot() : graph.to_json()) << "\n";
      }
      return 0;
    }
    if (*quiver_cmd) {
      const Word w = parse_word(word_str_opt);
      auto seed = basic_quiver(resolve_type(type, w), w);
      std::cout << (format == "dot" ? seed->to_dot() : seed->to_json()) << "\n";
      return 0;
    }
    if (*mutate_cmd) {
      const Word w = parse_word(word_str_opt);
      auto seed = basic_quiver(resolve_type(type, w), w);
      const auto seq = parse_seq(seq_str);
      TorusElement f = parse_expr(seed, expr);
      TorusElement cur = f;
      SeedPtr s = seed;
      for (size_t t = 0; t < seq.size(); ++t) {
        MutationStep step(s, seq[t]);
        cur = mutate_element(step, cur);
        s = step.to();
        if (trace)
          std::cout << "mu_" << seq[t] + 1 << "^*: " << format_expr(cur) << "\n";
      }
      if (!trace) std::cout << format_expr(cur) << "\n";
      return 0;
    }
    if (*decomp_cmd) {
      auto datum = make_cartan(type);
      const Word base = word_str_opt.empty() ? longest_word(*datum) : parse_word(word_str_opt);
      EdgePath cycle = parse_cycle(*datum, base, cycle_str);
      if (!path_is_closed(*datum, cycle)) throw NotACycle("edge list does not close up");
      auto witness = decompose(*datum, cycle);
      if (!verify_witness(*datum, cycle, witness))
        throw Error("internal error: witness failed replay");
      std::cout << witness.to_json(*datum) << "\n";
      return 0;
    }
    if (*rank3_cmd) {
      const CycleSpec spec = type == "A3" ? a3_cycle_spec() : b3_cycle_spec();
      std::vector<std::string> lines;
      auto rep = verify_rank3(spec, trace, &lines);
      for (const auto& l : lines) std::cout << l << "\n";
      std::cout << (json_out ? rep.to_json() : rep.text());
      return rep.pass() ? 0 : 1;
    }
    if (*cycle_cmd) {
      auto datum = make_cartan(type);
      const Word base = word_str_opt.empty() ? longest_word(*datum) : parse_word(word_str_opt);
      EdgePath cycle = parse_cycle(*datum, base, cycle_str);
      if (!path_is_closed(*datum, cycle)) throw NotACycle("edge list does not close up");
      auto rep = verify_cycle(datum, cycle, with_decompose);
      std::cout << (json_out ? rep.to_json() : rep.text());
      return rep.pass() ? 0 : 1;
    }
    if (*lusztig_cmd) {
      const Word w = parse_word(word_str_opt);
      auto datum = resolve_type(type, w);
      auto seed = basic_quiver(datum, w);
      OrientedDynkin H = default_orientation(*datum);
      if (orientation == "reverse")
        for (auto& [u, v] : H.edges) std::swap(u, v);
      auto tilde = oriented_basic_quiver(seed, H);
      const auto alphas = lusztig_coordinates(tilde);
      for (size_t k = 0; k < alphas.size(); ++k)
        std::cout << "alpha_" << k + 1 << " = "
                  << format_expr(TorusElement::monomial(tilde, alphas[k])) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

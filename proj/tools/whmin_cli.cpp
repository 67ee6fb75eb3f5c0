// Command-line front end for Whitehead minimization: words, cyclic words,
// subgroups, conjugacy-class graphs and tuples, plus the primitivity and
// free-factor deciders, graph utilities and the randomized oracle harness.
//
// Exit codes: 0 ok, 1 negative verdict (deciders with --exit-status),
// 2 usage/input error, 3 internal invariant failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "whmin/harness.hpp"
#include "whmin/whmin.hpp"

using nlohmann::json;
using namespace whmin;

namespace {

std::vector<Word> parse_word_list(const std::string& text, bool strict) {
  std::vector<Word> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ',')) out.push_back(parse_word(cur, strict));
  return out;
}

int infer_rank(const std::vector<Word>& words, int explicit_rank) {
  if (explicit_rank > 0) return explicit_rank;
  int r = 1;
  for (const Word& w : words) r = std::max(r, min_rank(w));
  return r;
}

ParsedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::vector<ParsedGraph> load_graphs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  std::vector<std::string> blocks;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("agraph", 0) == 0) blocks.emplace_back();
    if (blocks.empty() && !line.empty() && line[0] != '#')
      throw std::invalid_argument("expected 'agraph' header in '" + path + "'");
    if (!blocks.empty()) blocks.back() += line + "\n";
  }
  std::vector<ParsedGraph> out;
  for (const std::string& b : blocks) out.push_back(parse_graph(b));
  if (out.empty()) throw std::invalid_argument("no graphs in '" + path + "'");
  return out;
}

json step_to_json(const AutStep& step, int rank) {
  json j = json::object();
  if (step.aut) j["aut"] = format_aut(*step.aut);
  if (!step.conjugator.empty()) j["conjugator"] = format_word(step.conjugator, rank);
  return j;
}

json trace_to_json(const MinimizationTrace& trace, int rank) {
  json arr = json::array();
  for (const AutStep& s : trace) arr.push_back(step_to_json(s, rank));
  return arr;
}

void print_trace_text(const MinimizationTrace& trace, int rank) {
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::cout << "step " << i + 1 << ":";
    if (trace[i].aut) std::cout << " aut " << format_aut(*trace[i].aut);
    if (!trace[i].conjugator.empty())
      std::cout << " conjugator " << format_word(trace[i].conjugator, rank);
    std::cout << "\n";
  }
}

struct Options {
  int rank = 0;
  bool as_json = false;
  bool witness = false;
  bool exit_status = false;
  int threads = 1;
  std::uint64_t seed = 20260823;
};

void emit_result(const Options& opt, int rank, const std::string& input,
                 const std::string& minimal, const MinimizationResult& res) {
  if (opt.as_json) {
    json j;
    j["input"] = input;
    j["minimal"] = minimal;
    j["size_history"] = res.size_history;
    j["trace"] = trace_to_json(res.trace, rank);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "minimal: " << minimal << "\n";
  std::cout << "size-history:";
  for (int s : res.size_history) std::cout << ' ' << s;
  std::cout << "\nsteps: " << res.trace.size() << "\n";
  if (opt.witness) print_trace_text(res.trace, rank);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitehead minimization in free groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--rank", opt.rank, "ambient rank (default: inferred from input)");
  app.add_flag("--json", opt.as_json, "JSON output");
  app.add_flag("--witness", opt.witness, "print the witnessing trace");
  app.add_flag("--exit-status", opt.exit_status,
               "exit 1 on a negative decider verdict");
  app.add_option("--threads", opt.threads, "max parallel cut searches per step")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized harnesses");

  std::string word_arg, gens_arg, file_arg;
  int oc_rank = 3, oc_cases = 200;

  auto* c_word = app.add_subcommand("minimize-word", "minimize a word");
  c_word->add_option("word", word_arg)->required();
  auto* c_cyc = app.add_subcommand("minimize-cyclic", "minimize a cyclic word");
  c_cyc->add_option("word", word_arg)->required();
  auto* c_sub = app.add_subcommand("minimize-subgroup",
                                   "minimize a subgroup given by generators");
  c_sub->add_option("generators", gens_arg, "comma-separated words")->required();
  auto* c_conj = app.add_subcommand("minimize-conjugacy",
                                    "minimize a conjugacy class given as a graph file");
  c_conj->add_option("graphfile", file_arg)->required();
  auto* c_tup = app.add_subcommand("minimize-tuple",
                                   "minimize a tuple of conjugacy-class graphs");
  c_tup->add_option("graphfile", file_arg)->required();
  auto* c_prim = app.add_subcommand("is-primitive", "decide primitivity of a word");
  c_prim->add_option("word", word_arg)->required();
  auto* c_ff = app.add_subcommand("is-free-factor", "decide the free factor property");
  c_ff->add_option("generators", gens_arg, "comma-separated words")->required();
  auto* c_fold = app.add_subcommand("fold", "fold a graph file");
  c_fold->add_option("graphfile", file_arg)->required();
  auto* c_hyp = app.add_subcommand("hypergraph", "print the Whitehead hypergraph");
  c_hyp->add_option("graphfile", file_arg)->required();
  auto* c_dot = app.add_subcommand("export-dot", "DOT export (positive edges only)");
  c_dot->add_option("graphfile", file_arg)->required();
  auto* c_oracle = app.add_subcommand(
      "oracle-check", "run the min-cut and size-formula verification suites");
  c_oracle->add_option("--cases", oc_cases, "cases per suite")->check(CLI::PositiveNumber);
  c_oracle->add_option("--oracle-rank", oc_rank, "max rank for the harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_word || *c_cyc) {
      Word u = parse_word(word_arg);
      if (u.empty() && word_arg != "1")
        throw std::invalid_argument("empty input word");
      int rank = infer_rank({u}, opt.rank);
      MinimizationResult res;
      std::string minimal;
      if (*c_word) {
        res = minimize_word(u, rank, opt.threads);
        minimal = format_word(res.word, rank);
      } else {
        res = minimize_cyclic_word(CyclicWord(cyclic_core_word(u).second), rank,
                                   opt.threads);
        minimal = format_word(res.cyclic, rank);
      }
      emit_result(opt, rank, word_arg, minimal, res);
    } else if (*c_sub) {
      std::vector<Word> gens = parse_word_list(gens_arg, false);
      int rank = infer_rank(gens, opt.rank);
      MinimizationResult res = minimize_subgroup(gens, rank, opt.threads);
      std::string minimal;
      for (std::size_t i = 0; i < res.basis.size(); ++i)
        minimal += (i ? "," : "") + format_word(res.basis[i], rank);
      emit_result(opt, rank, gens_arg, minimal, res);
    } else if (*c_conj) {
      ParsedGraph pg = load_graph(file_arg);
      MinimizationResult res = minimize_conjugacy(pg.graph, opt.threads);
      emit_result(opt, pg.graph.rank, file_arg, write_graph(res.graph), res);
    } else if (*c_tup) {
      std::vector<ParsedGraph> pgs = load_graphs(file_arg);
      std::vector<AGraph> gs;
      for (auto& p : pgs) {
        if (p.graph.rank != pgs.front().graph.rank)
          throw std::invalid_argument("tuple components must share one rank");
        gs.push_back(std::move(p.graph));
      }
      MinimizationResult res = minimize_tuple(gs, opt.threads);
      std::string minimal;
      for (const AGraph& g : res.tuple) minimal += write_graph(g);
      emit_result(opt, gs.front().rank, file_arg, minimal, res);
    } else if (*c_prim || *c_ff) {
      Verdict v;
      int rank;
      const char* label;
      if (*c_prim) {
        Word u = parse_word(word_arg);
        rank = infer_rank({u}, opt.rank);
        v = is_primitive(u, rank, opt.threads);
        label = "primitive";
      } else {
        std::vector<Word> gens = parse_word_list(gens_arg, false);
        rank = infer_rank(gens, opt.rank);
        v = is_free_factor(gens, rank, opt.threads);
        label = "free-factor";
      }
      if (opt.as_json) {
        json j;
        j[label] = v.yes;
        if (opt.witness) j["witness"] = trace_to_json(v.minimization.trace, rank);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << label << ": " << (v.yes ? "yes" : "no") << "\n";
        if (opt.witness) print_trace_text(v.minimization.trace, rank);
      }
      if (opt.exit_status && !v.yes) return 1;
    } else if (*c_fold) {
      ParsedGraph pg = load_graph(file_arg);
      FoldResult fr = fold(pg.graph);
      std::optional<VertexId> base;
      if (pg.base) base = fr.vertex_map[*pg.base];
      std::cout << write_graph(fr.graph, base);
    } else if (*c_hyp) {
      ParsedGraph pg = load_graph(file_arg);
      std::cout << dump_hypergraph(build_hypergraph(pg.graph));
    } else if (*c_dot) {
      ParsedGraph pg = load_graph(file_arg);
      std::cout << export_dot(pg.graph, pg.base);
    } else if (*c_oracle) {
      if (oc_rank > 8) throw std::invalid_argument(
          "oracle rank capped at 8: the exhaustive cut enumeration is infeasible beyond");
      harness::Rng rng(opt.seed);
      int bad_cut = harness::check_mincut_agreement(rng, oc_cases, oc_rank);
      std::cout << "mincut-agreement: " << (bad_cut == 0 ? "pass" : "FAIL") << " ("
                << oc_cases << " hypergraphs)\n";
      int bad_delta = harness::check_delta_formula(rng, oc_cases, oc_rank);
      std::cout << "delta-formula: " << (bad_delta == 0 ? "pass" : "FAIL") << " ("
                << oc_cases << " graphs)\n";
      if (bad_cut + bad_delta > 0) return 3;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

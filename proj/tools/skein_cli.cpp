// Command-line front end: compute HOMFLY polynomials, analyze diagrams,
// run the corpus verification, and export skein resolution trees.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skein/bounds.hpp"
#include "skein/corpus.hpp"
#include "skein/errors.hpp"
#include "skein/generators.hpp"
#include "skein/homfly.hpp"
#include "skein/seifert.hpp"
#include "skein/verify.hpp"

namespace {

// Argument is either PD text or a path to a JSON diagram file.
skein::LinkDiagram load_diagram(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
        text[text.find_first_not_of(" \t\r\n")] == '{')
      return skein::LinkDiagram::from_json(text);
    return skein::LinkDiagram::parse_pd(text);
  }
  return skein::LinkDiagram::parse_pd(arg);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw skein::Error("cannot write " + path);
  out << content;
}

int cmd_compute(const std::string& arg, int cap, bool quiet) {
  skein::LinkDiagram d = load_diagram(arg);
  skein::LaurentPoly2 p = skein::homfly(d, {cap, true});
  std::cout << p.str() << "\n";
  if (!quiet) {
    std::cout << "min_deg_v  = " << p.min_deg_v() << "\n";
    std::cout << "max_deg_z  = " << p.max_deg_z() << "\n";
    std::cout << "h(v)       = " << p.highest_z_term().str() << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& arg, bool quiet) {
  skein::LinkDiagram d = load_diagram(arg);
  skein::DiagramStats st = d.stats();
  std::cout << "crossings          c  = " << st.crossings << "\n";
  std::cout << "seifert circles    s  = " << st.seifert_circles << "\n";
  std::cout << "writhe             w  = " << st.writhe << "\n";
  std::cout << "s_plus             s+ = " << st.s_plus << "\n";
  std::cout << "diagram components    = " << st.diagram_components << "\n";
  std::cout << "self-linking (w - s)  = " << st.self_linking << "\n";

  skein::SignedGraph g = skein::SignedGraph::from_diagram(d);
  skein::GraphAnalysis a = skein::analyze(g);
  std::cout << "seifert graph: " << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges, rank " << a.rank << "\n";
  std::cout << "blocks:\n";
  for (const skein::Block& b : a.blocks) {
    std::cout << "  " << (b.mixed() ? "mixed" : (*b.sign > 0 ? "+" : "-"))
              << "  rank " << b.rank << "  (" << b.vertices.size()
              << " vertices, " << b.edge_indices.size() << " edges)\n";
  }
  std::cout << "homogeneous: " << (a.homogeneous ? "yes" : "no");
  if (a.homogeneous)
    std::cout << "  (eps_rank_sum = " << a.eps_rank_sum() << ")";
  std::cout << "\n";
  std::cout << "positive: " << (a.positive ? "yes" : "no")
            << ", negative: " << (a.negative ? "yes" : "no") << "\n";
  std::cout << "alternating: " << (d.is_alternating() ? "yes" : "no")
            << ", reduced: " << (d.is_reduced() ? "yes" : "no") << "\n";
  if (d.is_alternating() && d.is_reduced() && d.connected_count() == 1)
    std::cout << "signature (spanning tree) = " << skein::spanning_tree_signature(d)
              << "\n";
  if (!quiet) std::cout << "pd: " << d.pd_text() << "\n";
  return 0;
}

int cmd_verify(const std::string& corpus_arg, const std::string& json_out,
               const std::string& md_out, int cap, unsigned seed, bool quiet) {
  std::string path =
      corpus_arg == "default" ? skein::default_corpus_path() : corpus_arg;
  auto records = skein::load_corpus(path);
  skein::VerifyOptions opt;
  opt.crossing_cap = cap;
  opt.seed = seed;
  opt.quiet = quiet;
  auto summary = skein::run_verification(records, opt);
  if (!quiet) {
    for (const auto& out : summary.outcomes) {
      if (out.skipped()) {
        std::cout << "SKIP  " << out.name << "  " << out.skip_reason << "\n";
        continue;
      }
      if (out.problems.empty()) {
        std::cout << "ok    " << out.name << "\n";
      } else {
        for (const auto& p : out.problems)
          std::cout << "FAIL  " << out.name << "  " << p << "\n";
      }
    }
  }
  std::cout << summary.one_line() << "\n";
  for (const auto& row : summary.conjecture.rows)
    if (row.counterexample_candidate)
      std::cout << "CONJECTURE COUNTEREXAMPLE CANDIDATE: " << row.name
                << " (equality without positivity)\n";
  if (!json_out.empty()) write_file(json_out, summary.to_json());
  if (!md_out.empty()) write_file(md_out, summary.to_markdown());
  return summary.ok() ? 0 : 1;
}

int cmd_skein_tree(const std::string& arg, const std::string& dot_out,
                   const std::string& json_out, int cap) {
  skein::LinkDiagram d = load_diagram(arg);
  skein::SkeinTree tree = skein::skein_tree(d, {cap, true});
  if (dot_out.empty() && json_out.empty()) {
    std::cout << tree.to_dot();
  } else {
    if (!dot_out.empty()) write_file(dot_out, tree.to_dot());
    if (!json_out.empty()) write_file(json_out, tree.to_json());
  }
  std::cout << "leaves: " << tree.leaf_count()
            << ", leaf sum: " << tree.leaf_sum().str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinkit: HOMFLY polynomials, Seifert graphs, and degree bounds"};
  app.fallthrough();
  int cap = 16;
  unsigned seed = 0;
  bool quiet = false;
  app.add_option("--cap", cap, "crossing cap for polynomial computations");
  app.add_option("--seed", seed, "ordering seed for randomized spot checks");
  app.add_flag("--quiet", quiet, "suppress per-item detail");
  app.require_subcommand(1);

  std::string arg, corpus = "default", json_out, md_out, dot_out;

  CLI::App* compute = app.add_subcommand("compute", "HOMFLY polynomial of a diagram");
  compute->add_option("diagram", arg, "PD code or diagram file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "diagram and Seifert graph data");
  analyze->add_option("diagram", arg, "PD code or diagram file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the corpus verification");
  verify->add_option("--corpus", corpus, "corpus file or 'default'");
  verify->add_option("--json", json_out, "write the JSON report here");
  verify->add_option("--md", md_out, "write the markdown report here");

  CLI::App* tree = app.add_subcommand("skein-tree", "export a skein resolution tree");
  tree->add_option("diagram", arg, "PD code or diagram file")->required();
  tree->add_option("--dot", dot_out, "write DOT here");
  tree->add_option("--json", json_out, "write JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(arg, cap, quiet);
    if (analyze->parsed()) return cmd_analyze(arg, quiet);
    if (verify->parsed())
      return cmd_verify(corpus, json_out, md_out, cap, seed, quiet);
    if (tree->parsed()) return cmd_skein_tree(arg, dot_out, json_out, cap);
  } catch (const skein::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

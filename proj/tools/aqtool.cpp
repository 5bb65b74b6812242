#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aq/report.hpp"

// Command-line front end.  Every subcommand prints a report (text or JSON)
// and exits 0 exactly when all certificates in that report pass.

namespace {

struct Options {
  std::string family = "augmented";
  int n = 0;
  std::string gens;  // comma-separated coordinate strings; implies custom
  std::string format = "text";
  std::string out;
  std::string dot_path;
  aq::SearchCaps caps;
};

void add_graph_options(CLI::App* sub, Options& o) {
  sub->add_option("-f,--family", o.family, "augmented, hypercube, folded or custom")
      ->check(CLI::IsMember({"augmented", "hypercube", "folded", "custom"}));
  sub->add_option("-n,--dim", o.n, "dimension of the word space")
      ->check(CLI::Range(aq::kMinDim, aq::kMaxDim));
  sub->add_option("--gens", o.gens,
                  "comma-separated generator words, e.g. 0001,0010,0011");
  sub->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("-o,--out", o.out, "write the report here instead of stdout");
}

void add_cap_options(CLI::App* sub, Options& o) {
  sub->add_option("--cap-stabilizer-n", o.caps.stabilizer_dim,
                  "largest n the stabilizer search accepts");
  sub->add_option("--cap-group-order", o.caps.group_order,
                  "largest group order enumerated in full");
}

aq::CayleyGraph make_graph(const Options& o) {
  if (!o.gens.empty()) {
    std::vector<aq::GF2Vector> vs;
    std::stringstream ss(o.gens);
    std::string token;
    while (std::getline(ss, token, ','))
      vs.push_back(aq::GF2Vector::parse(token));
    if (vs.empty()) throw std::invalid_argument("--gens is empty");
    if (o.n != 0 && o.n != vs.front().dim())
      throw std::invalid_argument("-n does not match the generator length");
    return aq::CayleyGraph(aq::GeneratorSet(vs.front().dim(), vs));
  }
  aq::Family f = aq::parse_family(o.family);
  if (f == aq::Family::Custom)
    throw std::invalid_argument("a custom graph needs --gens");
  if (o.n == 0) throw std::invalid_argument("-n is required");
  return aq::family_graph(f, o.n);
}

void emit(const aq::Json& j, const Options& o) {
  std::string text = o.format == "json" ? j.dump(2) + "\n" : aq::render_text(j);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

int finish(const aq::Json& j, const Options& o) {
  emit(j, o);
  return aq::json_pass(j) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure reports for Cayley graphs over GF(2)^n"};
  app.require_subcommand(1);
  int rc = 0;

  Options build_opts;
  CLI::App* build = app.add_subcommand("build", "construct a graph and summarize it");
  add_graph_options(build, build_opts);
  build->add_option("--dot", build_opts.dot_path, "also write a DOT rendering here");
  build->callback([&] {
    aq::CayleyGraph g = make_graph(build_opts);
    if (!build_opts.dot_path.empty()) {
      std::ofstream f(build_opts.dot_path);
      if (!f) throw std::runtime_error("cannot write " + build_opts.dot_path);
      f << aq::dot(g);
    }
    emit(aq::graph_json(g), build_opts);
  });

  Options aut_opts;
  CLI::App* aut = app.add_subcommand("aut", "automorphism group and normality");
  add_graph_options(aut, aut_opts);
  add_cap_options(aut, aut_opts);
  aut->callback([&] { rc = finish(aq::aut_json(make_graph(aut_opts), aut_opts.caps), aut_opts); });

  Options clique_opts;
  CLI::App* cliques = app.add_subcommand("cliques", "maximum cliques and their orbits");
  add_graph_options(cliques, clique_opts);
  add_cap_options(cliques, clique_opts);
  cliques->callback([&] {
    rc = finish(aq::cliques_json(make_graph(clique_opts), clique_opts.caps), clique_opts);
  });

  Options block_opts;
  CLI::App* blocks = app.add_subcommand("blocks", "nontrivial block systems");
  add_graph_options(blocks, block_opts);
  add_cap_options(blocks, block_opts);
  blocks->callback([&] {
    rc = finish(aq::blocks_json(make_graph(block_opts), block_opts.caps), block_opts);
  });

  Options report_opts;
  CLI::App* report = app.add_subcommand(
      "report", "full structure report with expected-versus-actual checks");
  add_graph_options(report, report_opts);
  add_cap_options(report, report_opts);
  report->callback([&] {
    if (!report_opts.gens.empty())
      throw std::invalid_argument("report works on named families; use aut/cliques/blocks for custom graphs");
    aq::Family f = aq::parse_family(report_opts.family);
    if (f == aq::Family::Custom)
      throw std::invalid_argument("report needs a named family");
    if (report_opts.n == 0) throw std::invalid_argument("-n is required");
    rc = finish(aq::structure_json(f, report_opts.n, report_opts.caps), report_opts);
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

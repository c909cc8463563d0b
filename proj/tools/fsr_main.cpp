// Command-line front end: fsr <subcommand> ...
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fsr/axioms.hpp"
#include "fsr/gallery.hpp"
#include "fsr/infer.hpp"
#include "fsr/io.hpp"
#include "fsr/realizer.hpp"

namespace {

using namespace fsr;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string out_dir;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (!out_dir.empty() && p.is_relative()) p = std::filesystem::path(out_dir) / p;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  out << text;
}

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

bool starts_with_header(const std::string& text, const std::string& header) {
  std::istringstream in(text);
  std::string first;
  while (in >> first) {
    if (first[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return first == header;
  }
  return false;
}

CombRule load_rule(const std::string& arg) {
  if (contains(gallery::rule_names(), arg)) return gallery::rule(arg);
  return parse_rule(read_file(arg));
}

SubdivisionRule2D load_rule_2d(const std::string& arg) {
  if (contains(gallery::rule_2d_names(), arg)) return gallery::rule_2d(arg);
  return parse_rule_2d(read_file(arg));
}

Surface2D load_surface(const std::string& arg) {
  if (contains(gallery::surface_names(), arg)) return gallery::surface(arg);
  return parse_surface(read_file(arg));
}

void print_sizes(const HistoryGraph& h) {
  std::cout << "levels:";
  for (const LabeledGraph& l : h.levels) std::cout << ' ' << l.vertex_count();
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial subdivision rules: expansion, axioms, inference and 3D realization"};
  app.require_subcommand(1);
  app.add_option("--out-dir", out_dir, "Directory for relative output paths");

  std::string rule_arg, graph_arg, surface_arg, rule2d_arg, dot_path, history_path, out_path;
  int depth = 4;
  bool want_stats = false, want_refine = false, want_dot = false, want_cells = false;

  auto* validate = app.add_subcommand("validate", "Check a rule document");
  validate->add_option("rule", rule_arg, "Rule file or gallery name")->required();

  auto* expand = app.add_subcommand("expand", "Build the history graph of a rule");
  expand->add_option("rule", rule_arg, "Rule file or gallery name")->required();
  expand->add_option("--depth", depth, "Number of levels below the origin")->required()->check(CLI::PositiveNumber);
  expand->add_option("--dot", dot_path, "Write DOT to this file");
  expand->add_option("--history", history_path, "Write the history document to this file");
  expand->add_flag("--stats", want_stats, "Print level statistics");

  auto* check = app.add_subcommand("check-axioms", "Check the five conditions on a history graph");
  check->add_option("input", graph_arg, "History file, rule file or gallery rule")->required();
  check->add_option("--depth", depth, "Depth when the input is a rule")->check(CLI::PositiveNumber);

  auto* infer = app.add_subcommand("infer", "Read a rule off a history graph");
  infer->add_option("history", graph_arg, "History file")->required();
  infer->add_flag("--refine", want_refine, "Refine labels before inference");
  infer->add_option("--out", out_path, "Write the rule document to this file");

  auto* realize = app.add_subcommand("realize3d", "Build the 3D pair and verify its history graph");
  realize->add_option("rule", rule_arg, "Rule file or gallery name")->required();
  realize->add_option("--depth", depth, "Levels to compare")->required()->check(CLI::Range(2, 1000));
  realize->add_flag("--cells", want_cells, "Print the cell inventories");

  auto* planar = app.add_subcommand("planar", "History graph of a planar rule on a surface");
  planar->add_option("surface", surface_arg, "Surface file or gallery name")->required();
  planar->add_option("rule2d", rule2d_arg, "Planar rule file or gallery name")->required();
  planar->add_option("--depth", depth, "Number of levels below the origin")->required()->check(CLI::PositiveNumber);
  planar->add_flag("--dot", want_dot, "Print DOT instead of statistics");
  planar->add_flag("--refine", want_refine, "Refine labels before checking the conditions");
  planar->add_option("--history", history_path, "Write the history document to this file");

  auto* list = app.add_subcommand("gallery", "List bundled rules and surfaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*validate) {
      try {
        CombRule rule = load_rule(rule_arg);
        std::cout << "valid: " << rule.alphabet.vertex_symbols.size() << " vertex symbols, "
                  << rule.alphabet.edge_symbols.size() << " edge symbols, seed of " << rule.seed.vertex_count()
                  << " vertices\n";
        return kOk;
      } catch (const ValidationError& e) {
        std::cerr << e.report().summary();
        return kFailed;
      }
    }

    if (*expand) {
      HistoryGraph h = build_history(load_rule(rule_arg), depth);
      print_sizes(h);
      if (want_stats) std::cout << stats(h).render();
      if (!dot_path.empty()) write_file(dot_path, export_dot(h));
      if (!history_path.empty()) write_file(history_path, render_history(h));
      return kOk;
    }

    if (*check) {
      HistoryGraph h;
      if (!contains(gallery::rule_names(), graph_arg) && starts_with_header(read_file(graph_arg), "fsr-history"))
        h = parse_history(read_file(graph_arg));
      else
        h = build_history(load_rule(graph_arg), depth);
      AxiomReport report = check_axioms(h);
      (report.ok() ? std::cout : std::cerr) << report.summary();
      return report.ok() ? kOk : kFailed;
    }

    if (*infer) {
      HistoryGraph h = parse_history(read_file(graph_arg));
      if (want_refine) {
        RefinementResult r = refine_labels(h);
        std::cerr << "refined to " << r.vertex_classes << " vertex and " << r.edge_classes << " edge classes in "
                  << r.iterations << " rounds\n";
        h = std::move(r.graph);
      }
      try {
        std::string doc = render_rule(infer_rule(h));
        if (out_path.empty())
          std::cout << doc;
        else
          write_file(out_path, doc);
        return kOk;
      } catch (const InferenceError& e) {
        std::cerr << e.what() << '\n';
        return kFailed;
      }
    }

    if (*realize) {
      CombRule rule = load_rule(rule_arg);
      Pair3D pair = build_pair(rule);
      if (want_cells)
        std::cout << render_complex(pair.base) << render_complex(pair.subdivided) << render_complex(pair.seed_complex);
      CellCountReport counts = check_cell_counts(rule, pair);
      RealizationReport report = verify_realization(rule, depth);
      std::cout << report.summary();
      for (const std::string& v : counts.violations) std::cerr << "cell count: " << v << '\n';
      return report.pass && counts.ok ? kOk : kFailed;
    }

    if (*planar) {
      HistoryGraph h = history_graph_2d(load_surface(surface_arg), load_rule_2d(rule2d_arg), depth);
      if (want_refine) h = refine_labels(h).graph;
      if (!history_path.empty()) write_file(history_path, render_history(h));
      if (want_dot) {
        std::cout << export_dot(h);
      } else {
        print_sizes(h);
        std::cout << stats(h).render() << check_axioms(h).summary();
      }
      return kOk;
    }

    if (*list) {
      std::cout << "rules:";
      for (const auto& n : gallery::rule_names()) std::cout << ' ' << n;
      std::cout << "\nplanar rules:";
      for (const auto& n : gallery::rule_2d_names()) std::cout << ' ' << n;
      std::cout << "\nsurfaces:";
      for (const auto& n : gallery::surface_names()) std::cout << ' ' << n;
      std::cout << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid rule:\n" << e.report().summary();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

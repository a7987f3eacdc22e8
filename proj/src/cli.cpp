#include "covers/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "covers/catalog.hpp"
#include "covers/coloring.hpp"
#include "covers/cover_search.hpp"
#include "covers/factory.hpp"
#include "covers/matching.hpp"
#include "covers/mg_format.hpp"
#include "covers/poset.hpp"
#include "covers/products.hpp"
#include "covers/stronger.hpp"

namespace covers {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

Multigraph load_graph(const std::string& path, std::istream* stdin_stream) {
  if (path == "-") {
    if (!stdin_stream) throw error("stdin not available");
    return parse_mg(*stdin_stream);
  }
  return load_mg_file(path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw error("cannot write file: " + path);
  f << text;
}

struct Options {
  std::string graph_a, graph_b, cert_path, out_cert, name, dir;
  bool semi = false, f11 = false, times = false, odot = false;
  bool bridged = false, snark = false, nopm = false;
  bool figure5 = false, dot = false, json = false;
  int p = 0, budget = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream* stdin_stream) {
  if (!stdin_stream) stdin_stream = &std::cin;
  CLI::App app{"multigraph covers: verification, search and witnesses"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "search for a covering projection");
  check->add_option("source", opt.graph_a, "source .mg file (- for stdin)")->required();
  check->add_option("target", opt.graph_b, "target .mg file (- for stdin)")->required();

  auto* semicheck = app.add_subcommand("semicheck", "search for a semi-covering projection");
  semicheck->add_option("source", opt.graph_a)->required();
  semicheck->add_option("target", opt.graph_b)->required();

  auto* verify = app.add_subcommand("verify", "replay a projection certificate");
  verify->add_option("source", opt.graph_a)->required();
  verify->add_option("target", opt.graph_b)->required();
  verify->add_option("certificate", opt.cert_path, "certificate file")->required();
  verify->add_flag("--semi", opt.semi, "verify under semi-cover rules");

  auto* product = app.add_subcommand("product", "canonical double covers");
  product->add_option("graph", opt.graph_a)->required();
  product->add_flag("--times", opt.times, "bipartite double cover");
  product->add_flag("--odot", opt.odot, "parallel double cover");
  product->add_option("--cert", opt.out_cert, "write the projection certificate to a file");

  auto* pfold = app.add_subcommand("pfold", "simple p-fold cover");
  pfold->add_option("graph", opt.graph_a)->required();
  pfold->add_option("-p", opt.p, "fold count")->required();
  pfold->add_option("--cert", opt.out_cert);

  auto* chi = app.add_subcommand("chi", "exact chromatic index");
  chi->add_option("graph", opt.graph_a)->required();

  auto* matching = app.add_subcommand("matching", "perfect / semi-perfect matchings");
  matching->add_option("graph", opt.graph_a)->required();
  matching->add_flag("--semi", opt.semi, "semi-perfect matching");
  matching->add_flag("--f11", opt.f11, "cover of the one-vertex loop-plus-semi-edge graph");

  auto* code = app.add_subcommand("code", "1-perfect code");
  code->add_option("graph", opt.graph_a)->required();

  auto* goodsets = app.add_subcommand("goodsets", "inclusion-minimal good vertex sets");
  goodsets->add_option("graph", opt.graph_a)->required();

  auto* factory = app.add_subcommand("factory", "constructive simple covers");
  factory->add_option("graph", opt.graph_a)->required();
  factory->add_flag("--bridged", opt.bridged, "simple cover with a bridge");
  factory->add_flag("--snark", opt.snark, "simple cover with chromatic index above 3");
  factory->add_flag("--nopm", opt.nopm, "simple cover without a perfect matching");
  factory->add_option("--cert", opt.out_cert);

  auto* stronger = app.add_subcommand("stronger", "decide the stronger-than relation");
  stronger->add_option("a", opt.graph_a)->required();
  stronger->add_option("b", opt.graph_b)->required();
  stronger->add_option("--budget", opt.budget, "max fold for witness search");
  stronger->add_flag("--json", opt.json);

  auto* poset = app.add_subcommand("poset", "pairwise cover/stronger report");
  poset->add_option("dir", opt.dir, "directory of .mg files");
  poset->add_flag("--figure5", opt.figure5, "the twelve small cubic graphs");
  poset->add_option("--budget", opt.budget);
  poset->add_flag("--dot", opt.dot, "emit DOT");
  poset->add_flag("--json", opt.json, "emit JSON");

  auto* cat = app.add_subcommand("cat", "print a catalog graph");
  cat->add_option("name", opt.name, "catalog name, e.g. K4 or W(1,0,2,0,1)")->required();

  auto* exportc = app.add_subcommand("export", "export a graph");
  exportc->add_option("graph", opt.graph_a)->required();
  exportc->add_flag("--dot", opt.dot, "DOT format");

  std::vector<const char*> argv;
  argv.push_back("cover");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*check || *semicheck) {
      ProjectionKind kind = *check ? ProjectionKind::Cover : ProjectionKind::SemiCover;
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      Multigraph h = load_graph(opt.graph_b, stdin_stream);
      auto proj = find_cover(g, h, kind);
      if (!proj) {
        out << (kind == ProjectionKind::Cover ? "no covering projection (exhaustive)\n"
                                              : "no semi-covering projection (exhaustive)\n");
        return kNo;
      }
      out << "fold " << fold_count(*proj, kind) << "\n" << projection_to_text(*proj);
      return kYes;
    }
    if (*verify) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      Multigraph h = load_graph(opt.graph_b, stdin_stream);
      std::ifstream f(opt.cert_path);
      if (!f) throw error("cannot open certificate: " + opt.cert_path);
      std::stringstream buf;
      buf << f.rdbuf();
      CoverProjection proj = projection_from_text(g, h, buf.str());
      auto res = verify_projection(proj, opt.semi ? ProjectionKind::SemiCover : ProjectionKind::Cover);
      if (res.ok) {
        out << "valid\n";
        return kYes;
      }
      for (const Violation& v : res.violations) out << v.rule << ": " << v.detail << "\n";
      return kNo;
    }
    if (*product) {
      if (opt.times == opt.odot) throw error("product: choose exactly one of --times / --odot");
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      DoubleCover dc = opt.times ? bipartite_double_cover(g) : parallel_double_cover(g);
      out << serialize_mg(dc.graph);
      if (!opt.out_cert.empty()) write_text_file(opt.out_cert, projection_to_text(dc.projection));
      return kYes;
    }
    if (*pfold) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      FactoryResult res = simple_pfold_cover(g, opt.p);
      out << serialize_mg(res.graph);
      if (!opt.out_cert.empty()) write_text_file(opt.out_cert, projection_to_text(res.projection));
      return kYes;
    }
    if (*chi) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      auto res = chromatic_index(g);
      if (!res.finite) {
        out << "chromatic index: infinite (the graph has a loop)\n";
        return kYes;
      }
      out << "chromatic index: " << res.value << "\n";
      if (res.witness) out << coloring_to_text(*res.witness);
      return kYes;
    }
    if (*matching) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      if (opt.f11) {
        auto res = covers_f11(g);
        if (!res.covers) {
          out << "does not cover F(1,1): " << res.refusal << "\n";
          return kNo;
        }
        out << "covers F(1,1)\n" << projection_to_text(*res.certificate);
        return kYes;
      }
      if (opt.semi) {
        auto res = has_semi_perfect_matching(g);
        if (!res) {
          out << "no semi-perfect matching\n";
          return kNo;
        }
        out << matching_to_text(res->edges);
        return kYes;
      }
      auto res = has_perfect_matching(g);
      if (!res) {
        out << "no perfect matching\n";
        return kNo;
      }
      out << matching_to_text(*res);
      return kYes;
    }
    if (*code) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      auto res = has_perfect_code(g);
      if (!res) {
        out << "no 1-perfect code\n";
        return kNo;
      }
      out << vertex_set_to_text(*res);
      return kYes;
    }
    if (*goodsets) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      auto sets = minimal_good_sets(g);
      for (const GoodSet& s : sets) {
        out << "X:";
        for (VertexId v : s.vertices) out << " " << v;
        out << " | odd components: " << s.odd_component_count
            << (s.very_good ? " | very good" : "") << "\n";
      }
      if (sets.empty()) out << "no good set (a perfect matching exists)\n";
      return kYes;
    }
    if (*factory) {
      int chosen = int(opt.bridged) + int(opt.snark) + int(opt.nopm);
      if (chosen != 1) throw error("factory: choose exactly one of --bridged / --snark / --nopm");
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      FactoryResult res = opt.bridged ? bridged_simple_cover(g)
                          : opt.snark ? snark_cover(g)
                                      : no_pm_cover(g);
      out << serialize_mg(res.graph);
      if (!opt.out_cert.empty()) write_text_file(opt.out_cert, projection_to_text(res.projection));
      return kYes;
    }
    if (*stronger) {
      Multigraph a = load_graph(opt.graph_a, stdin_stream);
      Multigraph b = load_graph(opt.graph_b, stdin_stream);
      StrongerEvidence ev = decide_stronger(a, b, opt.budget);
      if (opt.json) {
        out << "{\"verdict\": \"" << verdict_name(ev.verdict) << "\"";
        if (!ev.theorem.empty()) out << ", \"theorem\": \"" << ev.theorem << "\"";
        if (ev.witness) out << ", \"witness_vertices\": " << ev.witness->vertex_count();
        if (!ev.note.empty()) out << ", \"note\": \"" << ev.note << "\"";
        out << "}\n";
      } else {
        out << verdict_name(ev.verdict);
        if (!ev.theorem.empty()) out << " (" << ev.theorem << ")";
        if (!ev.note.empty()) out << " -- " << ev.note;
        out << "\n";
        if (ev.certificate) out << projection_to_text(*ev.certificate);
        if (ev.witness) {
          out << "witness:\n" << serialize_mg(*ev.witness);
          if (ev.witness_cover) out << "witness covering projection:\n"
                                    << projection_to_text(*ev.witness_cover);
        }
      }
      return ev.is_stronger() ? kYes : kNo;
    }
    if (*poset) {
      if (opt.figure5 == !opt.dir.empty())
        throw error("poset: give either --figure5 or a directory of .mg files");
      PosetReport rep;
      int budget = opt.budget > 0 ? opt.budget : 16;
      if (opt.figure5) {
        rep = figure5_poset(budget);
      } else {
        std::vector<PosetNode> nodes;
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(opt.dir))
          if (entry.path().extension() == ".mg") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& p : files) nodes.push_back({p.stem().string(), load_mg_file(p.string())});
        if (nodes.empty()) throw error("poset: no .mg files in " + opt.dir);
        rep = cover_poset(nodes, budget);
      }
      if (opt.dot) out << poset_to_dot(rep);
      else if (opt.json) out << poset_to_json(rep);
      else out << poset_to_text(rep);
      return rep.anomalies.empty() ? kYes : kNo;
    }
    if (*cat) {
      NamedGraph g = catalog(opt.name);
      out << serialize_mg(g.graph);
      return kYes;
    }
    if (*exportc) {
      Multigraph g = load_graph(opt.graph_a, stdin_stream);
      if (!opt.dot) throw error("export: --dot is the only supported format");
      out << to_dot(g);
      return kYes;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace covers

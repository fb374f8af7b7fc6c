// wcol: command-line front end for the generators, coloring numbers and checks.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "wcol/bounds.hpp"
#include "wcol/constructions.hpp"
#include "wcol/io.hpp"
#include "wcol/reach.hpp"
#include "wcol/structure.hpp"
#include "wcol/verify.hpp"

using namespace wcol;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// What a JSON input turned out to be, plus the order implied by its layout.
struct Loaded {
  Json json;
  Graph graph;
  std::optional<Representation> rep;
  Ordering natural;
};

Loaded load_input(const std::string& path) {
  Loaded in;
  in.json = read_json_file(path);
  if (is_representation_json(in.json)) {
    in.rep = representation_from_json(in.json);
    in.graph = intersection_graph(*in.rep);
    in.natural = sizewise_order(*in.rep);
  } else {
    in.graph = load_graph(in.json);
    in.natural = Ordering::identity(in.graph.size());
  }
  return in;
}

// "3", "1..4" or "1,2,5".
std::vector<std::uint64_t> parse_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoull(part));
      } else {
        std::uint64_t lo = std::stoull(part.substr(0, dots)), hi = std::stoull(part.substr(dots + 2));
        if (hi < lo) throw Error("empty range '" + part + "'");
        for (std::uint64_t x = lo; x <= hi; ++x) out.push_back(x);
      }
    } catch (const std::logic_error&) {
      throw Error("bad integer range '" + text + "'");
    }
  }
  if (out.empty()) throw Error("empty range '" + text + "'");
  return out;
}

std::string summary(const Representation& rep) {
  std::ostringstream out;
  out << "n=" << rep.size() << " d=" << rep.dimension << " thinness=";
  try {
    bool boxes = std::all_of(rep.objects.begin(), rep.objects.end(), [](const auto& o) { return is_box(o); });
    if (boxes)
      out << thinness(rep);
    else if (rep.declared_thinness)
      out << *rep.declared_thinness << " (declared)";
    else
      out << "?";
  } catch (const BudgetError&) {
    out << "? (cell budget)";
  }
  auto m = max_shrinking_factor(rep);
  out << " shrinking_m=" << (m && *m >= 1 ? m->get_str() : "none");
  return out.str();
}

Ordering order_from(const Loaded& in, const std::string& mode, const std::string& file) {
  if (mode == "sizewise") return in.natural;
  if (mode == "file") {
    if (file.empty()) throw Error("--order file needs --order-file");
    return ordering_from_json(in.graph, read_json_file(file));
  }
  throw Error("unknown order '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak and strong coloring numbers of geometric intersection graphs"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  unsigned threads = 1;
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")->capture_default_str();
  app.fallthrough();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family and write JSON");
  gen->require_subcommand(1);
  std::string out_path, input_path, boxes_path, order_mode = "sizewise", order_file;
  unsigned gk = 0, gt = 1, bits = 1;
  std::uint64_t gm = 0;
  std::vector<std::string> y_labels;

  auto* g_f = gen->add_subcommand("fprime", "touching rectangles F'_k");
  g_f->add_option("--k", gk)->required();
  g_f->add_option("--m", gm, "shrinking factor (default 2^(k+1)-1)");
  g_f->add_option("-o,--output", out_path)->required();

  auto* g_h = gen->add_subcommand("hprime", "t-thin intervals H'_{k,t}");
  g_h->add_option("--k", gk)->required();
  g_h->add_option("--t", gt)->capture_default_str();
  g_h->add_option("--m", gm, "shrinking factor (default binom(k+t,t))");
  g_h->add_option("-o,--output", out_path)->required();

  auto* g_s = gen->add_subcommand("scaffold", "scaffolding of a representation or ordered graph");
  g_s->add_option("--input", input_path)->required();
  g_s->add_option("--m", gm)->required();
  g_s->add_option("--order", order_mode, "sizewise|file")->capture_default_str();
  g_s->add_option("--order-file", order_file);
  g_s->add_option("--boxes", boxes_path, "also write the box representation here");
  g_s->add_option("-o,--output", out_path)->required();

  auto* g_l = gen->add_subcommand("lift", "add dimensions to a hypercube representation");
  g_l->add_option("--input", input_path)->required();
  g_l->add_option("--bits", bits, "touching lift with a greedy coloring on this many bits")->capture_default_str();
  g_l->add_option("--y", y_labels, "single lift: labels that go on the positive side");
  g_l->add_option("-o,--output", out_path)->required();

  // colnum / reach
  auto* colnum = app.add_subcommand("colnum", "weak/strong coloring number");
  unsigned k = 1;
  std::string kind_text = "weak", vertex_label;
  bool per_vertex = false;
  std::uint64_t node_budget = kDefaultSearchBudget;
  colnum->add_option("--input", input_path)->required();
  colnum->add_option("--order", order_mode, "sizewise|file|exhaustive")->capture_default_str();
  colnum->add_option("--order-file", order_file);
  colnum->add_option("--k", k)->capture_default_str();
  colnum->add_option("--kind", kind_text, "weak|strong|decreasing")->capture_default_str();
  colnum->add_flag("--per-vertex", per_vertex);
  colnum->add_option("--budget", node_budget, "search nodes for exhaustive")->capture_default_str();

  auto* reach = app.add_subcommand("reach", "reach set of one vertex");
  reach->add_option("--input", input_path)->required();
  reach->add_option("--vertex", vertex_label)->required();
  reach->add_option("--order", order_mode, "sizewise|file")->capture_default_str();
  reach->add_option("--order-file", order_file);
  reach->add_option("--k", k)->capture_default_str();
  reach->add_option("--kind", kind_text)->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "table of upper and lower bounds");
  std::vector<std::string> cases{"a"};
  std::string t_range = "1", d_range = "2", k_range = "1..4", b_text = "1", lb_family, format = "csv";
  std::uint64_t k0 = 1;
  bounds->add_option("--case", cases, "a, b or c (repeatable)")->capture_default_str();
  bounds->add_option("--t", t_range)->capture_default_str();
  bounds->add_option("--d", d_range)->capture_default_str();
  bounds->add_option("--k", k_range)->capture_default_str();
  bounds->add_option("--b", b_text)->capture_default_str();
  bounds->add_option("--k0", k0)->capture_default_str();
  bounds->add_option("--lb", lb_family, "boxes3d|thin_squares|hypercubes (or F, H)");
  bounds->add_option("--format", format, "csv|json")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a check suite");
  std::string suite, json_path;
  VerifyOptions vo;
  bool failures_only = false;
  verify->add_option("suite", suite, "lemma1|obs2|ky|pw|propP|lb")->required();
  verify->add_option("--samples", vo.samples)->capture_default_str();
  verify->add_option("--family", vo.family)->capture_default_str();
  verify->add_option("--case", vo.bound_case)->capture_default_str();
  verify->add_option("--k", vo.k)->capture_default_str();
  verify->add_option("--t", vo.t)->capture_default_str();
  verify->add_option("--d", vo.d)->capture_default_str();
  verify->add_option("--n", vo.n)->capture_default_str();
  verify->add_option("--w", vo.w)->capture_default_str();
  verify->add_option("--max-objects", vo.max_objects)->capture_default_str();
  verify->add_flag("--unit", vo.unit_size, "lemma1: unit cubes only");
  verify->add_option("--budget", vo.search_budget)->capture_default_str();
  verify->add_option("--json", json_path, "write the report as JSON");
  verify->add_flag("--failures-only", failures_only);

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  dot->add_option("--input", input_path)->required();
  std::string dot_order = "none";
  dot->add_option("--order", dot_order, "none|sizewise|file")->capture_default_str();
  dot->add_option("--order-file", order_file);
  dot->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      Json out;
      std::string line;
      if (*g_f || *g_h) {
        Representation rep = *g_f ? gen_fprime(gk, gm ? gm : pow_int(2, gk + 1).get_ui() - 1)
                                  : gen_hprime(gk, gt, gm ? gm : binomial(gk + gt, gt).get_ui());
        out = to_json(rep);
        line = summary(rep);
      } else if (*g_s) {
        Loaded in = load_input(input_path);
        Ordering ord = order_from(in, order_mode, order_file);
        ScaffoldResult s = scaffold_graph(in.graph, ord, gm);
        out = to_json(s);
        std::ostringstream l;
        l << "n=" << s.graph.size() << " edges=" << s.graph.edge_count() << " levels=" << in.graph.size() << " m=" << gm;
        line = l.str();
        if (!boxes_path.empty()) {
          if (!in.rep) throw Error("--boxes needs a representation input");
          Representation boxes = scaffold_boxes(*in.rep, gm);
          write_json_file(boxes_path, to_json(boxes));
          line += "; boxes " + summary(boxes);
        }
      } else {
        Loaded in = load_input(input_path);
        if (!in.rep) throw Error("lift needs a representation input");
        Representation rep;
        if (!y_labels.empty()) {
          std::vector<bool> in_y(in.graph.size(), false);
          for (const auto& l : y_labels) {
            in_y[in.graph.find(l)] = true;
          }
          rep = lift_dimension(*in.rep, in_y);
        } else {
          Coloring colors = in.rep->dimension == 1 ? greedy_interval_coloring(*in.rep)
                                                   : greedy_coloring(in.graph, in.natural);
          rep = touching_lift(*in.rep, colors, bits);
        }
        out = to_json(rep);
        line = summary(rep);
      }
      write_json_file(out_path, out);
      std::cout << line << "\n";
      return 0;
    }

    if (*colnum || *reach) {
      Loaded in = load_input(input_path);
      ReachKind kind = parse_reach_kind(kind_text);
      if (*reach) {
        Vertex v = in.graph.find(vertex_label);
        Ordering ord = order_from(in, order_mode, order_file);
        for (Vertex u : reach_set(in.graph, ord, k, v, kind)) std::cout << in.graph.label(u) << "\n";
        return 0;
      }
      Ordering ord;
      if (order_mode == "exhaustive") {
        if (kind == ReachKind::decreasing) throw Error("exhaustive search is for weak or strong");
        ColnumSearch res = kind == ReachKind::weak ? wcol_exact(in.graph, k, node_budget)
                                                   : scol_exact(in.graph, k, node_budget);
        if (!res.exact()) {
          std::cerr << "search budget exhausted after " << res.nodes << " nodes; value in [" << res.lower_bound << ", "
                    << res.upper_bound << "]\n";
          return kExitUsage;
        }
        if (!per_vertex) {
          std::cout << *res.value << "\n";
          return 0;
        }
        ord = res.witness;
      } else {
        ord = order_from(in, order_mode, order_file);
      }
      if (per_vertex) {
        auto sizes = reach_sizes(in.graph, ord, k, kind);
        for (std::size_t i = 0; i < ord.size(); ++i) {
          Vertex v = ord.at(i);
          std::cout << in.graph.label(v) << " " << sizes[v] << "\n";
        }
      } else {
        std::cout << colnum_ordered(in.graph, ord, k, kind) << "\n";
      }
      return 0;
    }

    if (*bounds) {
      if (format != "csv" && format != "json") throw Error("format must be csv or json");
      std::optional<LowerBoundFamily> lb;
      if (!lb_family.empty()) lb = parse_lb_family(lb_family);
      Rational b = parse_rational(b_text);
      Json rows = Json::array();
      if (format == "csv") std::cout << "case,t,d,b,k,scol_upper,wcol_upper,lb\n";
      for (const auto& c : cases)
        for (auto t : parse_range(t_range))
          for (auto d : parse_range(d_range)) {
            BoundCase bc = c == "a"   ? BoundCase::centrally_symmetric(t, d)
                           : c == "b" ? BoundCase::ball_like(b, t, d)
                           : c == "c" ? BoundCase::balls(t, d, k0)
                                      : throw Error("case must be a, b or c");
            for (auto kk : parse_range(k_range)) {
              std::string scol = scol_upper(bc, kk).get_str();
              std::string wcol = kk >= 1 ? thm_weak_upper(bc, kk).value.get_str() : "";
              std::string lbv;
              if (lb) {
                std::uint64_t param = *lb == LowerBoundFamily::thin_squares ? t
                                      : *lb == LowerBoundFamily::hypercubes ? d
                                                                            : 0;
                lbv = lb_value(*lb, kk, param).get_str();
              }
              std::string bs = bc.kind == BoundCase::Kind::ball_like ? format_rational(b) : "";
              if (format == "csv")
                std::cout << bc.name() << "," << t << "," << d << "," << bs << "," << kk << "," << scol << "," << wcol
                          << "," << lbv << "\n";
              else
                rows.push_back({{"case", bc.name()},
                                {"t", t},
                                {"d", d},
                                {"b", bs},
                                {"k", kk},
                                {"scol_upper", scol},
                                {"wcol_upper", wcol},
                                {"lb", lbv}});
            }
          }
      if (format == "json") std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (*verify) {
      vo.seed = seed;
      vo.threads = threads;
      VerifyReport report = run_verify_suite(suite, vo);
      std::cout << report.text(failures_only);
      if (!json_path.empty()) write_json_file(json_path, report.json());
      return report.passed() ? 0 : kExitFail;
    }

    if (*dot) {
      Loaded in = load_input(input_path);
      std::optional<Ordering> ord;
      if (dot_order != "none") ord = order_from(in, dot_order, order_file);
      std::string text = to_dot(in.graph, ord);
      if (out_path.empty())
        std::cout << text;
      else
        write_text_file(out_path, text);
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

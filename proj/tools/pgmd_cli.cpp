#include "pgmd_cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "pgmd/errors.hpp"
#include "pgmd/graph_io.hpp"
#include "pgmd/group_spec.hpp"
#include "pgmd/report_json.hpp"
#include "pgmd/theory.hpp"

namespace pgmd::cli {

namespace {

constexpr int kDefaultOracleCap = 22;
constexpr int kDefaultEnumCap = 18;

struct Options {
  std::string group_spec;
  std::string graph_source;
  std::string format = "text";
  std::string method = "both";
  std::string pair;
  std::string n_range;
  int cap_oracle = kDefaultOracleCap;
  int cap_enum = kDefaultEnumCap;
  bool unsafe_cap = false;
  std::uint64_t seed = 1;
  bool labels = false;
  bool strict_exchange = false;
};

struct Input {
  std::optional<PowerGraphContext> ctx;  // set for --group
  SimpleGraph graph;                     // always set
  DistanceMatrix dist;
  bool degenerate_dihedral = false;
};

int parse_int_token(const std::string& text, const std::string& what) {
  int value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || p != text.data() + text.size())
    throw ParseError(what + ": expected an integer, got '" + text + "'");
  return value;
}

SimpleGraph load_graph_source(const std::string& token, std::uint64_t seed) {
  for (const char* prefix : {"tree:", "wheel:", "complete:"}) {
    if (token.rfind(prefix, 0) == 0) {
      const int n = parse_int_token(token.substr(std::string(prefix).size()),
                                    "--graph '" + token + "'");
      if (token[0] == 't') return random_tree(n, seed);
      if (token[0] == 'w') return wheel_graph(n);
      return complete_graph(n);
    }
  }
  return read_edge_list_file(token);
}

Input load_input(const Options& opt) {
  Input in;
  if (!opt.group_spec.empty()) {
    const GroupSpec spec = parse_group_spec(opt.group_spec);
    in.degenerate_dihedral =
        spec.kind == GroupKind::dihedral && spec.parameters.at(0) < 3;
    in.ctx = analyze_power_graph(build_group(spec));
    in.graph = in.ctx->graph;
    in.dist = in.ctx->dist;
  } else {
    in.graph = load_graph_source(opt.graph_source, opt.seed);
    in.dist = all_pairs_distances(in.graph);
  }
  return in;
}

ResolveOptions resolve_options(const Options& opt) {
  ResolveOptions r;
  r.oracle_cap = opt.cap_oracle;
  r.enum_cap = opt.cap_enum;
  return r;
}

std::string vertex_name(const Input& in, const Options& opt, int v) {
  if (opt.labels && in.ctx) return in.ctx->group.element_labels()[v];
  return std::to_string(v);
}

std::string set_text(const Input& in, const Options& opt,
                     const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += vertex_name(in, opt, vs[i]);
  }
  return s + "}";
}

void print_json(std::ostream& out, const nlohmann::json& j) {
  out << j.dump(2) << "\n";
}

// ---- subcommand bodies ----

int run_group(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  const FiniteGroup& g = in.ctx->group;
  std::vector<int> orders(g.order());
  for (int x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  const auto invs = involutions(g);

  if (opt.format == "json") {
    nlohmann::json j{{"label", g.label()},
                     {"order", g.order()},
                     {"identity", g.identity()},
                     {"cyclic", is_cyclic(g)},
                     {"abelian", is_abelian(g)},
                     {"degenerate", in.degenerate_dihedral},
                     {"involutions", invs},
                     {"element_orders", orders}};
    print_json(out, j);
    return 0;
  }
  out << "label: " << g.label() << "\n";
  out << "order: " << g.order() << "\n";
  out << "identity: " << vertex_name(in, opt, g.identity()) << "\n";
  out << "cyclic: " << (is_cyclic(g) ? "yes" : "no") << "\n";
  out << "abelian: " << (is_abelian(g) ? "yes" : "no") << "\n";
  out << "degenerate: " << (in.degenerate_dihedral ? "yes" : "no") << "\n";
  out << "involutions: " << set_text(in, opt, invs) << "\n";
  out << "element orders:";
  for (int o : orders) out << " " << o;
  out << "\n";
  return 0;
}

int run_pgraph(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  if (opt.format == "edgelist") {
    out << write_edge_list(in.graph);
    return 0;
  }
  if (opt.format == "dot") {
    std::vector<std::string> labels;
    if (opt.labels && in.ctx) labels = in.ctx->group.element_labels();
    out << write_dot(in.graph, labels);
    return 0;
  }
  if (opt.format == "json") {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : in.graph.edges())
      edges.push_back(nlohmann::json::array({u, v}));
    print_json(out, nlohmann::json{{"vertex_count", in.graph.vertex_count()},
                                   {"edges", edges}});
    return 0;
  }
  out << (in.ctx ? "power graph of " + in.ctx->group.label() : "graph") << ": "
      << in.graph.vertex_count() << " vertices, " << in.graph.edge_count()
      << " edges\n";
  for (const auto& [u, v] : in.graph.edges())
    out << vertex_name(in, opt, u) << " -- " << vertex_name(in, opt, v) << "\n";
  return 0;
}

int run_twins(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  const TwinPartition part =
      in.ctx ? in.ctx->twins : twin_partition(in.graph);
  if (opt.format == "json") {
    print_json(out, twin_report_json(part));
    return 0;
  }
  out << "twin classes (" << part.class_count() << "):\n";
  for (const auto& cls : part.classes) out << set_text(in, opt, cls) << "\n";
  std::vector<int> singles;
  for (int id : part.singleton_ids) singles.push_back(part.classes[id][0]);
  out << "singletons: " << set_text(in, opt, singles) << "\n";
  return 0;
}

void print_md_text(std::ostream& out, const Input& in, const Options& opt,
                   const MdReport& r) {
  out << "beta: " << r.beta << "\n";
  if (!r.witness_basis.empty())
    out << "basis: " << set_text(in, opt, r.witness_basis) << "\n";
  out << "method: " << to_string(r.method) << "\n";
  if (r.cross_check) {
    switch (r.cross_check->state) {
      case CrossCheck::State::agree:
        out << "cross_check: agree\n";
        break;
      case CrossCheck::State::disagree:
        out << "cross_check: disagree (" << r.cross_check->details << ")\n";
        break;
      case CrossCheck::State::not_attempted:
        out << "cross_check: " << r.cross_check->details << "\n";
        break;
    }
  }
}

int run_md(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  const ResolveOptions ropts = resolve_options(opt);

  auto formula_report = [&]() -> MdReport {
    if (in.ctx) return md_formula_mdpg(*in.ctx, ropts);
    return md_formula_no_singleton(in.graph);
  };

  if (opt.method == "brute") {
    const MdReport r = metric_dimension_oracle(in.graph, in.dist, ropts);
    if (opt.format == "json") print_json(out, md_report_json(r));
    else print_md_text(out, in, opt, r);
    return 0;
  }
  if (opt.method == "formula") {
    const MdReport r = formula_report();
    if (opt.format == "json") print_json(out, md_report_json(r));
    else print_md_text(out, in, opt, r);
    return 0;
  }
  // both
  const MdReport formula = formula_report();
  const MdReport oracle = metric_dimension_oracle(in.graph, in.dist, ropts);
  const bool agree = formula.beta == oracle.beta;
  if (opt.format == "json") {
    nlohmann::json j{{"formula", md_report_json(formula)},
                     {"oracle", md_report_json(oracle)}};
    j["cross_check"] =
        agree ? nlohmann::json("agree")
              : nlohmann::json{{"disagree", "formula=" + std::to_string(formula.beta) +
                                                " oracle=" + std::to_string(oracle.beta)}};
    print_json(out, j);
    return 0;
  }
  out << "formula beta: " << formula.beta << " (" << to_string(formula.method)
      << ")\n";
  out << "oracle beta: " << oracle.beta << " (basis "
      << set_text(in, opt, oracle.witness_basis) << ")\n";
  out << "cross_check: " << (agree ? "agree" : "disagree") << "\n";
  return agree ? 0 : 1;
}

int run_exchange(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  const ResolveOptions ropts = resolve_options(opt);
  const ExchangeReport r =
      exchange_property(in.graph, in.dist, ropts, ExchangeReading::literal);
  std::optional<ExchangeReport> strict;
  if (opt.strict_exchange)
    strict = exchange_property(in.graph, in.dist, ropts, ExchangeReading::strict);

  if (opt.format == "json") {
    nlohmann::json j = exchange_report_json(r);
    if (strict) j["strict"] = exchange_report_json(*strict);
    print_json(out, j);
    return 0;
  }
  out << "exchange property: " << (r.holds ? "holds" : "fails") << "\n";
  out << "minimal resolving sets: " << r.minimal_sets_count << "\n";
  if (r.counterexample) {
    out << "counterexample: W1=" << set_text(in, opt, r.counterexample->w1)
        << " W2=" << set_text(in, opt, r.counterexample->w2)
        << " u=" << vertex_name(in, opt, r.counterexample->removed) << "\n";
  }
  if (strict) {
    out << "strict reading (v in W2 minus W1, distinct pairs): "
        << (strict->holds ? "holds" : "fails") << "\n";
    if (strict->counterexample)
      out << "strict counterexample: W1="
          << set_text(in, opt, strict->counterexample->w1)
          << " W2=" << set_text(in, opt, strict->counterexample->w2)
          << " u=" << vertex_name(in, opt, strict->counterexample->removed)
          << "\n";
  }
  return 0;
}

int run_rset(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  const auto comma = opt.pair.find(',');
  if (comma == std::string::npos)
    throw ParseError("--pair expects 'i,j', got '" + opt.pair + "'");
  const int x = parse_int_token(opt.pair.substr(0, comma), "--pair");
  const int y = parse_int_token(opt.pair.substr(comma + 1), "--pair");
  const auto r = r_set(*in.ctx, x, y);
  if (opt.format == "json") {
    print_json(out, nlohmann::json{{"pair", {x, y}}, {"r_set", r}});
    return 0;
  }
  out << set_text(in, opt, r) << "\n";
  return 0;
}

int run_psi(const Options& opt, std::ostream& out) {
  const Input in = load_input(opt);
  const PsiVerdict v = psi_membership(in.ctx->group);
  if (opt.format == "json") {
    print_json(out, psi_verdict_json(v));
    return 0;
  }
  auto line = [&](const char* name, const PsiCondition& c) {
    out << name << ": " << (c.holds ? "yes" : "no");
    if (!c.witness.empty()) out << " (" << c.witness << ")";
    out << "\n";
  };
  out << "in_psi: " << (v.in_psi ? "yes" : "no") << "\n";
  if (v.odd_prime > 0) out << "p: " << v.odd_prime << "\n";
  line("noncyclic", v.noncyclic);
  line("C1", v.c1);
  line("C2", v.c2);
  line("C3", v.c3);
  line("C4", v.c4);
  return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
  VerifySpec spec;
  spec.options = resolve_options(opt);
  if (!opt.n_range.empty()) {
    const auto dots = opt.n_range.find("..");
    if (dots == std::string::npos)
      throw ParseError("--n-range expects 'a..b', got '" + opt.n_range + "'");
    const int a = parse_int_token(opt.n_range.substr(0, dots), "--n-range");
    const int b = parse_int_token(opt.n_range.substr(dots + 2), "--n-range");
    if (a < 2 || b < a)
      throw ParseError("--n-range expects 2 <= a <= b, got '" + opt.n_range + "'");
    spec.cyclic_ns.clear();
    spec.dihedral_ns.clear();
    for (int n = a; n <= b; ++n) {
      spec.cyclic_ns.push_back(n);
      if (n >= 3) spec.dihedral_ns.push_back(n);
    }
  }
  const VerificationReport report = verify_theorems(spec);
  if (opt.format == "json") {
    print_json(out, verification_report_json(report));
  } else {
    std::size_t name_w = 4, exp_w = 8;
    for (const auto& r : report.rows) {
      name_w = std::max(name_w, r.case_name.size());
      exp_w = std::max(exp_w, r.expected.size());
    }
    out << std::left << std::setw(static_cast<int>(name_w) + 2) << "case"
        << std::setw(static_cast<int>(exp_w) + 2) << "expected"
        << "computed\n";
    int failed = 0;
    for (const auto& r : report.rows) {
      out << std::left << std::setw(static_cast<int>(name_w) + 2) << r.case_name
          << std::setw(static_cast<int>(exp_w) + 2) << r.expected
          << (r.pass ? r.computed : r.computed + "  [FAIL]") << "\n";
      if (!r.pass) ++failed;
    }
    out << report.rows.size() << " cases, " << failed << " failed\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"power graphs of finite groups: metric dimension, twin classes, "
               "resolving-set exchange"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* app = nullptr;
    bool needs_group = false;   // group-only subcommand
    bool allows_graph = false;  // may take --graph
  };
  std::vector<std::pair<std::string, Sub>> subs;

  auto add_sub = [&](const std::string& name, const std::string& desc,
                     bool needs_group, bool allows_graph) {
    CLI::App* s = app.add_subcommand(name, desc);
    if (needs_group || !allows_graph)
      s->add_option("--group", opt.group_spec,
                    "group spec: Z:<n>, D:<n>, P:Z:<n1>xZ:<n2>..., C:<path>");
    else {
      s->add_option("--group", opt.group_spec,
                    "group spec: Z:<n>, D:<n>, P:Z:<n1>xZ:<n2>..., C:<path>");
      s->add_option("--graph", opt.graph_source,
                    "edge-list file, or tree:<n> / wheel:<n> (rim count) / "
                    "complete:<n>");
    }
    s->add_option("--format", opt.format, "json|text|dot|edgelist");
    s->add_flag("--labels", opt.labels, "group notation instead of indices in text output");
    s->add_option("--cap-oracle", opt.cap_oracle,
                  "exact-search vertex cap (default 22)");
    s->add_option("--cap-enum", opt.cap_enum,
                  "minimal-set enumeration vertex cap (default 18)");
    s->add_flag("--unsafe-cap", opt.unsafe_cap,
                "acknowledge raising a cap beyond its default");
    s->add_option("--seed", opt.seed, "seed for tree:<n> graph generation");
    subs.emplace_back(name, Sub{s, needs_group, allows_graph});
    return s;
  };

  add_sub("group", "build a group and print its basic structure", true, false);
  add_sub("pgraph", "construct the power graph (or convert a graph file)", false, true);
  CLI::App* md = add_sub("md", "metric dimension", false, true);
  md->add_option("--method", opt.method, "brute|formula|both (default both)");
  add_sub("twins", "twin classes and singleton twins", false, true);
  CLI::App* ex = add_sub("exchange", "exchange property for resolving sets", false, true);
  ex->add_flag("--strict-exchange", opt.strict_exchange,
               "also decide the stricter replacement rule v in W2 minus W1");
  CLI::App* rs = add_sub("rset", "vertices whose distances to a pair differ", true, false);
  rs->add_option("--pair", opt.pair, "pair of element indices 'i,j'")->required();
  add_sub("psi", "membership in the Psi class of groups", true, false);
  CLI::App* vf = add_sub("verify", "cross-validate every closed form against the exact search",
                         false, false);
  vf->add_option("--n-range", opt.n_range,
                 "cyclic/dihedral parameter range 'a..b' for the sweep");

  std::vector<const char*> argv;
  argv.push_back("pgmd");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "pgmd: " << e.what() << "\n";
    return 2;
  }

  try {
    if (opt.format != "json" && opt.format != "text" && opt.format != "dot" &&
        opt.format != "edgelist")
      throw ParseError("--format must be json, text, dot, or edgelist; got '" +
                       opt.format + "'");
    if (opt.cap_oracle > kDefaultOracleCap && !opt.unsafe_cap)
      throw ParseError("--cap-oracle above the default " +
                       std::to_string(kDefaultOracleCap) +
                       " requires --unsafe-cap");
    if (opt.cap_enum > kDefaultEnumCap && !opt.unsafe_cap)
      throw ParseError("--cap-enum above the default " +
                       std::to_string(kDefaultEnumCap) + " requires --unsafe-cap");

    for (const auto& [name, sub] : subs) {
      if (!sub.app->parsed()) continue;
      if (name == "verify") {
        if (!opt.group_spec.empty() || !opt.graph_source.empty())
          throw ParseError("verify takes no --group or --graph input");
        return run_verify(opt, out);
      }
      const bool has_group = !opt.group_spec.empty();
      const bool has_graph = !opt.graph_source.empty();
      if (sub.needs_group && !has_group)
        throw ParseError(name + " requires --group");
      if (!sub.needs_group && has_group == has_graph)
        throw ParseError(name + " requires exactly one of --group or --graph");
      if (opt.labels && !has_group)
        throw ParseError("--labels requires --group");

      if (name == "group") return run_group(opt, out);
      if (name == "pgraph") return run_pgraph(opt, out);
      if (name == "md") {
        if (opt.method != "brute" && opt.method != "formula" && opt.method != "both")
          throw ParseError("--method must be brute, formula, or both; got '" +
                           opt.method + "'");
        return run_md(opt, out);
      }
      if (name == "twins") return run_twins(opt, out);
      if (name == "exchange") return run_exchange(opt, out);
      if (name == "rset") return run_rset(opt, out);
      if (name == "psi") return run_psi(opt, out);
    }
    err << "pgmd: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "pgmd: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "pgmd: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "pgmd: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pgmd::cli

#pragma once

// Command-line front end. run() is separate from main() so the tests can
// drive every subcommand against string streams.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monodromy/acceptance.hpp"
#include "monodromy/all.hpp"

namespace monodromy::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::string groups;
  std::string complex = "K0";
  std::string element;
  std::string basis = "auto";
  std::string format = "text";
  std::uint64_t seed = 2024;
  std::optional<std::size_t> cap;
  int depth = 3;
  std::size_t trials = 100;
};

namespace detail {

inline void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline std::vector<std::string> labels(const std::vector<FiniteGroup>& groups) {
  std::vector<std::string> out;
  for (const auto& g : groups) out.push_back(g.label());
  return out;
}

struct Context {
  std::vector<FiniteGroup> groups;
  std::shared_ptr<const FibreGraph> graph;
  std::shared_ptr<const FreeProduct> product;
  std::optional<Basis> basis;
};

inline Context load(const RunConfig& cfg, bool need_graph, bool need_basis) {
  Context ctx;
  ctx.groups = parse_group_spec(cfg.groups);
  std::string kind = cfg.basis;
  if (kind == "auto") kind = ctx.groups.size() == 2 ? "algebraic" : "tree";
  if (need_basis && kind == "tree") need_graph = true;
  if (need_graph) {
    ctx.graph = std::make_shared<const FibreGraph>(ctx.groups, cfg.cap);
    ctx.product = std::shared_ptr<const FreeProduct>(ctx.graph, &ctx.graph->product());
  } else {
    ctx.product = std::make_shared<const FreeProduct>(ctx.groups);
  }
  if (need_basis) {
    if (kind == "algebraic")
      ctx.basis = Basis::algebraic(ctx.product);
    else
      ctx.basis = Basis::tree(ctx.graph);
  }
  return ctx;
}

inline int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  auto groups = parse_group_spec(cfg.groups);
  std::vector<std::size_t> orders;
  for (const auto& g : groups) orders.push_back(g.order());
  const BigInt n = rank_formula(orders);
  if (cfg.format == "json")
    print_json(out, {{"schema", 1}, {"groups", labels(groups)}, {"orders", orders}, {"rank", n.str()}});
  else
    out << n << '\n';
  return kOk;
}

inline int cmd_graph(const RunConfig& cfg, std::ostream& out) {
  Context ctx = load(cfg, true, false);
  const FibreGraph& g = *ctx.graph;
  std::optional<EdgePath> overlay;
  if (!cfg.element.empty()) overlay = g.word_to_path(ctx.product->parse(cfg.element));
  if (cfg.format == "dot") {
    out << g.to_dot(overlay);
    return kOk;
  }
  auto edge_text = [&](std::size_t e) {
    return g.vertex_label(g.edges()[e].low) + "--" + g.vertex_label(g.edges()[e].high);
  };
  if (cfg.format == "json") {
    nlohmann::json cotree = nlohmann::json::array();
    for (std::size_t c = 0; c < g.cotree().size(); ++c)
      cotree.push_back({{"symbol", g.cotree_symbol_name(c)},
                        {"edge", edge_text(g.cotree()[c])},
                        {"coordinate", g.edges()[g.cotree()[c]].coord + 1},
                        {"witness", ctx.product->format(g.cotree_witness(c))}});
    nlohmann::json j{{"schema", 1},         {"groups", labels(ctx.groups)}, {"vertices", g.vertex_count()},
                     {"edges", g.edge_count()}, {"rank", g.betti_one()},    {"cotree", cotree}};
    if (overlay) {
      j["loop"] = {{"closed", overlay->closed()}, {"length", overlay->steps.size()}};
      if (overlay->closed()) {
        FreeWord w = g.loop_to_basis(*overlay);
        j["loop"]["basis_word"] = free_word_to_string(w, [&](std::size_t s) { return g.cotree_symbol_name(s); });
      }
    }
    print_json(out, j);
    return kOk;
  }
  out << "vertices " << g.vertex_count() << "\nedges " << g.edge_count() << "\nrank " << g.betti_one()
      << "\n";
  for (std::size_t c = 0; c < g.cotree().size(); ++c)
    out << g.cotree_symbol_name(c) << "  " << edge_text(g.cotree()[c]) << "  "
        << ctx.product->format(g.cotree_witness(c)) << '\n';
  if (overlay) {
    out << "loop " << (overlay->closed() ? "closed" : "open") << ", " << overlay->steps.size() << " steps";
    if (overlay->closed())
      out << ", class "
          << free_word_to_string(g.loop_to_basis(*overlay), [&](std::size_t s) { return g.cotree_symbol_name(s); });
    out << '\n';
  }
  return kOk;
}

inline int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  Context ctx = load(cfg, false, true);
  const Basis& b = *ctx.basis;
  const int cap = std::max(1, std::min(cfg.depth + 1, kMaxMagnusDegree));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t s = 0; s < b.rank(); ++s) {
    const Word& w = b.witnesses()[s];
    const MagnusWeight weight = magnus_weight(free_spelling(*ctx.product, w), cap);
    rows.push_back({{"symbol", b.symbols()[s]},
                    {"witness", ctx.product->format(w)},
                    {"magnus_weight", weight.to_string()}});
  }
  if (cfg.format == "json") {
    print_json(out, {{"schema", 1}, {"kind", to_string(b.kind())}, {"rank", b.rank()}, {"generators", rows}});
  } else {
    out << to_string(b.kind()) << " basis, rank " << b.rank() << '\n';
    for (const auto& r : rows)
      out << r["symbol"].get<std::string>() << "  " << r["witness"].get<std::string>() << "  weight "
          << r["magnus_weight"].get<std::string>() << '\n';
  }
  return kOk;
}

inline Word required_element(const RunConfig& cfg, const Context& ctx) {
  if (cfg.element.empty()) throw DomainError("--element is required");
  return ctx.product->parse(cfg.element);
}

inline int cmd_act(const RunConfig& cfg, std::ostream& out) {
  Context ctx = load(cfg, false, true);
  const Basis& b = *ctx.basis;
  const Word g = required_element(cfg, ctx);
  const Automorphism a = act_word(b, g);
  if (cfg.format == "json") {
    nlohmann::json images = nlohmann::json::array();
    for (std::size_t s = 0; s < a.rank(); ++s)
      images.push_back({{"symbol", b.symbols()[s]}, {"image", b.format(a.images[s])}});
    print_json(out, {{"schema", 1},
                     {"kind", to_string(b.kind())},
                     {"element", ctx.product->format(g)},
                     {"images", images}});
  } else {
    out << format_automorphism(b, a);
  }
  return kOk;
}

inline int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  Context ctx = load(cfg, false, true);
  const Basis& b = *ctx.basis;
  const Word g = required_element(cfg, ctx);
  const IntMatrix m = abelianize(act_word(b, g));
  const BigInt d = det(m);
  if (cfg.format == "text") {
    out << m.to_text() << "det " << d << '\n';
  } else {
    nlohmann::json j = matrix_json(b, m);
    j["element"] = ctx.product->format(g);
    j["det"] = d.str();
    print_json(out, j);
  }
  return kOk;
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out) {
  auto groups = parse_group_spec(cfg.groups);
  const RepresentationReport rep = representation_report(groups, cfg.trials, cfg.seed);
  if (cfg.format == "json") {
    print_json(out, report_json(rep));
  } else {
    auto yn = [](bool v) { return v ? "yes" : "no"; };
    out << "groups " << rep.group_labels[0] << " x " << rep.group_labels[1] << ", rank " << rep.rank << '\n'
        << "homomorphism " << yn(rep.homomorphism) << '\n'
        << "factors commute " << yn(rep.factors_commute) << '\n'
        << "faithful " << yn(rep.faithful) << '\n'
        << "unimodular " << yn(rep.all_unimodular) << '\n'
        << "special linear " << yn(rep.all_special_linear) << '\n'
        << "kernel words trivial " << rep.kernel_trials - rep.kernel_failures << "/" << rep.kernel_trials
        << '\n';
    for (const auto& e : rep.elements)
      out << "det M(" << groups[0].name(e.g) << "," << groups[1].name(e.h) << ") = " << e.determinant << '\n';
    for (const auto& f : rep.failures) out << "failure: " << f << '\n';
  }
  return rep.ok() ? kOk : kCheckFailed;
}

inline int cmd_lemma_check(const RunConfig& cfg, std::ostream& out) {
  const FreeProduct p(parse_group_spec(cfg.groups));
  if (cfg.depth < 1 || cfg.depth + 1 > kMaxMagnusDegree)
    throw DomainError("--depth must be in 1.." + std::to_string(kMaxMagnusDegree - 1));
  std::mt19937_64 rng(cfg.seed);
  struct Tally {
    std::string name;
    std::size_t pass = 0, total = 0;
  };
  std::vector<Tally> tallies{{"delta-identity"}, {"product-expansion"}, {"iterated-weight"}, {"delta-weight"}};
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const Word g = p.random_word(rng, len(rng)), f = p.random_word(rng, len(rng));
    ++tallies[0].total;
    tallies[0].pass += delta_identity_check(p, g, f);
    const FreeWord a = acceptance::random_free_word(rng, 4, 5), b = acceptance::random_free_word(rng, 4, 5),
                   c = acceptance::random_free_word(rng, 4, 5);
    ++tallies[1].total;
    tallies[1].pass += product_expansion_check(a, b, c);
  }
  for (int k = 1; k <= cfg.depth; ++k) {
    std::vector<FreeWord> letters;
    for (int i = 0; i < k; ++i) letters.push_back({free_letter(static_cast<std::size_t>(i))});
    const FreeWord f = iterated_commutator(letters);
    ++tallies[2].total;
    tallies[2].pass += magnus_weight(f, k + 1).weight == k;
  }
  // Delta = [g, f] with f an iterated commutator of k distinct single letters
  // of the free product and g any letter; its free-letter spelling must have
  // Magnus weight k+1.
  std::vector<Letter> all_letters;
  for (std::size_t i = 0; i < p.arity(); ++i)
    for (Element e = 1; e < p.group(i).order(); ++e) all_letters.push_back({i, e});
  if (!all_letters.empty()) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const int k = std::uniform_int_distribution<int>(
          1, std::min<int>(cfg.depth, static_cast<int>(all_letters.size())))(rng);
      std::vector<Letter> pool = all_letters;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(k));
      Letter g = all_letters[std::uniform_int_distribution<std::size_t>(0, all_letters.size() - 1)(rng)];
      if (k == 1 && g == pool[0]) continue;
      std::vector<FreeWord> spelled;
      for (std::size_t i = 0; i < pool.size(); ++i) spelled.push_back({free_letter(i)});
      FreeLetter gs = free_letter(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pool[i] == g) gs = free_letter(i);
      const MagnusWeight w = magnus_weight(free_commutator({gs}, iterated_commutator(spelled)), k + 1);
      ++tallies[3].total;
      tallies[3].pass += w.weight == k + 1;
    }
  }
  bool ok = true;
  nlohmann::json j{{"schema", 1}, {"seed", cfg.seed}, {"depth", cfg.depth}, {"trials", cfg.trials}};
  for (const auto& t : tallies) {
    ok = ok && t.pass == t.total;
    if (cfg.format == "json")
      j["properties"][t.name] = {{"pass", t.pass}, {"total", t.total}};
    else
      out << (t.pass == t.total ? "PASS " : "FAIL ") << t.name << " " << t.pass << "/" << t.total << '\n';
  }
  if (cfg.format == "json") print_json(out, j);
  return ok ? kOk : kCheckFailed;
}

inline int cmd_homology(const RunConfig& cfg, std::ostream& out) {
  auto groups = parse_group_spec(cfg.groups);
  const SimplicialComplex k = parse_complex(cfg.complex, groups.size());
  const CubicalComplex cx(groups, k, cfg.cap);
  const HomologyOne h = h1(cx);
  std::vector<std::string> torsion;
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  if (cfg.format == "json") {
    print_json(out, {{"schema", 1},
                     {"groups", labels(groups)},
                     {"complex", k.to_string()},
                     {"flag", k.is_flag()},
                     {"cells", {cx.vertex_count(), cx.edge_count(), cx.square_count()}},
                     {"betti", h.betti},
                     {"torsion", torsion}});
  } else {
    out << "betti " << h.betti << "\ntorsion";
    for (const auto& t : torsion) out << ' ' << t;
    out << (torsion.empty() ? " none" : "") << "\nflag " << (k.is_flag() ? "yes" : "no") << "\ncells "
        << cx.vertex_count() << ' ' << cx.edge_count() << ' ' << cx.square_count() << '\n';
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  for (const auto& r : acceptance::run_all(cfg.seed)) {
    out << acceptance::format_result(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy of polyhedral-product fibrations over finite groups", "monodromy"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  auto add_groups = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--groups", cfg.groups, "comma-separated groups: C<n>, S<n>, D<n>, table:<path>");
    if (required) o->required();
  };
  auto add_basis = [&](CLI::App* sub) {
    sub->add_option("--basis", cfg.basis, "algebraic (two groups) or tree")
        ->check(CLI::IsMember({"auto", "algebraic", "tree"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "vertex/cell cap (default MONODROMY_CELL_CAP or 1000000)")
        ->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&)>> commands;

  auto* rank = app.add_subcommand("rank", "rank of the kernel free group");
  add_groups(rank);
  commands.push_back({rank, detail::cmd_rank});

  auto* graph = app.add_subcommand("graph", "fibre graph, spanning tree and cycle basis");
  add_groups(graph);
  graph->add_option("--element", cfg.element, "word whose tracked path is overlaid");
  add_cap(graph);
  commands.push_back({graph, detail::cmd_graph});

  auto* basis = app.add_subcommand("basis", "free basis generators and their witnesses");
  add_groups(basis);
  add_basis(basis);
  basis->add_option("--depth", cfg.depth, "Magnus weight cap minus one")->check(CLI::Range(0, 7));
  add_cap(basis);
  commands.push_back({basis, detail::cmd_basis});

  auto* act = app.add_subcommand("act", "images of basis generators under an element");
  add_groups(act);
  act->add_option("--element", cfg.element, "word, e.g. x1^1*x2^2 or s2:(12)")->required();
  add_basis(act);
  add_cap(act);
  commands.push_back({act, detail::cmd_act});

  auto* matrix = app.add_subcommand("matrix", "abelianized matrix of an element");
  add_groups(matrix);
  matrix->add_option("--element", cfg.element, "word, e.g. x1^1*x2^2 or s2:(12)")->required();
  add_basis(matrix);
  add_cap(matrix);
  commands.push_back({matrix, detail::cmd_matrix});

  auto* report = app.add_subcommand("report", "matrix-level checks for two groups");
  add_groups(report);
  report->add_option("--trials", cfg.trials, "random kernel words to test");
  report->add_option("--seed", cfg.seed);
  commands.push_back({report, detail::cmd_report});

  auto* lemma = app.add_subcommand("lemma-check", "commutator identities and Magnus weights");
  add_groups(lemma);
  lemma->add_option("--depth", cfg.depth, "largest commutator length k");
  lemma->add_option("--trials", cfg.trials, "random trials per property");
  lemma->add_option("--seed", cfg.seed);
  commands.push_back({lemma, detail::cmd_lemma_check});

  auto* homology = app.add_subcommand("homology", "H1 of Z_K(I,F)");
  add_groups(homology);
  homology->add_option("--complex", cfg.complex, "K={1;2;3;1,2}, K0, full or @file")->capture_default_str();
  add_cap(homology);
  commands.push_back({homology, detail::cmd_homology});

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  commands.push_back({verify, detail::cmd_verify});

  for (auto& [sub, fn] : commands) {
    std::vector<std::string> allowed{"text", "json"};
    if (sub == graph) allowed.push_back("dot");
    sub->add_option("--format,--emit", cfg.format, "output format: " + CLI::detail::join(allowed, "|"))
        ->check(CLI::IsMember(allowed));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    cfg.command = sub->get_name();
    if (sub == matrix && sub->count("--format") == 0) cfg.format = "json";
    try {
      return fn(cfg, out);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
    } catch (const ValidationError& e) {
      err << "error: " << e.what() << '\n';
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
    } catch (const SizeLimitError& e) {
      err << "error: " << e.what() << '\n';
    }
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace monodromy::cli

#include <CLI11.hpp>

#include <iostream>

#include "mt/ingest.hpp"
#include "mt/json_io.hpp"
#include "mt/locally_correct.hpp"
#include "mt/render.hpp"
#include "mt/solver.hpp"

namespace {

int run_validate(const std::string& path) {
  auto nodes = mt::raw_nodes_from_json(mt::load_json(path));
  if (auto v = mt::validate(nodes)) {
    std::cout << "violation: " << v->code << " (node " << v->node << "): " << v->message << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

mt::partial_interleaving load_constraints(const mt::tree_pair& tp, const std::string& path) {
  if (path.empty()) return {};
  return mt::interleaving_from_json(tp, mt::load_json(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"merge tree interleavings: distances, constraints and locally correct matchings"};
  app.require_subcommand(1);

  std::string tree_a, tree_b, tree_i, constraints, out, trace_path, witness_path;
  std::string series_path, grid_path;
  int connectivity = 4, samples = 256;
  unsigned seed = 0;
  bool exhaustive = false, use_oracle = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a merge tree file");
  validate_cmd->add_option("tree", tree_a)->required();

  auto* critical_cmd = app.add_subcommand("critical", "print the critical values Delta[P]");
  critical_cmd->add_option("A", tree_a)->required();
  critical_cmd->add_option("B", tree_b)->required();
  critical_cmd->add_option("--constraints", constraints);

  auto* distance_cmd = app.add_subcommand("distance", "residual interleaving distance");
  distance_cmd->add_option("A", tree_a)->required();
  distance_cmd->add_option("B", tree_b)->required();
  distance_cmd->add_option("--constraints", constraints);
  distance_cmd->add_option("--witness", witness_path);
  distance_cmd->add_flag("--oracle", use_oracle, "use the exhaustive oracle (size-guarded)");

  auto* lc_cmd = app.add_subcommand("locally-correct", "build a locally correct interleaving");
  lc_cmd->add_option("A", tree_a)->required();
  lc_cmd->add_option("B", tree_b)->required();
  lc_cmd->add_option("-o,--output", out)->required();
  lc_cmd->add_option("--trace", trace_path);

  auto* check_cmd = app.add_subcommand("check", "refute local correctness of an interleaving");
  check_cmd->add_option("A", tree_a)->required();
  check_cmd->add_option("B", tree_b)->required();
  check_cmd->add_option("I", tree_i)->required();
  check_cmd->add_option("--samples", samples);
  check_cmd->add_option("--seed", seed);
  check_cmd->add_flag("--exhaustive", exhaustive);

  auto* ingest_cmd = app.add_subcommand("ingest", "build a merge tree from scalar data");
  ingest_cmd->add_option("--series", series_path);
  ingest_cmd->add_option("--grid", grid_path);
  ingest_cmd->add_option("--connectivity", connectivity)->check(CLI::IsMember({4, 8}));
  ingest_cmd->add_option("-o,--output", out)->required();

  auto* render_cmd = app.add_subcommand("render", "draw trees and matchings as SVG");
  render_cmd->add_option("A", tree_a)->required();
  render_cmd->add_option("B", tree_b)->required();
  render_cmd->add_option("I", tree_i);
  render_cmd->add_option("--constraints", constraints);
  render_cmd->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate_cmd) return run_validate(tree_a);

    if (*critical_cmd) {
      mt::merge_tree a = mt::tree_from_json(mt::load_json(tree_a));
      mt::merge_tree b = mt::tree_from_json(mt::load_json(tree_b));
      mt::tree_pair tp{&a, &b};
      for (const auto& v : mt::residual_critical_values(tp, load_constraints(tp, constraints)))
        std::cout << v.str() << "\n";
      return 0;
    }

    if (*distance_cmd) {
      mt::merge_tree a = mt::tree_from_json(mt::load_json(tree_a));
      mt::merge_tree b = mt::tree_from_json(mt::load_json(tree_b));
      mt::tree_pair tp{&a, &b};
      mt::partial_interleaving p = load_constraints(tp, constraints);
      if (use_oracle) {
        for (const auto& v : mt::residual_critical_values(tp, p)) {
          if (mt::oracle_decide(tp, p, v)) {
            std::cout << v.str() << "\n";
            return 0;
          }
        }
        std::cerr << "internal error: no feasible critical value\n";
        return 2;
      }
      auto r = mt::residual_distance(tp, p);
      std::cout << r.value.str() << "\n";
      if (!witness_path.empty())
        mt::write_file(witness_path, mt::anchored_to_json(r.witness).dump(2) + "\n");
      return 0;
    }

    if (*lc_cmd) {
      mt::merge_tree a = mt::tree_from_json(mt::load_json(tree_a));
      mt::merge_tree b = mt::tree_from_json(mt::load_json(tree_b));
      auto r = mt::build_locally_correct(a, b);
      mt::write_file(out, mt::anchored_to_json(r.interleaving).dump(2) + "\n");
      if (!trace_path.empty())
        mt::write_file(trace_path, mt::trace_to_json(r.trace).dump(2) + "\n");
      std::cout << mt::interleaving_shift(
                       mt::partial_interleaving{r.interleaving.fwd, r.interleaving.bwd})
                       .str()
                << "\n";
      return 0;
    }

    if (*check_cmd) {
      mt::merge_tree a = mt::tree_from_json(mt::load_json(tree_a));
      mt::merge_tree b = mt::tree_from_json(mt::load_json(tree_b));
      mt::tree_pair tp{&a, &b};
      mt::anchored_interleaving i = mt::anchored_from_json(tp, mt::load_json(tree_i));
      mt::check_options opt;
      opt.budget = samples;
      opt.seed = seed;
      opt.force_exhaustive = exhaustive;
      if (auto c = mt::check_locally_correct(tp, i, opt)) {
        nlohmann::json j = mt::interleaving_to_json(c->restriction);
        j["resdist"] = c->resdist.str();
        j["shift"] = c->shift.str();
        std::cout << j.dump(2) << "\n";
        return 1;
      }
      std::cout << "ok\n";
      return 0;
    }

    if (*ingest_cmd) {
      if (series_path.empty() == grid_path.empty())
        throw std::invalid_argument("ingest: give exactly one of --series or --grid");
      mt::merge_tree t =
          series_path.empty()
              ? mt::merge_tree_from_grid(mt::parse_grid_csv(mt::read_file(grid_path)),
                                         connectivity)
              : mt::merge_tree_from_series(mt::parse_series_csv(mt::read_file(series_path)));
      mt::write_file(out, mt::tree_to_json(t).dump(2) + "\n");
      return 0;
    }

    if (*render_cmd) {
      mt::merge_tree a = mt::tree_from_json(mt::load_json(tree_a));
      mt::merge_tree b = mt::tree_from_json(mt::load_json(tree_b));
      mt::tree_pair tp{&a, &b};
      std::optional<mt::anchored_interleaving> i;
      if (!tree_i.empty()) i = mt::anchored_from_json(tp, mt::load_json(tree_i));
      std::optional<mt::partial_interleaving> p;
      if (!constraints.empty()) p = load_constraints(tp, constraints);
      mt::write_file(out, mt::render_svg(tp, i ? &*i : nullptr, p ? &*p : nullptr));
      return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mt::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

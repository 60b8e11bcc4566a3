#ifndef FLALC_TOOLS_FLALC_CLI_HPP
#define FLALC_TOOLS_FLALC_CLI_HPP

// Command-line front end. Every subcommand ends its stdout with one summary
// line of space-separated key=value pairs (values never contain spaces).
//
// Exit codes: 0 success / satisfied, 1 definitive negative verdict,
// 2 inconclusive at the given bound, 3 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "flalc/flalc.hpp"

namespace flalc::cli {

enum Exit : int { kOk = 0, kNegative = 1, kInconclusive = 2, kUsage = 3 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("failed writing '" + path + "'");
}

inline Error file_error(const std::string& path, const std::exception& e) {
  return Error(path + ":" + e.what());
}

inline std::string help_formats() {
  return R"(File formats:
  .pcp   first line "s p", then p lines "v w"; words are digit strings over 1..s,
         '.'-separated when s > 9. '#' starts a comment.
  .flalc sections "tbox:" and "abox:" holding
           (gci C D [DEGREE])  (instance IND C [DEGREE])  (related IND IND R [DEGREE])
         Concepts: top | bot | NAME | (and C C+) | (or C C+) | (not C) | (some R C)
           | (all R C) | (scale N C) | (impl C D) | (iff C D) | (min C C+) | (max C C+)
         Degrees: p/q, 0 or 1; an omitted grade is 1.
  .fim   "domain: e0 e1 ...", then lines "individual: a -> e0", "concept: A e0 1/2",
         "role: R e0 e1 1". Unlisted values are 0.
Exit codes: 0 ok/satisfied, 1 negative verdict, 2 inconclusive at bound, 3 usage/input error.
The last stdout line is a key=value summary.)";
}

/// Runs the tool on argv, writing to the given streams; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Łukasiewicz fuzzy ALC toolkit: PCP reductions, canonical models, model checking"};
  app.footer(help_formats());
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::uint64_t max_nodes = CanonicalOptions{}.max_nodes;
  std::uint64_t max_enum = 10'000'000;
  app.add_option("--seed", seed, "Seed for randomized corpora (no current subcommand draws random numbers)");
  app.add_option("--max-nodes", max_nodes, "Cap on canonical model nodes")->check(CLI::PositiveNumber);
  app.add_option("--max-enum", max_enum, "Cap on enumerated search states")->check(CLI::PositiveNumber);

  std::string instance_path, out_path, kb_path, model_path, concept_text, element, epsilon_text;
  std::size_t max_len = 0, depth = 0, size = 0;
  std::uint64_t denominator = 0;
  std::optional<std::size_t> interior_depth;
  bool reverse = false, pal = false, prime = false;

  auto* solve_cmd = app.add_subcommand("solve-pcp", "Brute-force PCP / RPCP search up to a length bound");
  solve_cmd->add_option("--instance", instance_path, "Instance file (.pcp)")->required();
  solve_cmd->add_option("--max-len", max_len, "Longest index sequence to try")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--reverse", reverse, "Concatenate right to left (RPCP)");

  auto* transform_cmd = app.add_subcommand("transform", "Rewrite an instance");
  transform_cmd->add_option("--instance", instance_path, "Instance file (.pcp)")->required();
  transform_cmd->add_flag("--pal", pal, "Reverse every word (PCP -> RPCP)");
  transform_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* compile_cmd = app.add_subcommand("compile", "Compile an RPCP instance into a knowledge base");
  compile_cmd->add_option("--instance", instance_path, "Instance file (.pcp)")->required();
  compile_cmd->add_flag("--pal", pal, "Reverse every word first");
  compile_cmd->add_flag("--prime", prime, "Add the per-role axioms forbidding V = W");
  compile_cmd->add_option("--epsilon", epsilon_text, "Root grade for A (default 1/100)");
  compile_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* canonical_cmd = app.add_subcommand("canonical", "Materialize the canonical model to a depth");
  canonical_cmd->add_option("--instance", instance_path, "Instance file (.pcp)")->required();
  canonical_cmd->add_option("--depth", depth, "Tree depth")->required()->check(CLI::PositiveNumber);
  canonical_cmd->add_option("--epsilon", epsilon_text, "Root grade for A (default 1/100)");
  canonical_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a concept at an element");
  eval_cmd->add_option("--model", model_path, "Model file (.fim)")->required();
  eval_cmd->add_option("--concept", concept_text, "Concept expression")->required();
  eval_cmd->add_option("--at", element, "Element name")->required();

  auto* check_cmd = app.add_subcommand("check", "Check a knowledge base against a model");
  check_cmd->add_option("--kb", kb_path, "Knowledge base (.flalc)")->required();
  check_cmd->add_option("--model", model_path, "Model file (.fim)")->required();
  check_cmd->add_option("--interior-depth", interior_depth,
                        "Model is a canonical tree of this depth; GCIs range over nodes above the frontier")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Compile, build the canonical model, check, and solve");
  verify_cmd->add_option("--instance", instance_path, "Instance file (.pcp)")->required();
  verify_cmd->add_flag("--pal", pal, "Reverse every word first");
  verify_cmd->add_option("--depth", depth, "Tree depth / solution length bound")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--epsilon", epsilon_text, "Root grade for A (default 1/100)");

  auto* grid_cmd = app.add_subcommand("grid-search", "Bounded search for a finite model on a rational grid");
  grid_cmd->add_option("--kb", kb_path, "Knowledge base (.flalc)")->required();
  grid_cmd->add_option("--size", size, "Domain size")->required()->check(CLI::PositiveNumber);
  grid_cmd->add_option("--denominator", denominator, "Grid denominator k; degrees are j/k")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto load_instance = [&]() {
    try {
      PcpInstance inst = parse_instance(read_file(instance_path));
      return pal ? to_rpcp(inst) : inst;
    } catch (const Error& e) {
      throw file_error(instance_path, e);
    }
  };
  const auto load_kb = [&]() {
    try {
      return parse_kb(read_file(kb_path));
    } catch (const Error& e) {
      throw file_error(kb_path, e);
    }
  };
  const auto load_model = [&]() {
    try {
      return parse_model(read_file(model_path));
    } catch (const Error& e) {
      throw file_error(model_path, e);
    }
  };
  const auto config = [&]() {
    ReductionConfig cfg;
    if (!epsilon_text.empty()) cfg.epsilon = Degree::parse(epsilon_text);
    cfg.validate();
    return cfg;
  };
  CanonicalOptions canon_opts;
  canon_opts.max_nodes = max_nodes;
  SolveOptions solve_opts;
  solve_opts.max_nodes = max_enum;

  try {
    if (solve_cmd->parsed()) {
      const PcpInstance inst = load_instance();
      const auto result = reverse ? solve_rpcp(inst, max_len, solve_opts) : solve_pcp(inst, max_len, solve_opts);
      const std::string mode = reverse ? "rpcp" : "pcp";
      if (result.solution) {
        const auto [v, w] = concatenate(inst, *result.solution,
                                        reverse ? Concatenation::RightToLeft : Concatenation::LeftToRight);
        out << "solution " << sequence_to_string(*result.solution) << " spells "
            << word_to_string(v, inst.alphabet_size()) << "\n";
        out << "result=solved mode=" << mode << " sequence=" << sequence_to_string(*result.solution)
            << " length=" << result.solution->size() << " max-len=" << max_len << "\n";
        return kOk;
      }
      out << "no solution of length <= " << max_len << " (not a proof of unsolvability)\n";
      out << "result=not-found mode=" << mode << " max-len=" << max_len << "\n";
      return kInconclusive;
    }

    if (transform_cmd->parsed()) {
      const PcpInstance inst = load_instance();
      write_output(out_path, print_instance(inst), out);
      out << "result=ok pairs=" << inst.size() << " alphabet=" << inst.alphabet_size() << "\n";
      return kOk;
    }

    if (compile_cmd->parsed()) {
      const PcpInstance inst = load_instance();
      const ReductionConfig cfg = config();
      const KnowledgeBase kb = prime ? build_kb_prime(inst, cfg) : build_kb(inst, cfg);
      write_output(out_path, print_kb(kb), out);
      out << "result=ok axioms=" << kb.size() << " tbox=" << kb.tbox().size() << " abox=" << kb.abox().size()
          << "\n";
      return kOk;
    }

    if (canonical_cmd->parsed()) {
      const PcpInstance inst = load_instance();
      const CanonicalModel m = build_canonical(inst, depth, config(), canon_opts);
      write_output(out_path, print_model(m.interpretation()), out);
      out << "result=ok nodes=" << m.nodes().size() << " interior=" << m.interior().size() << " depth=" << depth
          << "\n";
      return kOk;
    }

    if (eval_cmd->parsed()) {
      const FuzzyInterpretation m = load_model();
      const Concept c = parse_concept(concept_text);
      out << "value=" << eval_concept(m, c, element).str() << "\n";
      return kOk;
    }

    if (check_cmd->parsed()) {
      const KnowledgeBase kb = load_kb();
      const FuzzyInterpretation m = load_model();
      CheckOptions opts;
      if (interior_depth) {
        if (kb.quantifier_depth() > 1) {
          throw ValidationError("--interior-depth needs quantifier depth <= 1, KB has " +
                                std::to_string(kb.quantifier_depth()));
        }
        std::vector<ElementId> range;
        for (ElementId x = 0; x < m.size(); ++x) {
          const auto mu = parse_node_name(m.element_name(x));
          if (!mu) throw ValidationError("element '" + m.element_name(x) + "' is not a tree node name");
          if (mu->size() < *interior_depth) range.push_back(x);
        }
        opts.gci_range = std::move(range);
      }
      const KbReport report = check_kb(m, kb, opts);
      for (const auto& e : report.entries) {
        out << (e.satisfied ? "ok   " : "FAIL ") << e.value.str();
        if (e.at) out << " @" << m.element_name(*e.at);
        out << "  " << to_string(e.axiom) << "\n";
      }
      out << "result=" << (report.satisfied() ? "satisfied" : "unsatisfied") << " axioms=" << report.entries.size()
          << " violated=" << report.violations() << "\n";
      return report.satisfied() ? kOk : kNegative;
    }

    if (verify_cmd->parsed()) {
      const PcpInstance inst = load_instance();
      const TheoremVerdict v = verify_theorem(inst, depth, config(), canon_opts, solve_opts);
      out << v.describe() << "\n";
      out << "base ontology on canonical model: " << (v.base_satisfied ? "satisfied" : "VIOLATED") << "\n";
      out << "brute-force RPCP search: "
          << (v.solver.solution ? "solution " + sequence_to_string(*v.solver.solution) : std::string("none"))
          << (v.solver_agrees() ? " (agrees)" : " (DISAGREES)") << "\n";
      out << v.summary() << "\n";
      return v.kind == TheoremVerdict::Kind::Solved ? kNegative : kInconclusive;
    }

    if (grid_cmd->parsed()) {
      const KnowledgeBase kb = load_kb();
      GridSearchOptions opts;
      opts.max_candidates = max_enum;
      const auto result = grid_search(kb, size, denominator, opts);
      if (result.model) {
        out << print_model(*result.model);
        out << "result=found size=" << size << " denominator=" << denominator
            << " enumerated=" << result.enumerated << "\n";
        return kOk;
      }
      out << "no model on this grid (not a proof of unsatisfiability)\n";
      out << "result=not-found size=" << size << " denominator=" << denominator
          << " enumerated=" << result.enumerated << "\n";
      return kInconclusive;
    }
  } catch (const ResourceLimitError& e) {
    err << "flalc: " << e.what() << "\n";
    out << "result=resource-limit\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "flalc: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace flalc::cli

#endif  // FLALC_TOOLS_FLALC_CLI_HPP

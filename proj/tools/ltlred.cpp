// Command line front end: classification, reduction, evaluation over
// lasso words, bounded equivalence / left-append-closure checks, and
// the differential fuzz harness.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ltlred/check.hpp"
#include "ltlred/classify.hpp"
#include "ltlred/eval.hpp"
#include "ltlred/harness.hpp"
#include "ltlred/nnf.hpp"
#include "ltlred/parser.hpp"
#include "ltlred/reduce.hpp"
#include "ltlred/word.hpp"

namespace {

using namespace ltlred;

Variant variant_from(const std::string& name) {
  if (name == "buggy") return Variant::Buggy;
  if (name == "corrected") return Variant::Corrected;
  return Variant::Patched;
}

std::string path_to_string(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

int print_report(const FuzzReport& report, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(report);
    return report_exit_code(report);
  }
  for (const DivergenceRecord& rec : report.divergences) {
    std::cout << "divergence [" << variant_name(rec.variant) << "] " << to_string(rec.original)
              << "  ->  " << to_string(rec.reduced) << "  word: " << to_string(rec.counterexample)
              << "  pivotal: " << to_string(rec.pivotal) << " (buggy=" << rec.pivotal_pe[0]
              << " corrected=" << rec.pivotal_pe[1] << " patched=" << rec.pivotal_pe[2] << ")\n";
  }
  std::cout << report.cases.size() << " formulas, divergences: buggy=" << report.buggy_divergences()
            << " corrected=" << report.corrected_divergences()
            << " patched=" << report.patched_divergences() << "\n";
  return report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL operator reduction via pure-eventuality classification, "
               "with a lasso-word semantic test bench"};
  app.require_subcommand(1);

  std::string variant_name_arg = "buggy";
  std::string formula_text, formula_text2, word_text, corpus_path;
  bool show_trace = false, as_json = false;
  Bounds bounds;
  FuzzConfig fuzz_cfg;
  std::size_t position = 0;

  auto add_variant = [&](CLI::App* cmd) {
    cmd->add_option("--variant", variant_name_arg, "buggy | corrected | patched")
        ->check(CLI::IsMember({"buggy", "corrected", "patched"}))
        ->capture_default_str();
  };
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-prefix", bounds.max_prefix)->capture_default_str();
    cmd->add_option("--max-period", bounds.max_period)->capture_default_str();
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "pure-eventuality membership");
  add_variant(classify_cmd);
  classify_cmd->add_option("formula", formula_text)->required();

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "apply the operator reduction");
  add_variant(reduce_cmd);
  reduce_cmd->add_flag("--trace", show_trace, "print one line per rewrite step");
  reduce_cmd->add_option("formula", formula_text)->required();

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate on an ultimately periodic word");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_cmd->add_option("--word", word_text, "word as 'prefix | period', letters ';'-separated")
      ->required();
  eval_cmd->add_option("--pos", position, "position index")->capture_default_str();

  CLI::App* equiv_cmd = app.add_subcommand("check-equiv", "bounded equivalence check");
  equiv_cmd->add_option("f", formula_text)->required();
  equiv_cmd->add_option("g", formula_text2)->required();
  add_bounds(equiv_cmd);

  CLI::App* lac_cmd = app.add_subcommand("check-lac", "bounded left-append-closure check");
  lac_cmd->add_option("formula", formula_text)->required();
  add_bounds(lac_cmd);
  lac_cmd->add_option("--max-append", bounds.max_append)->capture_default_str();

  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "differential fuzz of the three variants");
  fuzz_cmd->add_option("--seed", fuzz_cfg.seed)->capture_default_str();
  fuzz_cmd->add_option("--count", fuzz_cfg.count)->capture_default_str();
  fuzz_cmd->add_option("--max-depth", fuzz_cfg.max_depth)->capture_default_str();
  fuzz_cmd->add_flag("--json", as_json, "emit the JSON report");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run the checks over a formula file");
  corpus_cmd->add_option("file", corpus_path)->required();
  corpus_cmd->add_flag("--json", as_json, "emit the JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      FormulaPtr f = nnf(parse(formula_text));
      bool pe = is_pure_eventuality(f, variant_from(variant_name_arg));
      std::cout << "pure-eventuality: " << (pe ? "true" : "false") << "\n";
      return 0;
    }
    if (*reduce_cmd) {
      ReduceResult rr = reduce(parse(formula_text), variant_from(variant_name_arg));
      if (show_trace) {
        if (rr.trace.normalized)
          std::cout << "nnf " << to_string(rr.trace.original) << " => "
                    << to_string(rr.trace.initial) << "\n";
        for (const ReductionStep& s : rr.trace.steps)
          std::cout << rule_name(s.rule) << " " << path_to_string(s.path) << " "
                    << to_string(s.before) << " => " << to_string(s.after) << "\n";
      }
      std::cout << to_string(rr.formula) << "\n";
      return 0;
    }
    if (*eval_cmd) {
      bool v = eval(parse(formula_text), parse_word(word_text), position);
      std::cout << (v ? "true" : "false") << "\n";
      return 0;
    }
    if (*equiv_cmd) {
      Verdict v = equivalent_bounded(parse(formula_text), parse(formula_text2), bounds);
      std::cout << v.describe() << "\n";
      return v.pass ? 0 : 1;
    }
    if (*lac_cmd) {
      Verdict v = left_append_closed_bounded(parse(formula_text), bounds);
      std::cout << v.describe() << "\n";
      return v.pass ? 0 : 1;
    }
    if (*fuzz_cmd) return print_report(fuzz_differential(fuzz_cfg), as_json);
    if (*corpus_cmd) return print_report(run_corpus(corpus_path, bounds), as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotNnfError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WordFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

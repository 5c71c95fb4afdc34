#ifndef CONTMAT_CLI_HPP
#define CONTMAT_CLI_HPP

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "contmat/conjugacy.hpp"
#include "contmat/contfrac.hpp"
#include "contmat/io.hpp"
#include "contmat/mat2.hpp"
#include "contmat/oracle.hpp"
#include "contmat/presentation.hpp"

namespace contmat::cli {

struct Emitter {
  std::ostream& out;
  bool structured;

  void record(const std::string& kind, const std::string& payload, const std::string& provenance) {
    if (structured)
      out << "kind=" << kind << ";payload=" << payload << ";provenance=" << provenance << "\n";
    else
      out << payload << "\n";
  }
};

/// Full command dispatch. Exit codes: 0 success (including domain-valid
/// "absent" results), 1 domain error, 2 parse/usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"continuant-matrix decomposition in PSL(2,Z)"};
  app.require_subcommand(1);
  bool structured = false;
  app.add_flag("--structured", structured, "one kind=..;payload=..;provenance=.. record per line");

  std::string word_arg, matrix_arg, matrix_arg2;
  std::size_t cycles_len = 0;
  SearchBounds bounds;

  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-len", bounds.max_len, "maximum word length");
    cmd->add_option("--coeff-bound", bounds.coeff_bound, "maximum |c_i|");
    cmd->add_option("--max-nodes", bounds.max_nodes, "search budget");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a word to its matrix");
  eval->add_option("word", word_arg, "comma-separated coefficients")->required();
  CLI::App* stair = app.add_subcommand("staircase", "presentation (q_1,...,q_k,m,0) of a matrix");
  stair->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  CLI::App* minimal = app.add_subcommand("minimal", "unique minimal presentation of a matrix");
  minimal->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce a staircase word to minimal form");
  reduce_cmd->add_option("word", word_arg, "staircase word")->required();
  CLI::App* quiddity = app.add_subcommand("quiddity", "sign of a quiddity cycle, or none");
  quiddity->add_option("word", word_arg, "comma-separated coefficients")->required();
  CLI::App* proper = app.add_subcommand("proper", "check the six properness rules");
  proper->add_option("word", word_arg, "comma-separated coefficients")->required();
  CLI::App* pure = app.add_subcommand("pure", "check properness and absence of -2");
  pure->add_option("word", word_arg, "comma-separated coefficients")->required();
  CLI::App* canonical = app.add_subcommand("canonical", "canonical conjugacy-class form");
  canonical->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  CLI::App* conjugate = app.add_subcommand("conjugate", "decide conjugacy of two matrices");
  conjugate->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  conjugate->add_option("other", matrix_arg2, "a,b,c,d")->required();
  CLI::App* osw = app.add_subcommand("oracle-shortest", "brute-force shortest words for a matrix");
  osw->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  add_bounds(osw);
  CLI::App* ocy = app.add_subcommand("oracle-cycles", "enumerate quiddity cycles of a length");
  ocy->add_option("length", cycles_len, "cycle length")->required();
  ocy->add_option("--coeff-bound", bounds.coeff_bound, "maximum |c_i|");
  CLI::App* ocj = app.add_subcommand("oracle-conjugate", "bounded brute-force conjugacy search");
  ocj->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  ocj->add_option("other", matrix_arg2, "a,b,c,d")->required();
  add_bounds(ocj);

  try {
    std::vector<const char*> argv;
    argv.push_back("contmat");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Emitter emit{out, structured};
  try {
    if (*eval) {
      emit.record("matrix", render_matrix(continuant(parse_word(word_arg))), "eval");
    } else if (*stair) {
      emit.record("word", render_word(staircase(parse_matrix(matrix_arg))), "staircase");
    } else if (*minimal) {
      emit.record("word", render_word(minimal_presentation(parse_matrix(matrix_arg))), "minimal");
    } else if (*reduce_cmd) {
      emit.record("word", render_word(reduce(parse_word(word_arg))), "reduce");
    } else if (*quiddity) {
      auto sign = quiddity_sign(parse_word(word_arg));
      emit.record("sign", sign ? (*sign > 0 ? "+1" : "-1") : "none", "quiddity");
    } else if (*proper) {
      ProperReport rep = check_proper(parse_word(word_arg));
      emit.record("report", rep.proper ? "true" : "false (rule " + std::to_string(rep.rule) + ")",
                  "proper");
    } else if (*pure) {
      emit.record("report", is_pure(parse_word(word_arg)) ? "true" : "false", "pure");
    } else if (*canonical) {
      emit.record("classform", render_classform(canonical_class(parse_matrix(matrix_arg))),
                  "canonical");
    } else if (*conjugate) {
      ConjugacyAnswer ans = are_conjugate(parse_matrix(matrix_arg), parse_matrix(matrix_arg2));
      emit.record("report",
                  ans == ConjugacyAnswer::Yes ? "yes"
                  : ans == ConjugacyAnswer::No ? "no"
                                               : "unresolved",
                  "conjugate");
    } else if (*osw) {
      auto words = shortest_words(parse_matrix(matrix_arg), bounds);
      if (words.empty()) emit.record("report", "none within bounds", "oracle-shortest");
      for (const Word& w : words) emit.record("word", render_word(w), "oracle-shortest");
    } else if (*ocy) {
      for (const auto& [w, sign] : enumerate_quiddity_cycles(cycles_len, bounds.coeff_bound))
        emit.record("report", render_word(w) + " " + (sign > 0 ? "+1" : "-1"), "oracle-cycles");
    } else if (*ocj) {
      auto res = oracle_conjugate(parse_matrix(matrix_arg), parse_matrix(matrix_arg2), bounds);
      if (res.result == OracleConjugacy::Yes)
        emit.record("report", "yes witness=" + render_word(res.conjugator), "oracle-conjugate");
      else
        emit.record("report",
                    res.result == OracleConjugacy::NoWithinBounds ? "no-within-bounds" : "unresolved",
                    "oracle-conjugate");
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace contmat::cli

#endif

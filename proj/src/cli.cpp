#include "tribraid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include "tribraid/classify.hpp"
#include "tribraid/conjugacy.hpp"
#include "tribraid/harness.hpp"
#include "tribraid/jones.hpp"
#include "tribraid/normal_form.hpp"
#include "tribraid/serialize.hpp"

namespace tribraid {

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for closed 3-braids", "tribraid"};
  app.require_subcommand(1);

  std::string word1;
  std::string word2;
  bool json = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "delta-power normal form of a braid word");
  normalize_cmd->add_option("word", word1, "braid word, e.g. \"a1^-2 a2^-3 a1^5 a2\"")->required();
  normalize_cmd->add_flag("--json", json, "emit JSON");

  auto* symbol_cmd = app.add_subcommand("symbol", "canonical conjugacy-class symbol");
  symbol_cmd->add_option("word", word1, "braid word")->required();
  symbol_cmd->add_flag("--json", json, "emit JSON");

  auto* conjugate_cmd = app.add_subcommand("conjugate", "decide whether two braids are conjugate");
  conjugate_cmd->add_option("word1", word1, "first braid word")->required();
  conjugate_cmd->add_option("word2", word2, "second braid word")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify the closed braid (JSON)");
  classify_cmd->add_option("word", word1, "braid word")->required();

  auto* invertible_cmd = app.add_subcommand("invertible", "invertibility of a braid-index-3 link (JSON)");
  invertible_cmd->add_option("word", word1, "braid word")->required();

  auto* bennequin_cmd = app.add_subcommand("bennequin", "Bennequin number of the closed braid");
  bennequin_cmd->add_option("word", word1, "braid word")->required();

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of the closed braid");
  jones_cmd->add_option("word", word1, "braid word")->required();
  jones_cmd->add_flag("--json", json, "emit [2*exponent, coefficient] pairs");

  int torus_r = 0;
  int torus_s = 0;
  bool raw = false;
  auto* torus_cmd = app.add_subcommand("torus-jones", "Jones polynomial of the (r,s) torus link from the closed formula");
  torus_cmd->add_option("r", torus_r, "r >= 2")->required();
  torus_cmd->add_option("s", torus_s, "s >= 2")->required();
  torus_cmd->add_flag("--json", json, "emit [2*exponent, coefficient] pairs");
  torus_cmd->add_flag("--raw", raw, "keep the formula's sqrt(t) sign convention");

  int max_cb = 12;
  std::string format = "json";
  auto* table3_cmd = app.add_subcommand("table3", "enumerate non-transversally-simple flype pairs");
  table3_cmd->add_option("--max-cb", max_cb, "maximal braid crossing number")->capture_default_str();
  table3_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  int range = 8;
  int max_param = 5;
  bool verbose = false;
  auto* verify_cmd = app.add_subcommand("verify-tables", "check the tabulated class symbols against computation");
  verify_cmd->add_option("--range", range, "k ranges over [-K, K] for the braid-index table")->capture_default_str();
  verify_cmd->add_option("--max-param", max_param, "p, q, r bound for the flype table")->capture_default_str();
  verify_cmd->add_flag("--verbose", verbose, "list every row, not only mismatches");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (normalize_cmd->parsed()) {
      const NormalForm nf = normalize(parse_word(word1));
      out << (json ? to_json(nf).dump() : format_normal_form(nf)) << '\n';
    } else if (symbol_cmd->parsed()) {
      const XuSymbol s = xu_invariant(parse_word(word1));
      out << (json ? to_json(s).dump() : format_symbol(s)) << '\n';
    } else if (conjugate_cmd->parsed()) {
      const bool c = are_conjugate(parse_word(word1), parse_word(word2));
      out << "conjugate: " << (c ? "true" : "false") << '\n';
    } else if (classify_cmd->parsed()) {
      out << to_json(classify(parse_word(word1))).dump(2) << '\n';
    } else if (invertible_cmd->parsed()) {
      out << to_json(is_invertible(parse_word(word1))).dump(2) << '\n';
    } else if (bennequin_cmd->parsed()) {
      out << bennequin(parse_word(word1)) << '\n';
    } else if (jones_cmd->parsed()) {
      const LaurentPoly v = jones_closure(parse_word(word1));
      out << (json ? polynomial_to_json(v).dump() : v.str()) << '\n';
    } else if (torus_cmd->parsed()) {
      const LaurentPoly v = raw ? torus_jones_formula(torus_r, torus_s) : torus_jones(torus_r, torus_s);
      out << (json ? polynomial_to_json(v).dump() : v.str()) << '\n';
    } else if (table3_cmd->parsed()) {
      const auto rows = enumerate_table3(max_cb);
      if (format == "csv") out << table3_csv(rows);
      else out << table3_json(rows).dump(2) << '\n';
    } else if (verify_cmd->parsed()) {
      const auto t1 = verify_table1(-range, range);
      const auto t2 = verify_table2(max_param);
      out << format_report(t1, verbose) << format_report(t2, verbose);
      if (t1.unexpected() + t2.unexpected() > 0) return kExitRefused;
    }
  } catch (const ParseError& e) {
    err << "tribraid: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "tribraid: " << e.what() << '\n';
    return kExitRefused;
  }
  return kExitOk;
}

}  // namespace tribraid

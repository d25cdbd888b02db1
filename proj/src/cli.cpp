#include "eulersum/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "eulersum/closed_forms.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/golden.hpp"
#include "eulersum/oracle.hpp"
#include "json.hpp"

namespace eulersum::cli {

void CliConfig::require_valid() const {
  if (digits < 15) throw ParameterError("--digits must be >= 15");
  if (tolerance_exponent >= digits) throw ParameterError("--tolerance must be smaller than --digits");
  if (tolerance_exponent < 1) throw ParameterError("--tolerance must be >= 1");
}

namespace {

using nlohmann::json;
using oracle::Kind;

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParameterError("invalid integer for " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "1..4", "2", "1,3..5"
std::vector<int> parse_int_range(const std::string& spec, const std::string& what) {
  std::vector<int> out;
  for (const auto& item : split(spec, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item, what));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots), what);
    const int hi = parse_int(item.substr(dots + 2), what);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& spec, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& item : split(spec, ',')) {
    if (item.find("..") != std::string::npos) {
      for (int v : parse_int_range(item, what)) out.emplace_back(v);
      continue;
    }
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw ParameterError("invalid rational for " + what + ": '" + item + "'");
    }
  }
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "latex") return Format::latex;
  if (s == "json") return Format::json;
  throw ParameterError("unknown format '" + s + "'");
}

std::string params_label(Kind kind, const EulerSumParams& p) {
  if (kind == Kind::eq3 || kind == Kind::lemma1) {
    return oracle::kind_name(kind) + "(" + std::to_string(p.q) + "," + std::to_string(p.n) + ")";
  }
  return oracle::kind_name(kind) + "(" + std::to_string(p.p) + "," + std::to_string(p.q) + "," + std::to_string(p.n) + ")";
}

struct Options {
  int digits = 40;
  int tolerance = 20;
  std::string format = "plain";
  std::vector<std::string> simplify;
  bool raw = false;

  CliConfig config() const {
    CliConfig c;
    c.digits = digits;
    c.tolerance_exponent = tolerance;
    c.format = parse_format(format);
    if (raw) c.simplify = SimplifyFlags::none();
    for (const auto& s : simplify) {
      if (s == "even_zeta") {
        c.simplify.even_zeta = true;
      } else if (s == "special_points") {
        c.simplify.special_points = true;
      } else if (s == "catalan") {
        c.simplify.catalan = true;
        c.simplify.special_points = true;
      } else {
        throw ParameterError("unknown --simplify flag '" + s + "'");
      }
    }
    c.require_valid();
    return c;
  }
};

int cmd_eval(const Options& opts, const std::string& kind_name, const std::vector<std::string>& args,
             std::ostream& out) {
  const CliConfig cfg = opts.config();
  const Kind kind = oracle::parse_kind(kind_name);
  EulerSumParams params;
  if (kind == Kind::eq3 || kind == Kind::lemma1) {
    if (args.size() != 2) throw ParameterError(kind_name + " takes two integers: q n");
    params = {0, parse_int(args[0], "q"), parse_int(args[1], "n")};
    if (params.q < 1 || params.n < 1) throw ParameterError("q and n must be >= 1");
  } else {
    if (args.size() != 3) throw ParameterError(kind_name + " takes three integers: p q n");
    params = {parse_int(args[0], "p"), parse_int(args[1], "q"), parse_int(args[2], "n")};
  }
  const ConstExpr expr = simplify(build_closed(kind, params), cfg.simplify);
  const BigFloat value = eval_numeric(expr, Precision(cfg.digits));
  const std::string value_str = to_string(value, cfg.digits);
  if (cfg.format == Format::json) {
    json doc = json::parse(render(expr, Format::json));
    doc["kind"] = oracle::kind_name(kind);
    doc["p"] = params.p;
    doc["q"] = params.q;
    doc["n"] = params.n;
    doc["value"] = value_str;
    out << doc.dump() << "\n";
  } else {
    out << render(expr, cfg.format) << "\n" << value_str << "\n";
  }
  return kExitOk;
}

json report_row(const oracle::VerificationReport& r, int digits) {
  json row;
  row["kind"] = r.kind;
  row["p"] = r.params.p;
  row["q"] = r.params.q;
  row["n"] = r.params.n;
  row["closed"] = to_string(r.closed_value, digits);
  row["oracle"] = to_string(r.oracle_value, digits);
  row["abs_error"] = to_string(r.abs_error, 3);
  row["passed"] = r.passed;
  return row;
}

int cmd_verify(const Options& opts, const std::string& kind_name, const std::string& p_spec,
               const std::string& q_spec, const std::string& n_spec, const std::string& k_spec, std::ostream& out,
               std::ostream& err) {
  const CliConfig cfg = opts.config();
  const Precision prec(cfg.digits);
  const oracle::OracleConfig ocfg = oracle::OracleConfig::for_precision(prec);
  const BigFloat tol = pow10(-cfg.tolerance_exponent, prec.working_bits());

  std::vector<oracle::VerificationReport> rows;
  std::vector<std::string> failures;
  auto run_row = [&](const std::string& label, auto&& fn) {
    try {
      rows.push_back(fn());
    } catch (const ConvergenceError& e) {
      failures.push_back(label + ": " + e.what());
    }
  };

  const std::vector<int> ps = parse_int_range(p_spec, "--p");
  const std::vector<int> qs = parse_int_range(q_spec, "--q");
  if (kind_name == "lemma2") {
    const std::vector<Rational> ns = parse_rational_list(n_spec, "--n");
    const std::vector<int> ks = parse_int_range(k_spec, "--k");
    for (int p : ps) {
      for (int q : qs) {
        for (const auto& n : ns) {
          for (int k : ks) {
            const LemmaDerivativeParams lp{p, q, n, k};
            if (p < 1 || q < 1 || k < 1 || n.sign() <= 0) continue;
            run_row(lp.str(), [&] { return oracle::verify_lemma2(lp, ocfg, tol); });
          }
        }
      }
    }
  } else {
    const Kind kind = oracle::parse_kind(kind_name);
    const std::vector<int> ns = parse_int_range(n_spec, "--n");
    const bool two_params = kind == Kind::eq3 || kind == Kind::lemma1;
    for (int p : two_params ? std::vector<int>{0} : ps) {
      for (int q : qs) {
        for (int n : ns) {
          const EulerSumParams params{p, q, n};
          if (!oracle::valid_for(kind, params)) continue;
          run_row(params_label(kind, params), [&] { return oracle::verify(kind, params, ocfg, tol); });
        }
      }
    }
  }

  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.passed ? 1 : 0;
  const bool ok = passed == rows.size() && failures.empty();

  if (cfg.format == Format::json) {
    json doc;
    doc["rows"] = json::array();
    for (const auto& r : rows) doc["rows"].push_back(report_row(r, cfg.digits));
    if (!failures.empty()) doc["errors"] = failures;
    out << doc.dump() << "\n";
  } else {
    const int width = std::min(cfg.digits, 25) + 4;
    out << std::left << std::setw(34) << "case" << std::setw(width) << "closed" << std::setw(width) << "oracle"
        << std::setw(12) << "abs_error"
        << "status\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(34) << r.label << std::setw(width) << to_string(r.closed_value, width - 4)
          << std::setw(width) << to_string(r.oracle_value, width - 4) << std::setw(12) << to_string(r.abs_error, 3)
          << (r.passed ? "pass" : "FAIL") << "\n";
    }
    out << passed << "/" << rows.size() << " passed\n";
  }
  for (const auto& f : failures) err << "error: " << f << "\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_examples(const Options& opts, std::ostream& out) {
  const CliConfig cfg = opts.config();
  const Precision prec(cfg.digits);
  const BigFloat tol = pow10(-cfg.tolerance_exponent, prec.working_bits());
  std::size_t passed = 0;
  json doc;
  doc["rows"] = json::array();
  for (const auto& g : golden_examples()) {
    const ConstExpr built = build_closed(g.kind, g.params);
    const ConstExpr shown = simplify(built, cfg.simplify);
    const BigFloat value = eval_numeric(built, prec);
    const BigFloat reference = eval_numeric(g.expected, prec);
    const BigFloat diff = abs(value - reference);
    const bool same_terms =
        simplify(built, SimplifyFlags::all()) == simplify(g.expected, SimplifyFlags::all());
    const bool ok = diff < tol && same_terms;
    passed += ok ? 1 : 0;
    const std::string label = params_label(g.kind, g.params);
    if (cfg.format == Format::json) {
      json row;
      row["kind"] = oracle::kind_name(g.kind);
      row["p"] = g.params.p;
      row["q"] = g.params.q;
      row["n"] = g.params.n;
      row["expr"] = json::parse(render(shown, Format::json));
      row["closed"] = to_string(value, cfg.digits);
      row["oracle"] = to_string(reference, cfg.digits);
      row["abs_error"] = to_string(diff, 3);
      row["terms_match"] = same_terms;
      row["passed"] = ok;
      doc["rows"].push_back(row);
    } else {
      out << label << " = " << render(shown, cfg.format) << "\n";
      out << "  value     " << to_string(value, cfg.digits) << "\n";
      out << "  reference " << to_string(reference, cfg.digits) << "\n";
      out << "  |diff| " << to_string(diff, 3) << ", terms " << (same_terms ? "match" : "differ") << ": "
          << (ok ? "pass" : "FAIL") << "\n";
    }
  }
  const std::size_t total = golden_examples().size();
  if (cfg.format == Format::json) {
    out << doc.dump() << "\n";
  } else {
    out << passed << "/" << total << " passed\n";
  }
  return passed == total ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed forms and brute-force checks for Euler sums with rational harmonic arguments", "eulersum"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  app.add_option("--digits", opts.digits, "target decimal digits")->capture_default_str();
  app.add_option("--tolerance", opts.tolerance, "pass threshold 10^-N")->capture_default_str();
  app.add_option("--format", opts.format, "plain, latex or json")->capture_default_str();
  app.add_option("--simplify", opts.simplify, "extra simplifications: even_zeta, special_points, catalan")
      ->delimiter(',');
  app.add_flag("--raw", opts.raw, "disable the default simplifications");

  std::string eval_kind;
  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "print a closed form and its value");
  eval->add_option("kind", eval_kind, "S, T, A, B, eq3 or lemma1")->required();
  eval->add_option("args", eval_args, "p q n (q n for eq3 and lemma1)")->required();

  std::string verify_kind;
  std::string p_spec = "1..3";
  std::string q_spec = "1..4";
  std::string n_spec = "1..3";
  std::string k_spec = "1,2";
  auto* verify = app.add_subcommand("verify", "compare closed forms with the oracles over a grid");
  verify->add_option("kind", verify_kind, "S, T, A, B, eq3, lemma1 or lemma2")->required();
  verify->add_option("--p", p_spec, "range such as 1..5")->capture_default_str();
  verify->add_option("--q", q_spec, "range such as 2..6")->capture_default_str();
  verify->add_option("--n", n_spec, "range; lemma2 also takes rationals such as 3/2")->capture_default_str();
  verify->add_option("--k", k_spec, "k values for lemma2")->capture_default_str();

  auto* examples = app.add_subcommand("examples", "reproduce the six reference evaluations");

  std::vector<std::string> argv_storage;
  argv_storage.emplace_back("eulersum");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidParameters;
  }

  try {
    if (eval->parsed()) return cmd_eval(opts, eval_kind, eval_args, out);
    if (verify->parsed()) return cmd_verify(opts, verify_kind, p_spec, q_spec, n_spec, k_spec, out, err);
    if (examples->parsed()) return cmd_examples(opts, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParameters;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParameters;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInvalidParameters;
}

}  // namespace eulersum::cli

// Command-line front end. Exit codes: 0 ok, 1 verified negative, 2 input
// error, 3 internal invariant breach.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "edalg/acceptance.hpp"
#include "edalg/fixtures.hpp"
#include "edalg/json_io.hpp"
#include "edalg/lie.hpp"
#include "edalg/mould.hpp"
#include "edalg/relation.hpp"

using namespace edalg;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBreach = 3 };

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Letter parse_on(const std::string& s) {
  if (s.size() != 1) throw InputError("--on expects a single letter");
  return letter_from_char(s[0]);
}

struct RelationInput {
  std::string label;
  int d = 3;
  BracketExpr expr;
};

RelationInput relation_input(const std::string& fixture_name, const std::string& periods_file, int d, int weight) {
  RelationInput in;
  if (!fixture_name.empty()) {
    const Fixture& f = fixture(fixture_name);
    in.label = f.name;
    in.d = f.periods ? f.periods->d : 3;
    in.expr = fixture_expression(f);
    return in;
  }
  PeriodVector pv = period_vector_from_json(read_json_file(periods_file));
  if (d) pv.d = d;
  if (weight) pv.weight = weight;
  if (pv.weight == 0) throw InputError("--weight is required with --periods");
  in.label = pv.label.empty() ? periods_file : pv.label;
  in.d = pv.d;
  in.expr = pollack_combination(pv);
  return in;
}

int cmd_eval(const std::string& expr, const std::string& on, const std::string& family) {
  const Family fam = family == "eps-tilde" ? Family::epsilon_tilde : Family::epsilon;
  const Derivation d = eval_bracket_expr(parse_bracket_expr(expr), fam);
  const Letter l = parse_on(on);
  if (!d.alphabet().contains(l)) throw InputError("letter " + on + " is not in the alphabet " + d.alphabet().to_string());
  emit(to_json(d.image(l)));
  return kOk;
}

int cmd_check_relation(const RelationInput& in) {
  if (in.d == 2) {
    std::cerr << "unimplemented: depth-2 theta3 membership (R_Delta,2 is shipped as data only)\n";
    return kInput;
  }
  const Derivation d = eval_bracket_expr(in.expr, Family::epsilon);
  const auto cert = theta3_membership_depth3(d);
  Json out = {{"relation", in.label}, {"member", cert.has_value()}};
  if (cert) out["certificate"] = to_json(*cert);
  emit(out);
  return cert ? kOk : kNegative;
}

int cmd_lift(const BracketExpr& expr, const std::string& label) {
  try {
    const RelationCertificate cert = lift_to_depth3(expr);
    if (!verify(cert)) throw InvariantBreach("lift certificate does not re-verify");
    emit({{"relation", label}, {"lifted", true}, {"certificate", to_json(cert)}});
    return kOk;
  } catch (const PipelineError& e) {
    emit({{"relation", label}, {"lifted", false}, {"stage", e.stage()}, {"error", e.what()}, {"residual", to_json(e.residual())}});
    return kNegative;
  }
}

int cmd_dims(int from, int to, const std::string& format) {
  if (from < 3 || to < from) throw InputError("need 3 <= --from <= --to");
  Json rows = Json::array();
  std::ostringstream tsv;
  tsv << "n\tcomputed\tformula\n";
  bool agree = true;
  for (int n = from + (from % 2 == 0); n <= to; n += 2) {
    const std::size_t c = bialternal_dimension(n), f = formula_dimension(n);
    agree = agree && c == f;
    rows.push_back({{"n", n}, {"computed", c}, {"formula", f}});
    tsv << n << '\t' << c << '\t' << f << '\n';
  }
  if (format == "json") emit(rows);
  else std::cout << tsv.str();
  return agree ? kOk : kNegative;
}

CommPoly mould_input(const Json& j, int depth) {
  if (j.is_array()) {
    const NCPoly f = ncpoly_from_json(j);
    return depth >= 0 ? mi(f, static_cast<std::size_t>(depth)) : mi(f);
  }
  return commpoly_from_json(j);
}

int cmd_mould(const std::string& op, const std::string& file, int depth) {
  const Json j = read_json_file(file);
  if (op == "mi") {
    if (!j.is_array()) throw InputError("mi expects a noncommutative polynomial (JSON array)");
    emit(to_json(mould_input(j, depth)));
    return kOk;
  }
  const CommPoly F = mould_input(j, depth);
  const bool holds = op == "alternal" ? is_alternal(F) : is_prealternal(F);
  emit({{"op", op}, {"arity", F.arity()}, {"holds", holds}});
  return holds ? kOk : kNegative;
}

int cmd_appendix(int max_index) {
  if (max_index < 4 || max_index % 2) throw InputError("--max-index must be even and >= 4");
  Json failures = Json::array();
  int checks = 0, skipped = 0;
  const CommPoly unit = CommPoly::constant(0, 1);
  // The word route needs the image weight to fit in a packed word.
  auto fits = [](int total) { return static_cast<std::size_t>(total + 1) <= Word::kMaxLength; };
  for (int k = 4; k <= max_index; k += 2) {
    ++checks;
    if (appendix_P(k) != hat_epsilon(k, unit)) failures.push_back({{"form", "P"}, {"k", k}});
    for (int j = 4; j <= max_index; j += 2) {
      const CommPoly q = appendix_Q(j, k);
      ++checks;
      if (q != hat_epsilon(j, appendix_P(k))) failures.push_back({{"form", "Q"}, {"j", j}, {"k", k}});
      for (int i = 4; i <= max_index; i += 2) {
        if (!fits(i + j + k)) {
          ++skipped;
        } else {
          ++checks;
          if (appendix_R(i, j, k) != hat_epsilon(i, q)) failures.push_back({{"form", "R"}, {"i", i}, {"j", j}, {"k", k}});
        }
        ++checks;
        if (!appendix_identity_residual(appendix_S(i, j, k)).is_zero())
          failures.push_back({{"form", "S-identity"}, {"i", i}, {"j", j}, {"k", k}});
      }
    }
  }
  emit({{"max_index", max_index}, {"checks", checks}, {"oracle_skipped", skipped}, {"failures", failures}});
  return failures.empty() ? kOk : kNegative;
}

int cmd_acceptance(const std::vector<std::string>& only, std::uint64_t seed, const std::string& json_path) {
  AcceptanceOptions opt;
  opt.only = only;
  opt.seed = seed;
  const AcceptanceReport report = run_acceptance_suite(opt);
  for (const auto& r : report.results) {
    std::cout << r.id << " " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " - " << r.detail << "\n";
    std::cerr << r.id << " took " << r.seconds << " s\n";
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw InputError("cannot write " + json_path);
    out << to_json(report).dump(2) << "\n";
  }
  return report.all_passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the elliptic derivation algebra"};
  app.require_subcommand(1);

  std::string expr, on = "a", family = "eps", fixture_name, periods_file, format = "tsv", op, input, json_path;
  int d = 0, weight = 0, from = 9, to = 19, depth = -1, max_index = 10;
  std::vector<std::string> only;
  std::uint64_t seed = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate a bracket expression on a generator");
  eval->add_option("--expr", expr, "Bracket expression, e.g. [e4,E0^1.e12]")->required();
  eval->add_option("--on", on, "Generator to evaluate on")->check(CLI::IsMember({"a", "b", "c"}));
  eval->add_option("--family", family, "Derivation family")->check(CLI::IsMember({"eps", "eps-tilde"}));

  auto* check = app.add_subcommand("check-relation", "Decide theta3 membership of a relation");
  auto* cf = check->add_option("--fixture", fixture_name, "Embedded fixture name");
  auto* cp = check->add_option("--periods", periods_file, "JSON period vector file");
  cf->excludes(cp);
  check->add_option("--d", d, "Depth d of h^d_{p,q}");
  check->add_option("--weight", weight, "Weight n with p + q = n - 4");

  auto* lift = app.add_subcommand("lift", "Lift a relation to a combination of [e_i,[e_j,e_k]]");
  auto* lf = lift->add_option("--fixture", fixture_name, "Embedded fixture name");
  auto* le = lift->add_option("--expr", expr, "Bracket expression");
  lf->excludes(le);

  auto* dims = app.add_subcommand("dims", "Bialternal dimensions in depth 3");
  dims->add_option("--from", from, "First weight");
  dims->add_option("--to", to, "Last weight");
  dims->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

  auto* mould = app.add_subcommand("mould", "Mould operations on a JSON polynomial");
  mould->add_option("--op", op, "Operation")->required()->check(CLI::IsMember({"mi", "alternal", "prealternal"}));
  mould->add_option("--input", input, "Polynomial JSON file")->required();
  mould->add_option("--depth", depth, "Depth r (omit for the unique component)");

  auto* appendix = app.add_subcommand("appendix-check", "Check the closed forms P, Q, R, S");
  appendix->add_option("--max-index", max_index, "Largest even index");

  auto* accept = app.add_subcommand("acceptance", "Run the acceptance suite");
  accept->add_option("--only", only, "Criterion ids or names");
  accept->add_option("--seed", seed, "Seed for the randomized checks");
  accept->add_option("--json", json_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*eval) return cmd_eval(expr, on, family);
    if (*check) {
      if (fixture_name.empty() && periods_file.empty()) throw InputError("give --fixture or --periods");
      return cmd_check_relation(relation_input(fixture_name, periods_file, d, weight));
    }
    if (*lift) {
      if (!fixture_name.empty()) return cmd_lift(fixture_expression(fixture(fixture_name)), fixture_name);
      if (expr.empty()) throw InputError("give --fixture or --expr");
      return cmd_lift(parse_bracket_expr(expr), expr);
    }
    if (*dims) return cmd_dims(from, to, format);
    if (*mould) return cmd_mould(op, input, depth);
    if (*appendix) return cmd_appendix(max_index);
    if (*accept) return cmd_acceptance(only, seed, json_path);
  } catch (const InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return kBreach;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kBreach;
  }
  return kInput;
}

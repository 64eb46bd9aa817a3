#include "edalg/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>

#include "edalg/fixtures.hpp"
#include "edalg/generators.hpp"
#include "edalg/lie.hpp"
#include "edalg/mould.hpp"

namespace edalg {

namespace {

const NCPoly& A() {
  static const NCPoly p = NCPoly::letter(Letter::a);
  return p;
}
const NCPoly& B() {
  static const NCPoly p = NCPoly::letter(Letter::b);
  return p;
}

// Short printable form of a residual for reports.
Json residual_summary(const NCPoly& r) {
  std::string s = r.to_string();
  if (s.size() > 160) s = s.substr(0, 160) + " ...";
  return {{"terms", r.size()}, {"poly", s}};
}

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& o) : opt_(o) {}

  CriterionResult run(const std::string& id) {
    CriterionResult r;
    r.id = id;
    try {
      if (id == "A1") eps_identities(r);
      else if (id == "A2") commutation(r);
      else if (id == "A3") mould_bridge(r);
      else if (id == "A4") appendix(r);
      else if (id == "A5") prealternality(r);
      else if (id == "A6") delta_d3(r);
      else if (id == "A7") dims(r);
      else if (id == "A8") push_structure(r);
      else if (id == "A9") round_trips(r);
    } catch (const InvariantBreach&) {
      throw;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    return r;
  }

 private:
  const Derivation& eps(int k) {
    auto it = eps_.find(k);
    if (it == eps_.end()) it = eps_.emplace(k, opt_.epsilon_provider(k)).first;
    return it->second;
  }

  // Seed per criterion so that --only gives the same draws as a full run.
  Gen gen(int salt) { return Gen(opt_.seed * 1000003ULL + static_cast<std::uint64_t>(salt)); }

  void eps_identities(CriterionResult& r) {
    const NCPoly ab = lie_bracket(A(), B());
    Json failures = Json::array();
    int checks = 0;
    for (int k = 0; k <= 16; k += 2) {
      const NCPoly kill = eps(k).apply(ab);
      ++checks;
      if (!kill.is_zero()) failures.push_back({{"check", "e" + std::to_string(k) + "([a,b])"}, {"residual", residual_summary(kill)}});
      const Derivation comm = der_bracket(eps(2), eps(k));
      ++checks;
      if (!comm.is_zero())
        failures.push_back({{"check", "[e2,e" + std::to_string(k) + "]"},
                            {"residual", residual_summary(comm.image(Letter::a) + comm.image(Letter::b))}});
    }
    r.passed = failures.empty();
    r.data = {{"checks", checks}, {"failures", failures}};
    r.detail = std::to_string(checks - static_cast<int>(failures.size())) + "/" + std::to_string(checks) +
               " identities exact";
  }

  void commutation(CriterionResult& r) {
    Json failures = Json::array();
    int checks = 0;
    for (int k = 2; k <= 12; k += 2) {
      const Derivation t = epsilon_tilde(k);
      for (Letter x : {Letter::a, Letter::b, Letter::c}) {
        ++checks;
        const NCPoly lhs = phi(t.image(x));
        const NCPoly rhs = eps(k).apply(phi(NCPoly::letter(x)));
        if (lhs != rhs)
          failures.push_back({{"index", k}, {"on", std::string(1, to_char(x))}, {"residual", residual_summary(lhs - rhs)}});
      }
    }
    r.passed = failures.empty();
    r.data = {{"checks", checks}, {"failures", failures}};
    r.detail = std::to_string(checks - static_cast<int>(failures.size())) + "/" + std::to_string(checks) +
               " generator images commute with phi";
  }

  void mould_bridge(CriterionResult& r) {
    Gen g = gen(3);
    Json samples = Json::array();
    int ok = 0;
    const int total = 30;
    for (int n = 0; n < total; ++n) {
      NCPoly f;
      int depth = 0, weight = 0;
      while (f.is_zero()) {
        depth = g.uniform(1, 3);
        weight = g.uniform(2 * depth, 12);
        f = g.lie(Alphabet::ac(), static_cast<std::size_t>(weight), static_cast<std::size_t>(depth));
      }
      const bool holds = check_remmig(f, static_cast<std::size_t>(depth));
      ok += holds;
      samples.push_back({{"weight", weight}, {"depth", depth}, {"terms", f.size()}, {"holds", holds}});
    }
    r.passed = ok == total;
    r.data = {{"samples", samples}};
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " random Lie elements over {a,c}";
  }

  void appendix(CriterionResult& r) {
    Json failures = Json::array();
    int checks = 0;
    const CommPoly unit = CommPoly::constant(0, 1);
    const int small[] = {4, 6, 8};
    for (int k : small) {
      ++checks;
      if (appendix_P(k) != hat_epsilon(k, unit)) failures.push_back({{"form", "P"}, {"k", k}});
      for (int j : small) {
        const CommPoly q = appendix_Q(j, k);
        ++checks;
        if (q != hat_epsilon(j, appendix_P(k))) failures.push_back({{"form", "Q"}, {"j", j}, {"k", k}});
        for (int i : small) {
          ++checks;
          const CommPoly diff = appendix_R(i, j, k) - hat_epsilon(i, q);
          if (!diff.is_zero())
            failures.push_back({{"form", "R"}, {"i", i}, {"j", j}, {"k", k}, {"residual_terms", diff.terms().size()}});
        }
      }
    }
    const int large[] = {4, 6, 8, 10};
    int identities = 0;
    for (int i : large)
      for (int j : large)
        for (int k : large) {
          ++checks;
          ++identities;
          const CommPoly res = appendix_identity_residual(appendix_S(i, j, k));
          if (!res.is_zero())
            failures.push_back({{"form", "S-identity"}, {"i", i}, {"j", j}, {"k", k}, {"residual_terms", res.terms().size()}});
        }
    r.passed = failures.empty();
    r.data = {{"checks", checks}, {"identity_triples", identities}, {"failures", failures}};
    r.detail = std::to_string(checks - static_cast<int>(failures.size())) + "/" + std::to_string(checks) +
               " closed forms and identities exact";
  }

  void prealternality(CriterionResult& r) {
    Json failures = Json::array();
    int checks = 0;
    const int idx[] = {4, 6, 8};
    for (int i : idx)
      for (int j : idx)
        for (int k : idx) {
          ++checks;
          const NCPoly x = der_bracket(eps(i), der_bracket(eps(j), eps(k))).image(Letter::a);
          if (!is_prealternal(mi(x, 3, Letter::b))) failures.push_back({{"i", i}, {"j", j}, {"k", k}});
        }
    r.passed = failures.empty();
    r.data = {{"checks", checks}, {"failures", failures}};
    r.detail = std::to_string(checks - static_cast<int>(failures.size())) + "/" + std::to_string(checks) +
               " triple brackets prealternal";
  }

  // The three h^3 elements of weight 16, evaluated once in both families.
  void ensure_h16() {
    if (!h16_.empty()) return;
    for (int p : {2, 4, 6}) {
      const BracketExpr h = h_element(p, 12 - p, 3);
      h16_.emplace(p, std::make_pair(eval_bracket_expr(h, Family::epsilon), eval_bracket_expr(h, Family::epsilon_tilde)));
    }
  }

  std::pair<Derivation, Derivation> combine_h16(const PeriodVector& pv) {
    ensure_h16();
    Derivation d = Derivation::zero(Alphabet::ab()), dt = Derivation::zero(Alphabet::abc());
    for (const auto& [p, c] : pv.coefficients) {
      d += c * h16_.at(p).first;
      dt += c * h16_.at(p).second;
    }
    return {d, dt};
  }

  void delta_d3(CriterionResult& r) {
    const Fixture& fx = fixture("delta-d3");
    auto [d, dt] = combine_h16(*fx.periods);
    const NCPoly target = d.image(Letter::a);

    const auto theta = theta3_membership_depth3(d);
    const bool a_ok = theta && verify(*theta);
    if (theta) certificates_.push_back(*theta);

    bool b_ok = false;
    Json lift_json;
    try {
      const RelationCertificate lift = lift_to_depth3(d, dt);
      b_ok = verify(lift);
      certificates_.push_back(lift);
      Json coeffs = Json::object();
      for (std::size_t n = 0; n < lift.indices.size(); ++n)
        if (lift.coefficients[n] != 0) coeffs[lift.labels[n]] = to_string(lift.coefficients[n]);
      lift_json = {{"coefficients", coeffs}, {"nullspace_dim", lift.nullspace_dim}};
    } catch (const PipelineError& e) {
      lift_json = {{"failed_stage", e.stage()}, {"error", e.what()}, {"residual", residual_summary(e.residual())}};
    }

    const bool e8e2_zero = der_bracket(epsilon(8), epsilon(2)).is_zero();
    const NCPoly literal = eval_bracket_expr(fixture_expression(fixture("stated-lift")), Family::epsilon).image(Letter::a);
    const NCPoly reread =
        eval_bracket_expr(parse_bracket_expr("-345/8*[e6,[e6,e4]] + 231/20*[e4,[e8,e4]]"), Family::epsilon)
            .image(Letter::a);
    const bool literal_match = literal == target;
    const bool reread_match = reread == target;

    Json eisenstein;
    try {
      auto [ed, edt] = combine_h16(*fixture("eisenstein-e12-d3").periods);
      lift_to_depth3(ed, edt);
      eisenstein = {{"outcome", "lifted (unexpected)"}};
    } catch (const PipelineError& e) {
      eisenstein = {{"outcome", "expected failure"}, {"stage", e.stage()}};
    }

    r.passed = a_ok && b_ok;
    r.data = {{"theta3_member", a_ok},
              {"theta3_nullspace_dim", theta ? theta->nullspace_dim : 0},
              {"lift_verified", b_ok},
              {"lift", lift_json},
              {"e8_e2_vanishes", e8e2_zero},
              {"stated_lift_match", literal_match},
              {"stated_lift_e4_for_e2_match", reread_match},
              {"eisenstein_e12", eisenstein}};
    r.detail = std::string("theta3 ") + (a_ok ? "member" : "NOT member") + ", lift " +
               (b_ok ? "verified" : "FAILED") + "; [e8,e2] " + (e8e2_zero ? "= 0" : "!= 0") +
               "; stated right-hand side " + (literal_match ? "matches" : "mismatch") +
               ", with e2 read as e4 " + (reread_match ? "matches" : "mismatch");
  }

  void dims(CriterionResult& r) {
    const std::map<int, std::size_t> expected = {{9, 0}, {11, 1}, {13, 2}, {15, 2}, {17, 4}, {19, 5}};
    Json rows = Json::array();
    bool ok = true;
    std::string line;
    for (const auto& [n, want] : expected) {
      const std::size_t computed = bialternal_dimension(n);
      const std::size_t formula = formula_dimension(n);
      ok = ok && computed == want && formula == want;
      rows.push_back({{"n", n}, {"computed", computed}, {"formula", formula}});
      line += (line.empty() ? "" : ",") + std::to_string(computed);
    }
    r.passed = ok;
    r.data = {{"table", rows}};
    r.detail = "computed (" + line + ") for n = 9..19";
  }

  void push_structure(CriterionResult& r) {
    Gen g = gen(8);
    const NCPoly ab = lie_bracket(A(), B());
    Json failures = Json::array();
    int instances = 0, positives = 0;

    // Combinations of [x_i^0, x_j^1] at a fixed total index.
    for (int total : {12, 14, 16}) {
      std::vector<std::pair<Derivation, Derivation>> parts;
      for (int i = 4; i <= total - 4; i += 2) {
        const BracketExpr e = BracketExpr::bracket(BracketExpr::generator(i, 0), BracketExpr::generator(total - i, 1));
        parts.emplace_back(eval_bracket_expr(e, Family::epsilon), eval_bracket_expr(e, Family::epsilon_tilde));
      }
      const int draws = total == 16 ? 4 : 3;
      for (int n = 0; n < draws; ++n) {
        Derivation d = Derivation::zero(Alphabet::ab()), dt = Derivation::zero(Alphabet::abc());
        for (const auto& [pd, pdt] : parts) {
          const Rational c = g.uniform(0, 3) ? g.small_coeff() : Rational(0);
          d += c * pd;
          dt += c * pdt;
        }
        check_instance(d, dt, ab, failures, instances, positives);
      }
    }
    // Known positive instances: multiples of the weight-16 Delta relation.
    const auto delta = combine_h16(*fixture("delta-d3").periods);
    for (int n = 0; n < 2; ++n) {
      const Rational c = g.small_coeff();
      check_instance(c * delta.first, c * delta.second, ab, failures, instances, positives);
    }
    // Random h^3 combinations at weight 16.
    for (int n = 0; n < 2; ++n) {
      PeriodVector pv;
      pv.d = 3;
      pv.weight = 16;
      for (int p : {2, 4, 6}) pv.coefficients[p] = g.small_coeff();
      const auto hd = combine_h16(pv);
      check_instance(hd.first, hd.second, ab, failures, instances, positives);
    }
    // Triple brackets kill [a,b] and have push-invariant a-images.
    for (int n = 0; n < 3; ++n) {
      const int i = 2 * g.uniform(2, 4), j = 2 * g.uniform(2, 4), k = 2 * g.uniform(2, 4);
      const Derivation d = der_bracket(epsilon(i), der_bracket(epsilon(j), epsilon(k)));
      if (!d.apply(ab).is_zero() || !is_push_invariant(d.image(Letter::a)))
        failures.push_back({{"check", "push"}, {"triple", {i, j, k}}});
    }

    int algebra_checks = 0;
    for (int n = 0; n < 20; ++n) {
      const NCPoly f = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 3)), 4);
      const NCPoly h = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 3)), 4);
      const NCPoly k = g.poly(Alphabet::ab(), static_cast<std::size_t>(g.uniform(1, 2)), 3);
      algebra_checks += 2;
      if (!(lie_bracket(f, h) + lie_bracket(h, f)).is_zero()) failures.push_back({{"check", "antisymmetry"}, {"draw", n}});
      const NCPoly jac = lie_bracket(f, lie_bracket(h, k)) + lie_bracket(h, lie_bracket(k, f)) + lie_bracket(k, lie_bracket(f, h));
      if (!jac.is_zero()) failures.push_back({{"check", "jacobi"}, {"draw", n}});
      const int idx[] = {0, 4, 6};
      const Derivation& d = eps(idx[g.uniform(0, 2)]);
      ++algebra_checks;
      if (d.apply(lie_bracket(f, h)) != lie_bracket(d.apply(f), h) + lie_bracket(f, d.apply(h)))
        failures.push_back({{"check", "leibniz"}, {"draw", n}});
    }
    for (int n = 0; n < 10; ++n) {
      const NCPoly f = g.lie(Alphabet::ac(), static_cast<std::size_t>(g.uniform(2, 5)), 1 + (n % 2));
      const NCPoly h = g.lie(Alphabet::ac(), static_cast<std::size_t>(g.uniform(2, 5)), 1);
      if (f.is_zero() || h.is_zero()) continue;
      ++algebra_checks;
      if (der_bracket(inner_tilde(f), inner_tilde(h)) != inner_tilde(poisson(f, h)))
        failures.push_back({{"check", "poisson-compatibility"}, {"draw", n}});
    }

    r.passed = failures.empty() && instances >= 10 && positives > 0;
    r.data = {{"instances", instances}, {"theta3_members", positives}, {"algebra_checks", algebra_checks}, {"failures", failures}};
    r.detail = std::to_string(instances) + " instances (" + std::to_string(positives) +
               " in theta3), " + std::to_string(algebra_checks) + " algebraic identities, " +
               std::to_string(failures.size()) + " failures";
  }

  void check_instance(const Derivation& d, const Derivation& dt, const NCPoly& ab, Json& failures, int& instances,
                      int& positives) {
    ++instances;
    const NCPoly x = d.image(Letter::a);
    const bool bb = bb_monomial_test(x);
    const bool cacb = cacb_monomial_test(dt.image(Letter::a));
    const bool member = theta3_membership_depth3(d).has_value();
    positives += member;
    if (bb != cacb || cacb != member)
      failures.push_back({{"check", "equivalence"}, {"instance", instances}, {"bb", bb}, {"cacb", cacb}, {"theta3", member}});
    if (!d.apply(ab).is_zero() || !is_push_invariant(x))
      failures.push_back({{"check", "push"}, {"instance", instances}});
  }

  void round_trips(CriterionResult& r) {
    Gen g = gen(9);
    Json failures = Json::array();
    int sec_checks = 0;
    for (int depth = 1; depth <= 3; ++depth)
      for (int weight = depth + 1; weight <= 10; ++weight) {
        const NCPoly f = g.lie(Alphabet::ab(), static_cast<std::size_t>(weight), static_cast<std::size_t>(depth));
        if (f.is_zero()) continue;
        ++sec_checks;
        if (sec(pi_b(f)) != f) failures.push_back({{"check", "sec"}, {"weight", weight}, {"depth", depth}});
      }

    int parse_checks = 0;
    std::vector<BracketExpr> exprs = {parse_bracket_expr("[e4,[e6,e8]]"),
                                      parse_bracket_expr("4*h(2,10,3) - 25*h(4,8,3) + 21*h(6,6,3)"),
                                      parse_bracket_expr("[e4,E0^1.e12]")};
    for (int n = 0; n < 20; ++n) exprs.push_back(g.expr(3));
    for (const auto& e : exprs) {
      ++parse_checks;
      const std::string text = e.to_string();
      const BracketExpr back = parse_bracket_expr(text);
      if (!(back == e) || back.to_string() != text) failures.push_back({{"check", "parse-print"}, {"text", text}});
      if (!(bracket_expr_from_json(to_json(e)) == e)) failures.push_back({{"check", "expr-json"}, {"text", text}});
    }
    for (int n = 0; n < 10; ++n) {
      ++parse_checks;
      const NCPoly f = g.poly(Alphabet::abc(), static_cast<std::size_t>(g.uniform(1, 6)), 5);
      if (ncpoly_from_json(to_json(f)) != f || NCPoly::parse(f.to_string()) != f)
        failures.push_back({{"check", "ncpoly"}, {"poly", f.to_string()}});
      const CommPoly m = mi(f.filter([](Word w) { return !w.alphabet().contains(Letter::c); }), 1, Letter::b);
      if (commpoly_from_json(to_json(m)) != m) failures.push_back({{"check", "commpoly"}});
    }
    for (int k = 0; k <= 8; k += 2) {
      ++parse_checks;
      if (derivation_from_json(to_json(eps(k))) != eps(k) ||
          derivation_from_json(to_json(epsilon_tilde(k))) != epsilon_tilde(k))
        failures.push_back({{"check", "derivation"}, {"index", k}});
    }

    if (certificates_.empty()) {
      auto [d, dt] = combine_h16(*fixture("delta-d3").periods);
      if (auto t = theta3_membership_depth3(d)) certificates_.push_back(*t);
      certificates_.push_back(lift_to_depth3(d, dt));
    }
    int cert_checks = 0;
    for (const auto& c : certificates_) {
      ++cert_checks;
      if (!verify(c) || !verify(certificate_from_json(to_json(c))))
        failures.push_back({{"check", "certificate"}, {"kind", kind_name(c.kind)}});
    }
    r.passed = failures.empty() && cert_checks > 0;
    r.data = {{"sec_checks", sec_checks}, {"parse_checks", parse_checks}, {"certificates", cert_checks}, {"failures", failures}};
    r.detail = std::to_string(sec_checks) + " sections, " + std::to_string(parse_checks) + " parse/serialise, " +
               std::to_string(cert_checks) + " certificates re-verified";
  }

  AcceptanceOptions opt_;
  std::map<int, Derivation> eps_;
  std::map<int, std::pair<Derivation, Derivation>> h16_;
  std::vector<RelationCertificate> certificates_;
};

}  // namespace

bool AcceptanceReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> all = {
      {"A1", "eps-identities"}, {"A2", "commutation"}, {"A3", "mould-bridge"},
      {"A4", "appendix"},       {"A5", "prealternality"}, {"A6", "delta-d3"},
      {"A7", "dims"},           {"A8", "push-structure"}, {"A9", "round-trips"}};
  return all;
}

AcceptanceReport run_acceptance_suite(const AcceptanceOptions& options) {
  std::vector<CriterionInfo> selected;
  for (const auto& c : acceptance_criteria()) {
    const bool wanted = options.only.empty() || std::any_of(options.only.begin(), options.only.end(), [&](const std::string& s) {
                          std::string up = s;
                          std::transform(up.begin(), up.end(), up.begin(), ::toupper);
                          return up == c.id || s == c.name;
                        });
    if (wanted) selected.push_back(c);
  }
  for (const auto& s : options.only) {
    std::string up = s;
    std::transform(up.begin(), up.end(), up.begin(), ::toupper);
    const bool known = std::any_of(acceptance_criteria().begin(), acceptance_criteria().end(),
                                   [&](const CriterionInfo& c) { return up == c.id || s == c.name; });
    if (!known) throw std::invalid_argument("unknown acceptance criterion \"" + s + "\"");
  }
  Suite suite(options);
  AcceptanceReport report;
  for (const auto& c : selected) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = suite.run(c.id);
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(r));
  }
  return report;
}

Json to_json(const AcceptanceReport& report) {
  Json criteria = Json::array();
  for (const auto& r : report.results)
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}});
  return {{"all_passed", report.all_passed()}, {"criteria", criteria}};
}

}  // namespace edalg

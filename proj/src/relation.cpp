#include "edalg/relation.hpp"

#include <unordered_map>

#include "edalg/lie.hpp"
#include "edalg/mould.hpp"

namespace edalg {

namespace {

// Assigns column indices to words in order of first appearance.
class WordIndex {
 public:
  SparseVec vec(const NCPoly& f) {
    std::vector<SparseVec::Entry> e;
    e.reserve(f.size());
    for (const auto& [w, c] : f) e.emplace_back(id(w), c);
    return SparseVec::from_entries(std::move(e));
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::size_t id(Word w) {
    auto [it, inserted] = ids_.try_emplace(w, words_.size());
    if (inserted) words_.push_back(w);
    return it->second;
  }
  std::unordered_map<Word, std::size_t> ids_;
  std::vector<Word> words_;
};

struct SpanSolve {
  SolveResult result;
  std::size_t basis_size = 0;
};

SpanSolve solve_in_span(const NCPoly& target, const std::vector<NCPoly>& basis, const std::string& space) {
  WordIndex index;
  std::vector<SparseVec> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(index.vec(b));
  const SparseVec t = index.vec(target);
  const SparseMat m = from_columns(cols, index.size(), space);
  SpanSolve out{solve(m, t), basis.size()};
  if (!verify(m, t, out.result)) throw InvariantBreach("exact solver produced an unverifiable answer in " + space);
  return out;
}

NCPoly combine(const std::vector<NCPoly>& basis, const std::vector<Rational>& coeffs) {
  NCPolyBuilder acc;
  for (std::size_t i = 0; i < basis.size(); ++i) acc.add(basis[i], coeffs[i]);
  return acc.finish();
}

const NCPoly& letter_poly(Letter l) {
  static const NCPoly a = NCPoly::letter(Letter::a), b = NCPoly::letter(Letter::b), c = NCPoly::letter(Letter::c);
  return l == Letter::a ? a : l == Letter::b ? b : c;
}

std::string triple_label(const char* fmt_open, int i, int j, int k) {
  return "[" + std::string(fmt_open) + std::to_string(i) + ",[" + fmt_open + std::to_string(j) + "," + fmt_open +
         std::to_string(k) + "]]";
}

}  // namespace

BracketExpr pollack_combination(const PeriodVector& pv) {
  if (pv.d < 2) throw std::invalid_argument("period vector: d must be >= 2");
  std::vector<BracketExpr::Term> terms;
  for (const auto& [p, c] : pv.coefficients) {
    const int q = pv.weight - 4 - p;
    if (p < 2 || p % 2 || q < 2 || q % 2)
      throw std::invalid_argument("period vector " + pv.label + ": index p=" + std::to_string(p) +
                                  " gives q=" + std::to_string(q) + "; both must be even and >= 2");
    terms.emplace_back(c, h_element(p, q, pv.d));
  }
  return BracketExpr::sum(std::move(terms));
}

bool bb_monomial_test(const NCPoly& p) {
  for (const auto& [w, c] : p)
    if (!w.empty() && w.front() == Letter::b && w.back() == Letter::b) return false;
  return true;
}

bool cacb_monomial_test(const NCPoly& p) {
  for (const auto& [w, c] : p) {
    if (w.empty() || w.back() != Letter::b) continue;
    bool shape = w.count(Letter::c) == 2 && w.count(Letter::b) == 1 && w.size() >= 3 && w[w.size() - 2] == Letter::c;
    if (shape) return false;
  }
  return true;
}

NCPoly theta3_basis_element(int i, int j, int k) {
  return lie_bracket(alpha(i + 1), lie_bracket(alpha(j + 1), alpha(k + 1)));
}

NCPoly triple_bracket_on_a(int i, int j, int k) {
  return der_bracket(epsilon(i), der_bracket(epsilon(j), epsilon(k))).image(Letter::a);
}

NCPoly poisson_triple(int i, int j, int k) {
  return poisson(alpha_tilde(i), poisson(alpha_tilde(j), alpha_tilde(k)));
}

std::optional<RelationCertificate> theta3_membership_depth3(const Derivation& d) {
  if (d.alphabet() != Alphabet::ab()) throw std::invalid_argument("theta3 membership needs a derivation over {a,b}");
  const NCPoly x = d.image(Letter::a);
  RelationCertificate cert;
  cert.kind = RelationCertificate::Kind::theta3_membership;
  cert.target = x;
  if (x.is_zero()) return cert;
  const Grading g = grading(x);
  if (!g.weight || !g.depth_b) throw std::invalid_argument("theta3 membership: D(a) is not homogeneous");
  if (*g.depth_b != 3) return std::nullopt;
  const int n = static_cast<int>(*g.weight) - 3;
  std::vector<NCPoly> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j < n; ++j) {
      const int k = n - i - j;
      cert.indices.push_back({i, j, k});
      cert.labels.push_back("[a^" + std::to_string(i) + ".b,[a^" + std::to_string(j) + ".b,a^" +
                            std::to_string(k) + ".b]]");
      basis.push_back(theta3_basis_element(i, j, k));
    }
  const SpanSolve s = solve_in_span(x, basis, "theta3");
  const bool member = s.result.feasible;

  const NCPoly ab = lie_bracket(letter_poly(Letter::a), letter_poly(Letter::b));
  if (d.apply(ab).is_zero() && is_push_invariant(x) && bb_monomial_test(x) != member)
    throw InvariantBreach("theta3 membership disagrees with the bb-monomial criterion");

  if (!member) return std::nullopt;
  cert.coefficients = s.result.particular.to_dense(basis.size());
  cert.nullspace_dim = s.result.nullspace.size();
  cert.residual = x - combine(basis, cert.coefficients);
  return cert;
}

NCPoly lazard_decompose(const NCPoly& dtilde) {
  if (dtilde.is_zero()) return {};
  for (const auto& [w, c] : dtilde)
    if (!cacb_monomial_test(NCPoly::monomial(w, c)))
      throw PipelineError("lazard", "monomial " + w.to_string() + " has the forbidden shape (lambda = " +
                                        to_display(c) + ")",
                          NCPoly::monomial(w, c));
  const Grading g = grading(dtilde);
  if (!g.weight || g.depth_b != std::optional<std::size_t>(1) || g.depth_c != std::optional<std::size_t>(2))
    throw PipelineError("lazard", "input must be homogeneous of degree 1 in b and 2 in c", dtilde);
  NCPolyBuilder recon, t;
  for (const auto& [w, c] : dtilde) {
    if (w.back() != Letter::b) continue;
    const Word lam = w.prefix(w.size() - 1);
    recon.add(uea_act(lam, letter_poly(Letter::b)), c);
    if (lam.empty() || lam.back() != Letter::a)
      throw PipelineError("lazard", "coefficient word " + lam.to_string() + " does not end in a",
                          NCPoly::monomial(w, c));
    t.add(uea_act(lam.prefix(lam.size() - 1), letter_poly(Letter::c)), c);
  }
  const NCPoly diff = dtilde - recon.finish();
  if (!diff.is_zero()) throw PipelineError("lazard", "reconstruction from the b-terminated part fails", diff);
  return t.finish();
}

NCPoly divide_by_a(const NCPoly& ttilde) {
  if (ttilde.is_zero()) return {};
  if (!Alphabet::ac().includes(ttilde.alphabet()))
    throw PipelineError("divide_by_a", "input must be over {a,c}", ttilde);
  const Grading g = grading(ttilde);
  if (!g.weight || !g.depth_c || *g.weight < 2)
    throw PipelineError("divide_by_a", "input must be homogeneous", ttilde);
  const auto basis = lyndon_basis(Alphabet::ac(), *g.weight - 1, *g.depth_c);
  std::vector<NCPoly> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(lie_bracket(letter_poly(Letter::a), b));
  const SpanSolve s = solve_in_span(ttilde, images, "divide_by_a");
  if (!s.result.feasible) throw PipelineError("divide_by_a", "no q with [a,q] = t", ttilde);
  return combine(basis, s.result.particular.to_dense(basis.size()));
}

PoissonCoordinates express_in_poisson_triples(const NCPoly& qtilde) {
  PoissonCoordinates out;
  if (qtilde.is_zero()) return out;
  const Grading g = grading(qtilde);
  if (!g.weight || g.depth_c != std::optional<std::size_t>(3) || !Alphabet::ac().includes(qtilde.alphabet()))
    throw PipelineError("poisson-triples", "input must be homogeneous of depth 3 over {a,c}", qtilde);
  const int w = static_cast<int>(*g.weight);
  std::vector<NCPoly> basis;
  for (int i = 4; i <= w; i += 2)
    for (int j = 4; i + j <= w - 4; j += 2) {
      const int k = w - i - j;
      out.indices.push_back({i, j, k});
      basis.push_back(poisson_triple(i, j, k));
    }
  const SpanSolve s = solve_in_span(qtilde, basis, "poisson-triples");
  if (!s.result.feasible) throw PipelineError("poisson-triples", "q is outside the span of Poisson triples", qtilde);
  out.coefficients = s.result.particular.to_dense(basis.size());
  out.nullspace_dim = s.result.nullspace.size();
  return out;
}

RelationCertificate lift_to_depth3(const BracketExpr& expr) {
  const Derivation dd = eval_bracket_expr(expr, Family::epsilon);
  if (dd.image(Letter::a).is_zero()) return lift_to_depth3(dd, Derivation::zero(Alphabet::abc()));
  return lift_to_depth3(dd, eval_bracket_expr(expr, Family::epsilon_tilde));
}

RelationCertificate lift_to_depth3(const Derivation& dd, const Derivation& dt) {
  if (dd.alphabet() != Alphabet::ab() || dt.alphabet() != Alphabet::abc())
    throw std::invalid_argument("lift: expected derivations over {a,b} and {a,b,c}");
  RelationCertificate cert;
  cert.kind = RelationCertificate::Kind::depth3_lift;
  cert.target = dd.image(Letter::a);
  if (cert.target.is_zero()) return cert;

  const NCPoly dtilde = dt.image(Letter::a);
  cert.transcript.emplace_back("D~(a)", dtilde);
  const NCPoly comm = phi(dtilde) - cert.target;
  if (!comm.is_zero()) throw PipelineError("commutation", "phi(D~(a)) != D(a)", comm);

  std::optional<RelationCertificate> theta;
  try {
    theta = theta3_membership_depth3(dd);
  } catch (const std::invalid_argument& e) {
    throw PipelineError("theta3", e.what(), cert.target);
  }
  if (!theta) throw PipelineError("theta3", "D(a) is not in the depth-3 span", cert.target);

  // Monomials without b are already over {a,c}; only the rest needs rewriting.
  const NCPoly b_free = dtilde.filter([](Word w) { return w.count(Letter::b) == 0; });
  if (!Alphabet::ac().includes(b_free.alphabet()))
    throw PipelineError("lazard", "b-free part of D~(a) must be over {a,c}", b_free);
  const NCPoly t = b_free + lazard_decompose(dtilde - b_free);
  cert.transcript.emplace_back("t~", t);
  const NCPoly lazard_residual = phi(t) - cert.target;
  if (!lazard_residual.is_zero()) throw PipelineError("lazard", "phi(t~) != D(a)", lazard_residual);

  const NCPoly q = divide_by_a(t);
  cert.transcript.emplace_back("q~", q);
  if (!is_bialternal(q)) throw PipelineError("bialternal", "q~ is not bialternal", q);

  const PoissonCoordinates pc = express_in_poisson_triples(q);
  cert.indices = pc.indices;
  cert.coefficients = pc.coefficients;
  cert.nullspace_dim = pc.nullspace_dim;
  NCPolyBuilder acc;
  for (std::size_t n = 0; n < pc.indices.size(); ++n) {
    const auto [i, j, k] = pc.indices[n];
    cert.labels.push_back(triple_label("e", i, j, k));
    if (pc.coefficients[n] != 0) acc.add(triple_bracket_on_a(i, j, k), pc.coefficients[n]);
  }
  cert.residual = cert.target - acc.finish();
  if (!cert.residual.is_zero()) throw PipelineError("transport", "sum c [e_i,[e_j,e_k]](a) != D(a)", cert.residual);
  return cert;
}

std::size_t bialternal_dimension(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("bialternal_dimension: n must be odd and >= 3");
  const auto basis = lyndon_basis(Alphabet::ab(), static_cast<std::size_t>(n), 3);
  std::map<std::pair<std::size_t, Exponent>, std::size_t> index;
  SparseMat m;
  for (const auto& f : basis) {
    const auto sums = shuffle_sums(mi(f, 3, Letter::b));
    std::vector<SparseVec::Entry> e;
    for (std::size_t s = 0; s < sums.size(); ++s)
      for (const auto& [exp, c] : sums[s].terms()) {
        auto [it, inserted] = index.try_emplace({s, exp}, index.size());
        e.emplace_back(it->second, c);
      }
    m.rows.push_back(SparseVec::from_entries(std::move(e)));
  }
  m.cols = index.size();
  return basis.size() - rref(m).rank();
}

std::size_t formula_dimension(int n) {
  const long long t = static_cast<long long>(n - 3) * (n - 3) - 1;
  return t <= 0 ? 0 : static_cast<std::size_t>(t / 48);
}

}  // namespace edalg

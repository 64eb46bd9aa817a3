#include "edalg/mould.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "edalg/derivation.hpp"
#include "edalg/lie.hpp"

namespace edalg {

Letter depth_letter(const NCPoly& f) {
  const Alphabet al = f.alphabet();
  if (al.contains(Letter::b) && al.contains(Letter::c))
    throw std::invalid_argument("mi: polynomial uses both b and c");
  return al.contains(Letter::c) ? Letter::c : Letter::b;
}

CommPoly mi(const NCPoly& f, std::size_t r) { return mi(f, r, depth_letter(f)); }

CommPoly mi(const NCPoly& f, std::size_t r, Letter terminal) {
  if (terminal == Letter::a) throw std::invalid_argument("mi: terminal letter must be b or c");
  CommPoly out(r);
  Exponent e(r);
  for (const auto& [w, c] : f) {
    if (w.empty() || w.back() != terminal || w.count(terminal) != r) continue;
    std::size_t slot = 0;
    unsigned run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w[i];
      if (l == Letter::a) {
        ++run;
      } else if (l == terminal) {
        e[slot++] = run;
        run = 0;
      } else {
        throw std::invalid_argument("mi: monomial " + w.to_string() + " mixes depth letters");
      }
    }
    out.add_term(e, c);
  }
  return out;
}

CommPoly mi(const NCPoly& f) {
  const Letter t = depth_letter(f);
  const Grading g = grading(f);
  if (g.zero) throw std::invalid_argument("mi: depth of the zero polynomial is ambiguous");
  const auto& depth = t == Letter::c ? g.depth_c : g.depth_b;
  if (!depth) throw std::invalid_argument("mi: polynomial is not depth-homogeneous; pass --depth");
  return mi(f, *depth, t);
}

NCPoly mi_preimage(const CommPoly& F, Letter terminal) {
  std::vector<NCPoly::Term> terms;
  for (const auto& [e, c] : F.terms()) {
    std::string s;
    for (unsigned k : e) {
      s.append(k, 'a');
      s += to_char(terminal);
    }
    terms.emplace_back(Word::parse(s), c);
  }
  return NCPoly::from_terms(std::move(terms));
}

std::vector<std::vector<std::size_t>> shuffle_sequences(std::size_t r, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  // mask[p] true when slot p takes the next variable of the first block.
  std::vector<bool> mask(r, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(s), true);
  do {
    std::vector<std::size_t> seq(r);
    std::size_t first = 0, second = s;
    for (std::size_t p = 0; p < r; ++p) seq[p] = mask[p] ? first++ : second++;
    out.push_back(std::move(seq));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::vector<CommPoly> shuffle_sums(const CommPoly& F) {
  const std::size_t r = F.arity();
  std::vector<CommPoly> out;
  for (std::size_t s = 1; s < r; ++s) {
    CommPoly total(r);
    for (const auto& seq : shuffle_sequences(r, s)) total += F.permute(seq);
    out.push_back(std::move(total));
  }
  return out;
}

bool is_alternal(const CommPoly& F) {
  for (const auto& s : shuffle_sums(F))
    if (!s.is_zero()) return false;
  return true;
}

bool is_alternal(const CommRat& F) {
  if (F.denominator.is_zero()) throw std::invalid_argument("is_alternal: zero denominator");
  const std::size_t r = F.numerator.arity();
  for (std::size_t s = 1; s < r; ++s) {
    std::vector<std::pair<CommPoly, CommPoly>> groups;  // (denominator, summed numerator)
    for (const auto& seq : shuffle_sequences(r, s)) {
      CommPoly d = F.denominator.permute(seq);
      CommPoly n = F.numerator.permute(seq);
      bool merged = false;
      for (auto& g : groups)
        if (g.first == d) {
          g.second += n;
          merged = true;
          break;
        }
      if (!merged) groups.emplace_back(std::move(d), std::move(n));
    }
    CommPoly total(r);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      CommPoly term = groups[g].second;
      for (std::size_t h = 0; h < groups.size(); ++h)
        if (h != g) term = term * groups[h].first;
      total += term;
    }
    if (!total.is_zero()) return false;
  }
  return true;
}

namespace {

using LinearForm = std::vector<int>;

// Normalises the leading coefficient to be positive; returns the sign removed.
int normalise(LinearForm& f) {
  for (int x : f)
    if (x != 0) {
      if (x < 0) {
        for (int& y : f) y = -y;
        return -1;
      }
      return 1;
    }
  return 1;
}

struct FactoredDenominator {
  int sign = 1;
  std::map<LinearForm, unsigned> factors;
};

FactoredDenominator slot_denominator(const std::vector<std::size_t>& seq) {
  const std::size_t r = seq.size();
  FactoredDenominator d;
  auto add = [&](LinearForm f) {
    d.sign *= normalise(f);
    ++d.factors[f];
  };
  LinearForm f(r, 0);
  f[seq.front()] = 1;
  add(f);
  for (std::size_t p = 0; p + 1 < r; ++p) {
    LinearForm g(r, 0);
    g[seq[p]] = 1;
    g[seq[p + 1]] = -1;
    add(g);
  }
  LinearForm h(r, 0);
  h[seq.back()] = 1;
  add(h);
  return d;
}

CommPoly form_poly(const LinearForm& f) {
  std::vector<Rational> c(f.begin(), f.end());
  return CommPoly::linear(c);
}

}  // namespace

std::vector<CommPoly> prealternality_residuals(const CommPoly& F) {
  const std::size_t r = F.arity();
  std::vector<CommPoly> out;
  for (std::size_t s = 1; s < r; ++s) {
    const auto seqs = shuffle_sequences(r, s);
    std::vector<FactoredDenominator> dens;
    std::map<LinearForm, unsigned> lcm;
    for (const auto& seq : seqs) {
      dens.push_back(slot_denominator(seq));
      for (const auto& [f, m] : dens.back().factors) lcm[f] = std::max(lcm[f], m);
    }
    CommPoly total(r);
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      CommPoly cofactor = CommPoly::constant(r, dens[k].sign);
      for (const auto& [f, m] : lcm) {
        auto it = dens[k].factors.find(f);
        const unsigned have = it == dens[k].factors.end() ? 0 : it->second;
        if (m > have) cofactor = cofactor * form_poly(f).pow(m - have);
      }
      total += F.permute(seqs[k]) * cofactor;
    }
    out.push_back(std::move(total));
  }
  return out;
}

bool is_prealternal(const CommPoly& F) {
  for (const auto& s : prealternality_residuals(F))
    if (!s.is_zero()) return false;
  return true;
}

bool is_bialternal(const NCPoly& f) {
  if (f.is_zero()) return true;
  const Letter t = depth_letter(f);
  std::map<std::size_t, std::vector<NCPoly::Term>> by_weight;
  std::set<std::size_t> depths;
  for (const auto& [w, c] : f) {
    by_weight[w.weight()].emplace_back(w, c);
    if (w.back() == t) depths.insert(w.count(t));
  }
  for (auto& [weight, terms] : by_weight)
    if (!is_lie_element(NCPoly::from_terms(std::move(terms)))) return false;
  for (std::size_t r : depths)
    if (!is_alternal(mi(f, r, t))) return false;
  return true;
}

CommPoly prealternal_denominator(std::size_t r) {
  if (r == 0) throw std::invalid_argument("prealternal_denominator: arity must be >= 1");
  CommPoly out = CommPoly::variable(r, 0);
  for (std::size_t p = 0; p + 1 < r; ++p) out = out * (CommPoly::variable(r, p) - CommPoly::variable(r, p + 1));
  return out * CommPoly::variable(r, r - 1);
}

CommPoly hat_epsilon(int i, const CommPoly& F) {
  const std::size_t r = F.arity();
  NCPoly P;
  if (r == 0) {
    P = F.coeff({}) * NCPoly::letter(Letter::a);
  } else {
    P = sec(mi_preimage(F, Letter::b));
    if (!P.is_zero() && !is_lie_element(P))
      throw std::invalid_argument("hat_epsilon: input is not the mi image of a Lie element");
  }
  return mi(epsilon(i).apply(P), r + 1, Letter::b);
}

namespace {

void require_even_index(int i, const char* what) {
  if (i < 2 || i % 2) throw std::invalid_argument(std::string(what) + ": indices must be even and >= 2");
}

// y(x-y)^{j-1}(x^{k-1} - y^{k-1}) + (x-y) y^{j-1}((x-y)^{k-1} - x^{k-1})
CommPoly q_form(int j, int k, const CommPoly& x, const CommPoly& y) {
  const CommPoly z = x - y;
  const unsigned j1 = static_cast<unsigned>(j - 1), k1 = static_cast<unsigned>(k - 1);
  return y * z.pow(j1) * (x.pow(k1) - y.pow(k1)) + z * y.pow(j1) * (z.pow(k1) - x.pow(k1));
}

}  // namespace

CommPoly appendix_P(int k) {
  require_even_index(k, "appendix_P");
  return CommPoly::variable(1, 0).pow(static_cast<unsigned>(k));
}

CommPoly appendix_Q(int j, int k) {
  require_even_index(j, "appendix_Q");
  require_even_index(k, "appendix_Q");
  return q_form(j, k, CommPoly::variable(2, 0), CommPoly::variable(2, 1));
}

CommPoly appendix_R(int i, int j, int k) {
  require_even_index(i, "appendix_R");
  require_even_index(j, "appendix_R");
  require_even_index(k, "appendix_R");
  const CommPoly v1 = CommPoly::variable(3, 0), v2 = CommPoly::variable(3, 1), v3 = CommPoly::variable(3, 2);
  const CommPoly v12 = v1 - v2, v13 = v1 - v3, v23 = v2 - v3;
  const unsigned i1 = static_cast<unsigned>(i - 1);
  // Everything is multiplied by v13*v2 to clear the fractional prefactors.
  CommPoly cleared = (v23 * v12.pow(i1) - v12 * v23.pow(i1)) * q_form(j, k, v1, v3) * v2;
  cleared -= v12.pow(i1) * q_form(j, k, v2, v3) * v13 * v2;
  cleared += v3.pow(i1) * q_form(j, k, v13, v23) * v13 * v2;
  cleared += (v3 * v23.pow(i1) - v23 * v3.pow(i1)) * q_form(j, k, v1, v2) * v13;
  return cleared.divide_exact(v13 * v2);
}

CommPoly appendix_S(int i, int j, int k) {
  return appendix_R(i, j, k) - appendix_R(i, k, j) - appendix_R(j, k, i) + appendix_R(k, j, i);
}

CommPoly appendix_identity_residual(const CommPoly& S) {
  if (S.arity() != 3) throw std::invalid_argument("appendix identity needs arity 3");
  const CommPoly v1 = CommPoly::variable(3, 0), v2 = CommPoly::variable(3, 1), v3 = CommPoly::variable(3, 2);
  return v2 * (v1 - v3) * S - v1 * (v2 - v3) * S.permute({1, 0, 2}) - v3 * (v1 - v2) * S.permute({1, 2, 0});
}

bool check_remmig(const NCPoly& g, std::size_t r) {
  if (!Alphabet::ac().includes(g.alphabet())) throw std::invalid_argument("check_remmig: g must be over {a,c}");
  const NCPoly f = lie_bracket(NCPoly::letter(Letter::a), phi(g));
  return mi(f, r, Letter::b) == prealternal_denominator(r) * mi(g, r, Letter::c);
}

}  // namespace edalg

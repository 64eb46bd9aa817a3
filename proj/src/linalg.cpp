#include "edalg/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace edalg {

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().first == e.first) {
      out.entries_.back().second += e.second;
      if (out.entries_.back().second == 0) out.entries_.pop_back();
    } else if (e.second != 0) {
      out.entries_.push_back(std::move(e));
    }
  }
  return out;
}

SparseVec SparseVec::dense(const std::vector<Rational>& values) {
  SparseVec out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) out.entries_.emplace_back(i, values[i]);
  return out;
}

Rational SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t key) { return e.first < key; });
  return it != entries_.end() && it->first == i ? it->second : Rational(0);
}

std::vector<Rational> SparseVec::to_dense(std::size_t n) const {
  if (extent() > n) throw std::out_of_range("to_dense: vector has entries beyond the requested size");
  std::vector<Rational> out(n);
  for (const auto& [i, c] : entries_) out[i] = c;
  return out;
}

SparseVec& SparseVec::axpy(const Rational& c, const SparseVec& x) {
  if (c == 0 || x.is_zero()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + x.entries_.size());
  auto i = entries_.begin();
  auto j = x.entries_.begin();
  while (i != entries_.end() || j != x.entries_.end()) {
    if (j == x.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == entries_.end() || j->first < i->first) {
      merged.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      Rational s = i->second + c * j->second;
      if (s != 0) merged.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

Rational dot(const SparseVec& x, const SparseVec& y) {
  Rational out = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (i->first < j->first) ++i;
    else if (j->first < i->first) ++j;
    else {
      out += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMat SparseMat::transpose(std::string row_space) const {
  std::vector<std::vector<SparseVec::Entry>> cols_entries(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) cols_entries.at(c).emplace_back(r, v);
  SparseMat out;
  out.space = std::move(row_space);
  out.cols = rows.size();
  out.rows.reserve(cols);
  for (auto& e : cols_entries) out.rows.push_back(SparseVec::from_entries(std::move(e)));
  return out;
}

SparseVec SparseMat::multiply(const SparseVec& x) const {
  std::vector<SparseVec::Entry> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational v = dot(rows[r], x);
    if (v != 0) out.emplace_back(r, std::move(v));
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec SparseMat::left_multiply(const SparseVec& y) const {
  SparseVec out;
  for (const auto& [r, c] : y) out.axpy(c, rows.at(r));
  return out;
}

namespace {

using IntEntry = std::pair<std::size_t, Integer>;
using IntRow = std::vector<IntEntry>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVec& v) {
  Integer l = 1;
  for (const auto& [c, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow row;
  row.reserve(v.nnz());
  for (const auto& [c, q] : v) {
    Integer x = l / q.get_den();
    x *= q.get_num();
    row.emplace_back(c, std::move(x));
  }
  make_primitive(row);
  return row;
}

const Integer* find(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntEntry& e, std::size_t key) { return e.first < key; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// row <- p * row - q * pivot_row, which cancels the pivot column.
void eliminate(IntRow& row, const Integer& p, const Integer& q, const IntRow& pivot_row) {
  IntRow out;
  out.reserve(row.size() + pivot_row.size());
  auto i = row.begin();
  auto j = pivot_row.begin();
  Integer t;
  while (i != row.end() || j != pivot_row.end()) {
    if (j == pivot_row.end() || (i != row.end() && i->first < j->first)) {
      t = p * i->second;
      out.emplace_back(i->first, t);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      t = -q * j->second;
      out.emplace_back(j->first, t);
      ++j;
    } else {
      t = p * i->second - q * j->second;
      if (t != 0) out.emplace_back(i->first, t);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  row = std::move(out);
}

}  // namespace

RrefResult rref(const SparseMat& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    if (r.extent() > m.cols) throw std::invalid_argument("rref: row entry outside the column space");
    rows.push_back(to_int_row(r));
  }
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
  while (true) {
    std::size_t best_col = std::numeric_limits<std::size_t>::max(), best_row = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && !rows[r].empty() && rows[r].front().first < best_col) {
        best_col = rows[r].front().first;
        best_row = r;
      }
    if (best_col == std::numeric_limits<std::size_t>::max()) break;
    used[best_row] = true;
    pivots.emplace_back(best_col, best_row);
    const IntRow& prow = rows[best_row];
    const Integer p = prow.front().second;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == best_row) continue;
      const Integer* q = find(rows[r], best_col);
      if (!q) continue;
      const Integer qv = *q;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), qv.get_mpz_t());
      eliminate(rows[r], p / g, qv / g, prow);
    }
  }
  RrefResult out;
  out.reduced.space = m.space;
  out.reduced.cols = m.cols;
  for (const auto& [col, r] : pivots) {
    out.pivots.push_back(col);
    const Integer& lead = rows[r].front().second;
    std::vector<SparseVec::Entry> entries;
    entries.reserve(rows[r].size());
    for (const auto& [c, v] : rows[r]) {
      Rational q(v, lead);
      q.canonicalize();
      entries.emplace_back(c, std::move(q));
    }
    out.reduced.rows.push_back(SparseVec::from_entries(std::move(entries)));
  }
  return out;
}

SolveResult solve(const SparseMat& m, const SparseVec& b) {
  if (b.extent() > m.rows.size()) throw std::invalid_argument("solve: right-hand side longer than the row count");
  const std::size_t n = m.cols;
  SparseMat aug;
  aug.space = m.space;
  aug.cols = n + 1;
  aug.rows = m.rows;
  for (std::size_t r = 0; r < aug.rows.size(); ++r) {
    const Rational br = b.at(r);
    if (br != 0) aug.rows[r].axpy(br, SparseVec::from_entries({{n, 1}}));
  }
  const RrefResult red = rref(aug);
  SolveResult out;
  if (!red.pivots.empty() && red.pivots.back() == n) {
    // Fredholm alternative: some y has y^T M = 0 and y.b = 1.
    SparseMat system = m.transpose();
    system.rows.push_back(b);
    const SolveResult dual = solve(system, SparseVec::from_entries({{n, 1}}));
    if (!dual.feasible) throw std::logic_error("solve: no infeasibility certificate found");
    out.certificate = dual.particular;
    return out;
  }
  out.feasible = true;
  std::vector<SparseVec::Entry> part;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    is_pivot[red.pivots[k]] = true;
    const Rational v = red.reduced.rows[k].at(n);
    if (v != 0) part.emplace_back(red.pivots[k], v);
  }
  out.particular = SparseVec::from_entries(std::move(part));
  std::map<std::size_t, std::vector<SparseVec::Entry>> null_entries;
  for (std::size_t f = 0; f < n; ++f)
    if (!is_pivot[f]) null_entries[f].emplace_back(f, 1);
  for (std::size_t k = 0; k < red.pivots.size(); ++k)
    for (const auto& [c, v] : red.reduced.rows[k])
      if (c < n && !is_pivot[c]) null_entries[c].emplace_back(red.pivots[k], -v);
  for (auto& [f, e] : null_entries) out.nullspace.push_back(SparseVec::from_entries(std::move(e)));
  return out;
}

bool verify(const SparseMat& m, const SparseVec& b, const SolveResult& r) {
  if (!r.feasible) return m.left_multiply(r.certificate).is_zero() && dot(r.certificate, b) == 1;
  if (!(m.multiply(r.particular) == b)) return false;
  for (const auto& v : r.nullspace)
    if (!m.multiply(v).is_zero()) return false;
  return true;
}

SparseMat from_columns(const std::vector<SparseVec>& columns, std::size_t dim, std::string space) {
  SparseMat t;
  t.cols = dim;
  t.rows = columns;
  return t.transpose(std::move(space));
}

std::optional<std::vector<Rational>> membership(const SparseVec& v, const std::vector<SparseVec>& spanning,
                                                std::size_t cols) {
  if (v.extent() > cols) throw std::invalid_argument("membership: vector outside the declared space");
  for (const auto& s : spanning)
    if (s.extent() > cols) throw std::invalid_argument("membership: spanning vector outside the declared space");
  const SolveResult r = solve(from_columns(spanning, cols), v);
  if (!r.feasible) return std::nullopt;
  return r.particular.to_dense(spanning.size());
}

}  // namespace edalg

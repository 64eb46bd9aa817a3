#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edalg/rational.hpp"

namespace edalg {

/// Sparse rational vector: strictly increasing indices, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  /// Sorts, merges duplicate indices and drops zeros.
  static SparseVec from_entries(std::vector<Entry> entries);
  static SparseVec dense(const std::vector<Rational>& values);

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Rational at(std::size_t i) const;
  /// One past the largest stored index (0 when empty).
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }
  std::vector<Rational> to_dense(std::size_t n) const;

  SparseVec& axpy(const Rational& c, const SparseVec& x);  // this += c x
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

Rational dot(const SparseVec& x, const SparseVec& y);

/// Rows sharing one column space, identified by a tag and a dimension.
struct SparseMat {
  std::string space;
  std::size_t cols = 0;
  std::vector<SparseVec> rows;

  std::size_t row_count() const { return rows.size(); }
  SparseMat transpose(std::string row_space = {}) const;
  /// M x
  SparseVec multiply(const SparseVec& x) const;
  /// y^T M
  SparseVec left_multiply(const SparseVec& y) const;
  friend bool operator==(const SparseMat&, const SparseMat&) = default;
};

struct RrefResult {
  SparseMat reduced;  // nonzero rows only, ordered by pivot column
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivots are chosen lowest column first, then
/// first row; elimination is fraction-free with content normalisation.
RrefResult rref(const SparseMat& m);

struct SolveResult {
  bool feasible = false;
  SparseVec particular;              // x with M x = b
  std::vector<SparseVec> nullspace;  // basis of {x : M x = 0}, ordered by free column
  SparseVec certificate;             // y with y^T M = 0 and y.b = 1 when infeasible
};

/// Solves M x = b, with b indexed by the rows of M.
SolveResult solve(const SparseMat& m, const SparseVec& b);

/// Checks the claims of a SolveResult exactly.
bool verify(const SparseMat& m, const SparseVec& b, const SolveResult& r);

/// Coordinates of v in span(S), all vectors in the space `cols`-dimensional space.
std::optional<std::vector<Rational>> membership(const SparseVec& v, const std::vector<SparseVec>& spanning,
                                                std::size_t cols);

/// Matrix whose columns are `columns`, in a space of dimension `dim`.
SparseMat from_columns(const std::vector<SparseVec>& columns, std::size_t dim, std::string space = {});

}  // namespace edalg

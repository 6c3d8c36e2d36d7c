#ifndef RRP_SPARSE_HPP
#define RRP_SPARSE_HPP

#include <cstdint>
#include <vector>

namespace rrp {

struct Triple {
  int row;
  int col;
  double value;
};

// Square sparse matrix in compressed-sparse-row form. Used for transition
// matrices; propagation is one forward push per nonzero, O(n + m).
struct CsrMatrix {
  int n = 0;
  std::vector<int> row_ptr;  // n + 1
  std::vector<int> col;      // nnz
  std::vector<double> val;   // nnz

  // Builds from (row, col, value) triples; duplicates are summed, entries are
  // stored sorted by (row, col).
  static CsrMatrix from_triples(int n, std::vector<Triple> triples);

  std::size_t nnz() const { return col.size(); }

  // y[s'] = sum_s x[s] * T[s, s']  (distribution evolution)
  void propagate(const std::vector<double>& x, std::vector<double>& y) const;

  // y[s'] += sum_s x[s] * T[s, s'] into a preloaded y; saves a zeroing pass
  // in step-fused loops.
  void propagate_add(const std::vector<double>& x, std::vector<double>& y) const;

  std::vector<double> row_sums() const;
  std::vector<Triple> triples() const;
};

}  // namespace rrp

#endif  // RRP_SPARSE_HPP

#include "rrp/sparse.hpp"

#include <algorithm>

#include "rrp/errors.hpp"

namespace rrp {

CsrMatrix CsrMatrix::from_triples(int n, std::vector<Triple> triples) {
  for (const Triple& t : triples) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
      throw DimensionError("sparse entry (" + std::to_string(t.row) + ", " +
                           std::to_string(t.col) + ") outside " +
                           std::to_string(n) + "x" + std::to_string(n));
    }
  }
  std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  CsrMatrix m;
  m.n = n;
  m.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
  m.col.reserve(triples.size());
  m.val.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < triples.size() && triples[j].row == triples[i].row &&
           triples[j].col == triples[i].col) {
      sum += triples[j].value;
      ++j;
    }
    m.col.push_back(triples[i].col);
    m.val.push_back(sum);
    m.row_ptr[static_cast<std::size_t>(triples[i].row) + 1]++;
    i = j;
  }
  for (int r = 0; r < n; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return m;
}

void CsrMatrix::propagate(const std::vector<double>& x,
                          std::vector<double>& y) const {
  y.assign(static_cast<std::size_t>(n), 0.0);
  propagate_add(x, y);
}

void CsrMatrix::propagate_add(const std::vector<double>& x,
                              std::vector<double>& y) const {
  if (static_cast<int>(x.size()) != n) {
    throw DimensionError("propagate: vector length " +
                         std::to_string(x.size()) + " != " + std::to_string(n));
  }
  for (int s = 0; s < n; ++s) {
    double mass = x[s];
    if (mass == 0.0) continue;
    for (int e = row_ptr[s]; e < row_ptr[s + 1]; ++e) {
      y[col[e]] += mass * val[e];
    }
  }
}

std::vector<double> CsrMatrix::row_sums() const {
  std::vector<double> sums(static_cast<std::size_t>(n), 0.0);
  for (int s = 0; s < n; ++s) {
    for (int e = row_ptr[s]; e < row_ptr[s + 1]; ++e) sums[s] += val[e];
  }
  return sums;
}

std::vector<Triple> CsrMatrix::triples() const {
  std::vector<Triple> out;
  out.reserve(nnz());
  for (int s = 0; s < n; ++s) {
    for (int e = row_ptr[s]; e < row_ptr[s + 1]; ++e) {
      out.push_back({s, col[e], val[e]});
    }
  }
  return out;
}

}  // namespace rrp

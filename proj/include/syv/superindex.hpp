#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace syv {

struct IndexError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Index set I = {1..m, -1..-n}. Positions 1..m+n list it in the order
// 1 < ... < m < -1 < ... < -n, which is also the cyclic order used by the
// affine node labels (position m+n is identified with cyclic label 0).
class SuperIndexSet {
 public:
  SuperIndexSet(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }

  bool valid(int label) const;
  int parity(int label) const;           // 0 iff label > 0
  int position(int label) const;         // 1..m+n
  int label_at(int pos) const;           // inverse of position
  int parity_at_pos(int pos) const { return pos > m_ ? 1 : 0; }
  // Cyclic label in 0..m+n-1; -i maps to m+i (mod m+n).
  int cyclic(int label) const;
  int from_cyclic(int c) const;
  // Parity of a cyclic label (0 is read as m+n).
  int parity_cyclic(int c) const;
  // Successor in the cyclic order 1,...,m,-1,...,-n,1.
  int next(int label) const;
  // Alternating partial sum over positions 1..i.
  int alt_hat(int i) const;
  std::vector<int> supertrace_coeffs() const;

 private:
  int m_, n_;
};

// Column data (u, q) for the W-side. Index labels are signed as above with
// (m, n) = (M, N).
class PartitionData {
 public:
  PartitionData(std::vector<int> u, std::vector<int> q);

  int l() const { return static_cast<int>(u_.size()); }
  int M() const { return M_; }
  int N() const { return N_; }
  // 1-based, with u(l+1) = q(l+1) = 0.
  int u(int a) const { return (a >= 1 && a <= l()) ? u_[a - 1] : 0; }
  int q(int a) const { return (a >= 1 && a <= l()) ? q_[a - 1] : 0; }
  const std::vector<int>& u_vec() const { return u_; }
  const std::vector<int>& q_vec() const { return q_; }
  SuperIndexSet index_set() const { return SuperIndexSet(M_, N_); }

  bool valid(int i) const;
  int parity(int i) const { return i > 0 ? 0 : 1; }
  int col(int i) const;
  int row(int i) const;
  // Index with given (row, col), if any.
  std::optional<int> at(int row, int col) const;
  std::optional<int> hat(int i) const;
  std::optional<int> tilde(int i) const;
  // All labels, ordered 1..M, -1..-N.
  std::vector<int> labels() const;
  // Labels in column c.
  std::vector<int> column(int c) const;
  // Row labels present in column s but absent from column s+1, in the order
  // positive rows ascending then negative rows descending.
  std::vector<int> new_rows(int s) const;
  // Whether a row label occurs in column s.
  bool row_in_column(int row, int s) const;

 private:
  std::vector<int> u_, q_;
  int M_ = 0, N_ = 0;
};

}  // namespace syv

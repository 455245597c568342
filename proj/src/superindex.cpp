#include "syv/superindex.hpp"

#include <string>

namespace syv {

SuperIndexSet::SuperIndexSet(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0 || m + n == 0) throw IndexError("SuperIndexSet: bad sizes");
}

bool SuperIndexSet::valid(int label) const {
  return (label >= 1 && label <= m_) || (label <= -1 && label >= -n_);
}

int SuperIndexSet::parity(int label) const {
  if (!valid(label)) throw IndexError("parity: index " + std::to_string(label) + " not in I");
  return label > 0 ? 0 : 1;
}

int SuperIndexSet::position(int label) const {
  if (!valid(label)) throw IndexError("position: index " + std::to_string(label) + " not in I");
  return label > 0 ? label : m_ - label;
}

int SuperIndexSet::label_at(int pos) const {
  if (pos < 1 || pos > m_ + n_) throw IndexError("label_at: position out of range");
  return pos <= m_ ? pos : -(pos - m_);
}

int SuperIndexSet::cyclic(int label) const { return position(label) % (m_ + n_); }

int SuperIndexSet::from_cyclic(int c) const {
  int r = ((c % size()) + size()) % size();
  return label_at(r == 0 ? size() : r);
}

int SuperIndexSet::parity_cyclic(int c) const {
  int r = ((c % size()) + size()) % size();
  return parity_at_pos(r == 0 ? size() : r);
}

int SuperIndexSet::next(int label) const {
  int p = position(label);
  return label_at(p == size() ? 1 : p + 1);
}

int SuperIndexSet::alt_hat(int i) const {
  int s = 0;
  for (int u = 1; u <= i; ++u) s += parity_at_pos(u) ? -1 : 1;
  return s;
}

std::vector<int> SuperIndexSet::supertrace_coeffs() const {
  std::vector<int> out;
  for (int p = 1; p <= size(); ++p) out.push_back(parity_at_pos(p) ? -1 : 1);
  return out;
}

PartitionData::PartitionData(std::vector<int> u, std::vector<int> q) : u_(std::move(u)), q_(std::move(q)) {
  if (u_.empty() || u_.size() != q_.size()) throw IndexError("PartitionData: u and q need equal nonzero length");
  for (size_t a = 0; a < u_.size(); ++a) {
    if (u_[a] < 0 || q_[a] < 0) throw IndexError("PartitionData: negative part");
    if (a > 0 && (u_[a] > u_[a - 1] || q_[a] > q_[a - 1])) throw IndexError("PartitionData: parts must be non-increasing");
    M_ += u_[a];
    N_ += q_[a];
  }
  if (u_.back() + q_.back() == 0) throw IndexError("PartitionData: u_l + q_l must be nonzero");
  if (M_ == N_) throw IndexError("PartitionData: M must differ from N");
}

bool PartitionData::valid(int i) const { return (i >= 1 && i <= M_) || (i <= -1 && i >= -N_); }

int PartitionData::col(int i) const {
  if (!valid(i)) throw IndexError("col: index " + std::to_string(i) + " out of range");
  int acc = 0;
  for (int c = 1; c <= l(); ++c) {
    int w = i > 0 ? u(c) : q(c);
    int x = i > 0 ? i : -i;
    if (acc < x && x <= acc + w) return c;
    acc += w;
  }
  throw IndexError("col: unreachable");
}

int PartitionData::row(int i) const {
  int c = col(i);
  int before = 0;
  for (int b = 1; b < c; ++b) before += i > 0 ? u(b) : q(b);
  if (i > 0) return i - before + u(1) - u(c);
  return i + before - q(1) + q(c);
}

bool PartitionData::row_in_column(int r, int c) const {
  if (c < 1 || c > l()) return false;
  if (r > 0) return u(1) - u(c) < r && r <= u(1);
  if (r < 0) return -q(1) <= r && r < -q(1) + q(c);
  return false;
}

std::optional<int> PartitionData::at(int r, int c) const {
  if (!row_in_column(r, c)) return std::nullopt;
  int before = 0;
  for (int b = 1; b < c; ++b) before += r > 0 ? u(b) : q(b);
  if (r > 0) return r + before - u(1) + u(c);
  return r - before + q(1) - q(c);
}

std::optional<int> PartitionData::hat(int i) const { return at(row(i), col(i) + 1); }
std::optional<int> PartitionData::tilde(int i) const { return at(row(i), col(i) - 1); }

std::vector<int> PartitionData::labels() const {
  std::vector<int> out;
  for (int i = 1; i <= M_; ++i) out.push_back(i);
  for (int i = 1; i <= N_; ++i) out.push_back(-i);
  return out;
}

std::vector<int> PartitionData::column(int c) const {
  std::vector<int> out;
  for (int i : labels())
    if (col(i) == c) out.push_back(i);
  return out;
}

std::vector<int> PartitionData::new_rows(int s) const {
  std::vector<int> out;
  for (int r = u(1) - u(s) + 1; r <= u(1) - u(s + 1); ++r) out.push_back(r);
  for (int r = -q(1) + q(s) - 1; r >= -q(1) + q(s + 1); --r) out.push_back(r);
  return out;
}

}  // namespace syv

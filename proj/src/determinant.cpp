#include "qsk/determinant.hpp"

#include <unordered_map>

namespace qsk {

namespace {

class LaplaceExpansion {
 public:
  explicit LaplaceExpansion(const PolyMatrix& m) : m_(m), n_(static_cast<int>(m.size())) {}

  Polynomial run() { return minor(0, (1u << n_) - 1); }

 private:
  const PolyMatrix& m_;
  int n_;
  std::unordered_map<unsigned, Polynomial> memo_;

  // Determinant of rows [row, n) restricted to the columns in `cols`.
  Polynomial minor(int row, unsigned cols) {
    if (row == n_) return Polynomial(1LL);
    if (auto it = memo_.find(cols); it != memo_.end()) return it->second;
    Polynomial sum;
    int position = 0;
    for (int j = 0; j < n_; ++j) {
      if (!(cols & (1u << j))) continue;
      const Polynomial& entry = m_[row][j];
      if (!entry.is_zero()) {
        Polynomial sub = minor(row + 1, cols & ~(1u << j));
        if (!sub.is_zero()) {
          Polynomial prod = entry * sub;
          if (position % 2 == 0) {
            sum += prod;
          } else {
            sum -= prod;
          }
        }
      }
      ++position;
    }
    memo_.emplace(cols, sum);
    return sum;
  }
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::NonSquare, "matrix is not square");
  }
  if (n > 24) throw Error(ErrorCode::CapacityExceeded, "matrix too large for Laplace expansion");
  if (n == 0) return Polynomial(1LL);
  return LaplaceExpansion(m).run();
}

Polynomial determinant(int n, const std::function<Polynomial(int, int)>& entry) {
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = entry(i, j);
  }
  return determinant(m);
}

}  // namespace qsk

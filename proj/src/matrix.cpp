#include "ahrg/matrix.hpp"

namespace ahrg {

bool is_psd(const RatMat& m0) {
  if (m0.rows != m0.cols) return false;
  const int n = m0.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m0(i, j) != m0(j, i)) return false;
  RatMat m = m0;
  std::vector<bool> used(n, false);
  for (;;) {
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (m(i, i) < 0) return false;
      if (m(i, i) > 0 && p < 0) p = i;
    }
    if (p < 0) {
      // Remaining diagonal is zero, so the remaining block must vanish.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!used[i] && !used[j] && m(i, j) != 0) return false;
      return true;
    }
    used[p] = true;
    Rational d = m(p, p);
    for (int i = 0; i < n; ++i) {
      if (used[i] || m(i, p) == 0) continue;
      Rational f = m(i, p) / d;
      for (int j = 0; j < n; ++j)
        if (!used[j]) m(i, j) -= f * m(p, j);
    }
  }
}

}  // namespace ahrg

#include "hitchinlab/exterior.hpp"


namespace hlab {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return int(r);
}

int popcount16(uint16_t m) { return __builtin_popcount(m); }

namespace {
struct Tables {
  // masks per (n,k) in lexicographic tuple order, and mask -> rank
  std::vector<uint16_t> masks[9][9];
  int8_t rank[9][1 << 8];
  Tables() {
    for (int n = 0; n <= 8; ++n) {
      for (auto& r : rank[n]) r = -1;
      for (int k = 0; k <= n; ++k) {
        auto& list = masks[n][k];
        std::vector<int> tuple(k);
        // enumerate strictly increasing k-tuples from {0..n-1} lexicographically
        for (int i = 0; i < k; ++i) tuple[i] = i;
        while (true) {
          uint16_t m = 0;
          for (int v : tuple) m |= uint16_t(1) << v;
          list.push_back(m);
          if (k == 0) break;
          int i = k - 1;
          while (i >= 0 && tuple[i] == n - k + i) --i;
          if (i < 0) break;
          ++tuple[i];
          for (int j = i + 1; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
        }
        for (size_t r = 0; r < list.size(); ++r) rank[n][list[r]] = int8_t(r);
      }
    }
  }
};
const Tables& tables() {
  static const Tables t;
  return t;
}
}  // namespace

const std::vector<uint16_t>& basis_masks(int n, int k) { return tables().masks[n][k]; }

int rank_of_mask(int n, uint16_t mask) { return tables().rank[n][mask]; }

int merge_sign(uint16_t a, uint16_t b) {
  // parity of (tuple a, tuple b) relative to sorted(a|b): count pairs
  // (x in a, y in b) with x > y
  int inv = 0;
  for (int i = 0; i < 16; ++i)
    if (a >> i & 1) inv += popcount16(b & ((uint16_t(1) << i) - 1));
  return (inv & 1) ? -1 : 1;
}

}  // namespace hlab

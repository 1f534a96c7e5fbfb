#include "greedytk/vector.hpp"

namespace greedytk {

void for_each_subset_of(const IndexSet& pool, int k,
                        const std::function<bool(const IndexSet&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(IndexSet{});
    return;
  }
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i;
  IndexSet subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i)
      subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
    if (!fn(subset)) return;
    int i = k - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void for_each_subset(int d, int k, const std::function<bool(const IndexSet&)>& fn) {
  IndexSet pool;
  pool.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pool.push_back(i);
  for_each_subset_of(pool, k, fn);
}

void for_each_subset_sized(const IndexSet& pool, int lo, int hi,
                           const std::function<bool(const IndexSet&)>& fn) {
  bool keep_going = true;
  for (int k = lo; k <= hi && keep_going; ++k) {
    for_each_subset_of(pool, k, [&](const IndexSet& a) {
      keep_going = fn(a);
      return keep_going;
    });
  }
}

}  // namespace greedytk

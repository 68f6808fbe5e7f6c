#include "qdilog/qseries.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qdilog {

VSeries poincare_P(int k, int v_max) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "P_k needs k >= 0");
  // Memoised per (k, v_max).
  static std::mutex mu;
  static std::map<std::pair<int, int>, VSeries> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({k, v_max}); it != cache.end()) return it->second;
  }
  VSeries p = VSeries::one(v_max);
  for (int j = 1; j <= k; ++j) {
    const VSeries factor = VSeries::one(v_max) - VSeries::q_power(j, v_max);
    p *= factor.inverse();
  }
  std::lock_guard lock(mu);
  cache.emplace(std::pair{k, v_max}, p);
  return p;
}

Integer partition_count(int n, int k) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidArgument, "partition_count needs n, k >= 0");
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int total = part; total <= n; ++total) {
      ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace qdilog

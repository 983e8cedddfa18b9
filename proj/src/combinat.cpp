#include "vincular/combinat.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace vincular {

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigCount bell(int n) {
  if (n < 0) throw std::invalid_argument("bell: n must be nonnegative");
  static std::mutex cache_mutex;
  static std::vector<BigCount> cache{1};  // B_0 = 1
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size()) - 1;  // computing B_{m+1}
    BigCount next = 0;
    for (int k = 0; k <= m; ++k) next += binomial(m, k) * cache[k];
    cache.push_back(next);
  }
  return cache[n];
}

BigCount catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be nonnegative");
  BigCount c = binomial(2L * n, n);
  BigCount out;
  mpz_divexact_ui(out.get_mpz_t(), c.get_mpz_t(),
                  static_cast<unsigned long>(n) + 1);
  return out;
}

BigCount factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace vincular

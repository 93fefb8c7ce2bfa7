#include "simsun/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace simsun {

Integer factorial(int n) {
  if (n < 0)
    throw std::domain_error("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Integer stirling2(int n, int i) {
  if (n < 0 || i < 0)
    return 0;
  // row-by-row: {m, j} = j{m-1, j} + {m-1, j-1}
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      if (ju < row.size())
        next[ju] += j * row[ju];
      next[ju] += row[ju - 1];
    }
    row = std::move(next);
  }
  return i < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(i)] : Integer(0);
}

Integer pow2(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

} // namespace simsun

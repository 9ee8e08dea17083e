#include "ocmf/qseries.hpp"

namespace ocmf::detail {

std::vector<RingElement> convolve_ring(std::span<const RingElement> a,
                                       std::span<const RingElement> b, std::size_t n,
                                       const RingPtr& ctx) {
  const bool ramified = ctx->ramified();
  std::vector<BigInt> acc_a(n), acc_b(ramified ? n : 0), acc_bb(ramified ? n : 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    const auto& x = a[i];
    if (x.is_zero()) continue;
    const std::size_t lim = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < lim; ++j) {
      const auto& y = b[j];
      mpz_addmul(acc_a[i + j].get_mpz_t(), x.a().get_mpz_t(), y.a().get_mpz_t());
      if (ramified) {
        mpz_addmul(acc_bb[i + j].get_mpz_t(), x.b().get_mpz_t(), y.b().get_mpz_t());
        mpz_addmul(acc_b[i + j].get_mpz_t(), x.a().get_mpz_t(), y.b().get_mpz_t());
        mpz_addmul(acc_b[i + j].get_mpz_t(), x.b().get_mpz_t(), y.a().get_mpz_t());
      }
    }
  }
  std::vector<RingElement> r;
  r.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ramified) {
      mpz_addmul(acc_a[k].get_mpz_t(), acc_bb[k].get_mpz_t(), ctx->prime().get_mpz_t());
      r.emplace_back(ctx, std::move(acc_a[k]), std::move(acc_b[k]));
    } else {
      r.emplace_back(ctx, std::move(acc_a[k]));
    }
  }
  return r;
}

}  // namespace ocmf::detail

#include "cpl/algebra/laurent_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cpl/algebra/error.hpp"
#include "packing.hpp"

namespace cpl::algebra::kernels {

namespace {

void require_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_vars(a.vars(), b.vars()))
    throw Error(Errc::VariableMismatch, "operands use different variable lists");
}

struct Box {
  std::vector<Exponent> lo_p, lo_q, lo_r;
  std::vector<std::uint64_t> width;
};

Box product_box(const LaurentPoly& p, const LaurentPoly& q) {
  const std::size_t n = p.nvars();
  Box b{p.min_exponents(), q.min_exponents(), std::vector<Exponent>(n), std::vector<std::uint64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t lo = std::int64_t{b.lo_p[i]} + b.lo_q[i];
    std::int64_t hi = std::int64_t{p.max_exponent(i)} + q.max_exponent(i);
    detail::checked_exponent(lo);
    detail::checked_exponent(hi);
    b.lo_r[i] = static_cast<Exponent>(lo);
    b.width[i] = static_cast<std::uint64_t>(hi - lo) + 1;
  }
  return b;
}

template <class Key>
using Table = std::unordered_map<Key, BigInt, detail::KeyHash>;

template <class Key>
LaurentPoly assemble(const LaurentPoly& p, const detail::Packer<Key>& pk, const Box& box,
                     std::vector<std::pair<Key, BigInt>>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t n = p.nvars();
  std::vector<Exponent> exps;
  std::vector<BigInt> coefs;
  exps.reserve(entries.size() * n);
  coefs.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].first == entries[i].first) entries[i].second += entries[j++].second;
    if (entries[i].second != 0) {
      exps.resize(exps.size() + n);
      pk.decode(entries[i].first, box.lo_r, exps.data() + exps.size() - n);
      coefs.push_back(std::move(entries[i].second));
    }
    i = j;
  }
  return LaurentPoly::from_canonical(p.vars(), std::move(exps), std::move(coefs));
}

template <class Key>
LaurentPoly mul_packed_impl(const LaurentPoly& p, const LaurentPoly& q, const Box& box, bool parallel) {
  detail::Packer<Key> pk(box.width);
  std::vector<Key> kp(p.nterms()), kq(q.nterms());
  for (std::size_t i = 0; i < p.nterms(); ++i) kp[i] = pk.encode(p.exponent(i), box.lo_p);
  for (std::size_t j = 0; j < q.nterms(); ++j) kq[j] = pk.encode(q.exponent(j), box.lo_q);

  const long np = static_cast<long>(p.nterms());
  std::vector<std::pair<Key, BigInt>> entries;
  auto accumulate = [&](Table<Key>& acc, long i) {
    for (std::size_t j = 0; j < kq.size(); ++j) {
      BigInt& slot = acc[kp[i] + kq[j]];
      mpz_addmul(slot.get_mpz_t(), p.coef(i).get_mpz_t(), q.coef(j).get_mpz_t());
    }
  };

  if (!parallel) {
    Table<Key> acc;
    acc.reserve(std::min<std::size_t>(p.nterms() * q.nterms(), 1u << 20));
    for (long i = 0; i < np; ++i) accumulate(acc, i);
    entries.reserve(acc.size());
    for (auto& kv : acc) entries.emplace_back(kv.first, std::move(kv.second));
    return assemble(p, pk, box, entries);
  }

  const int nthreads = std::max(1, omp_get_max_threads());
  std::vector<std::vector<std::pair<Key, BigInt>>> parts(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    Table<Key> acc;
#pragma omp for schedule(dynamic, 8) nowait
    for (long i = 0; i < np; ++i) accumulate(acc, i);
    auto& out = parts[static_cast<std::size_t>(omp_get_thread_num())];
    out.reserve(acc.size());
    for (auto& kv : acc) out.emplace_back(kv.first, std::move(kv.second));
  }
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  entries.reserve(total);
  for (auto& part : parts)
    for (auto& e : part) entries.push_back(std::move(e));
  return assemble(p, pk, box, entries);
}

LaurentPoly mul_packed(const LaurentPoly& p, const LaurentPoly& q, bool parallel) {
  require_same(p, q);
  if (p.is_zero() || q.is_zero()) return LaurentPoly(p.vars());
  Box box = product_box(p, q);
  if (detail::choose_key_width(box.width) == detail::KeyWidth::Bits64)
    return mul_packed_impl<std::uint64_t>(p, q, box, parallel);
  return mul_packed_impl<detail::u128>(p, q, box, parallel);
}

}  // namespace

LaurentPoly mul_reference(const LaurentPoly& p, const LaurentPoly& q) {
  require_same(p, q);
  const std::size_t n = p.nvars();
  std::map<std::vector<Exponent>, BigInt> acc;
  std::vector<Exponent> e(n);
  for (std::size_t i = 0; i < p.nterms(); ++i) {
    for (std::size_t j = 0; j < q.nterms(); ++j) {
      for (std::size_t v = 0; v < n; ++v)
        e[v] = detail::checked_exponent(std::int64_t{p.exponent(i)[v]} + q.exponent(j)[v]);
      acc[e] += p.coef(i) * q.coef(j);
    }
  }
  std::vector<Exponent> exps;
  std::vector<BigInt> coefs;
  for (auto& [key, c] : acc) {
    if (c == 0) continue;
    exps.insert(exps.end(), key.begin(), key.end());
    coefs.push_back(std::move(c));
  }
  return LaurentPoly::from_canonical(p.vars(), std::move(exps), std::move(coefs));
}

LaurentPoly mul_packed_serial(const LaurentPoly& p, const LaurentPoly& q) { return mul_packed(p, q, false); }

LaurentPoly mul_packed_parallel(const LaurentPoly& p, const LaurentPoly& q) { return mul_packed(p, q, true); }

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) {
  require_same(p, q);
  if (p.is_zero() || q.is_zero()) return LaurentPoly(p.vars());
  try {
    detail::choose_key_width(product_box(p, q).width);
  } catch (const Error&) {
    return mul_reference(p, q);
  }
  const bool big = p.nterms() * q.nterms() >= kParallelThreshold;
  return mul_packed(p, q, big && omp_get_max_threads() > 1);
}

}  // namespace cpl::algebra::kernels

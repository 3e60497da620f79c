#include "cpl/zsystem/z_sequence.hpp"

#include <memory>

#include "cpl/algebra/error.hpp"

namespace cpl::zsys {

bool ZMonomial::integral() const {
  for (const auto& e : exps)
    if (e.get_den() != 1) return false;
  return true;
}

ZSequence ZSequence::ones() {
  ZSequence z;
  z.numeric_ = [](std::size_t) { return BigRational(1); };
  z.symbolic_ = [](std::size_t) { return ZMonomial{}; };
  return z;
}

ZSequence ZSequence::table(std::vector<BigRational> values) {
  for (const auto& v : values)
    if (v == 0) throw Error(Errc::ZeroInitial, "Z-sequence entries must be nonzero");
  ZSequence z;
  z.size_ = values.size();
  auto data = std::make_shared<const std::vector<BigRational>>(std::move(values));
  z.numeric_ = [data](std::size_t n) { return (*data)[n]; };
  return z;
}

namespace {

std::vector<std::string> geometric_symbols(std::size_t period) {
  std::vector<std::string> s;
  if (period == 1) {
    s.push_back("beta");
  } else {
    for (std::size_t k = 0; k < period; ++k) s.push_back("beta" + std::to_string(k));
  }
  s.push_back("q");
  return s;
}

std::function<ZMonomial(std::size_t)> geometric_monomial(std::size_t period) {
  return [period](std::size_t n) {
    ZMonomial m;
    m.exps.assign(period + 1, BigRational(0));
    m.exps[n % period] = 1;
    m.exps[period] = static_cast<unsigned long>(n);
    return m;
  };
}

}  // namespace

ZSequence ZSequence::geometric_symbolic(std::size_t period) {
  if (period == 0) throw Error(Errc::DomainError, "period must be positive");
  ZSequence z;
  z.symbols_ = geometric_symbols(period);
  z.symbolic_ = geometric_monomial(period);
  return z;
}

ZSequence ZSequence::geometric(std::vector<BigRational> betas, BigRational q) {
  if (betas.empty()) throw Error(Errc::DomainError, "need at least one beta");
  for (const auto& b : betas)
    if (b == 0) throw Error(Errc::ZeroInitial, "beta must be nonzero");
  if (q == 0) throw Error(Errc::ZeroInitial, "q must be nonzero");
  ZSequence z = geometric_symbolic(betas.size());
  auto b = std::make_shared<const std::vector<BigRational>>(std::move(betas));
  z.numeric_ = [b, q](std::size_t n) -> BigRational { return (*b)[n % b->size()] * algebra::pow(q, static_cast<long>(n)); };
  return z;
}

ZSequence ZSequence::custom(std::function<BigRational(std::size_t)> numeric, std::vector<std::string> symbols,
                            std::function<ZMonomial(std::size_t)> symbolic, std::optional<std::size_t> size) {
  ZSequence z;
  z.numeric_ = std::move(numeric);
  z.symbols_ = std::move(symbols);
  z.symbolic_ = std::move(symbolic);
  z.size_ = size;
  return z;
}

void ZSequence::check_index(std::size_t n) const {
  if (size_ && n >= *size_)
    throw Error(Errc::IndexOutOfRange, "Z_" + std::to_string(n) + " beyond the " + std::to_string(*size_) + " tabulated values");
}

BigRational ZSequence::value(std::size_t n) const {
  check_index(n);
  if (!numeric_) throw Error(Errc::DomainError, "Z-sequence has no numeric values");
  return numeric_(n);
}

ZMonomial ZSequence::monomial(std::size_t n) const {
  check_index(n);
  if (!symbolic_) throw Error(Errc::DomainError, "Z-sequence has no symbolic form");
  return symbolic_(n);
}

ZSequence ZSequence::perturbed(std::size_t n, const BigRational& factor) const {
  if (!numeric_) throw Error(Errc::DomainError, "Z-sequence has no numeric values");
  ZSequence z;
  z.size_ = size_;
  auto base = numeric_;
  z.numeric_ = [base, n, factor](std::size_t k) -> BigRational { return k == n ? base(k) * factor : base(k); };
  return z;
}

}  // namespace cpl::zsys

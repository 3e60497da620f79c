#include "cpl/algebra/bigint.hpp"

#include <climits>

#include "cpl/algebra/error.hpp"

namespace cpl {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::DivisionFails: return "DivisionFails";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::NotPalindromic: return "NotPalindromic";
    case Errc::NotPeriod1: return "NotPeriod1";
    case Errc::NonLaurentIterate: return "NonLaurentIterate";
    case Errc::ZeroEncountered: return "ZeroEncountered";
    case Errc::TermLimitExceeded: return "TermLimitExceeded";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::AlgebraicZCase: return "AlgebraicZCase";
    case Errc::ZeroTuple: return "ZeroTuple";
    case Errc::ZeroInitial: return "ZeroInitial";
    case Errc::ZeroComponent: return "ZeroComponent";
    case Errc::EliminationFailed: return "EliminationFailed";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::DomainError: return "DomainError";
    case Errc::InsufficientWindow: return "InsufficientWindow";
    case Errc::NonPositiveInitial: return "NonPositiveInitial";
    case Errc::NonPositiveParameter: return "NonPositiveParameter";
    case Errc::TooShort: return "TooShort";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::ZeroProduct: return "ZeroProduct";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

namespace algebra {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

template <class F>
void for_each_field(std::string_view text, F&& f) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    f(trim(text.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text))
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::ZeroDivisor, "zero denominator in '" + std::string(text) + "'");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt pow(const BigInt& z, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

BigRational pow(const BigRational& q, long e) {
  if (e == 0) return BigRational(1);
  if (q == 0) {
    if (e < 0) throw Error(Errc::ZeroDivisor, "zero raised to a negative power");
    return BigRational(0);
  }
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigInt num = pow(BigInt(q.get_num()), m);
  BigInt den = pow(BigInt(q.get_den()), m);
  BigRational r = e < 0 ? BigRational(den, num) : BigRational(num, den);
  r.canonicalize();
  return r;
}

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw Error(Errc::ExponentOverflow, "integer " + z.get_str() + " exceeds machine range");
  return z.get_si();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt abs(const BigInt& z) { return z < 0 ? BigInt(-z) : z; }
int sign(const BigInt& z) { return sgn(z); }
int sign(const BigRational& q) { return sgn(q); }

BigInt content(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::vector<BigRational> parse_rational_list(std::string_view text) {
  std::vector<BigRational> out;
  for_each_field(text, [&](std::string_view f) { out.push_back(parse_rational(f)); });
  return out;
}

std::vector<long> parse_int_list(std::string_view text) {
  std::vector<long> out;
  for_each_field(text, [&](std::string_view f) { out.push_back(to_long(parse_integer(f))); });
  return out;
}

}  // namespace algebra
}  // namespace cpl

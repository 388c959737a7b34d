#include "p1bimod/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "p1bimod/error.hpp"

namespace p1bimod {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotContained: return "NOT_CONTAINED";
    case ErrorCode::SingularPencil: return "SINGULAR_PENCIL";
    case ErrorCode::SplitFailure: return "SPLIT_FAILURE";
    case ErrorCode::NoStabilization: return "NO_STABILIZATION";
    case ErrorCode::EqualPoints: return "EQUAL_POINTS";
    case ErrorCode::WindowMismatch: return "WINDOW_MISMATCH";
    case ErrorCode::WindowTooSmall: return "WINDOW_TOO_SMALL";
    case ErrorCode::NotAdmissible: return "NOT_ADMISSIBLE";
    case ErrorCode::FieldExhausted: return "FIELD_EXHAUSTED";
    case ErrorCode::IsoNotFound: return "ISO_NOT_FOUND";
    case ErrorCode::Disagreement: return "DISAGREEMENT";
    case ErrorCode::Format: return "FORMAT";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 reduce_mpz(const mpz_class& z, u64 p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p)) {
    throw EngineError(ErrorCode::Format, "field characteristic " + std::to_string(p) +
                                             " is not a prime below 2^62");
  }
  return Field(p);
}

Field Field::from_tag(std::string_view tag) {
  if (tag == "Q") return rationals();
  if (tag.starts_with("Fp:")) {
    auto digits = tag.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw EngineError(ErrorCode::Format, "bad field tag '" + std::string(tag) + "'");
    }
    return prime(p);
  }
  throw EngineError(ErrorCode::Format, "bad field tag '" + std::string(tag) + "'");
}

std::string Field::tag() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar Field::zero() const {
  Scalar s;
  s.p_ = p_;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = mpq_class(mpz_class(std::to_string(v)));
  } else {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    s.r_ = static_cast<u64>(m);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  u64 den = reduce_mpz(q.get_den(), p_);
  if (den == 0) {
    throw EngineError(ErrorCode::Format, "denominator vanishes modulo " + std::to_string(p_));
  }
  s.r_ = mulmod(reduce_mpz(q.get_num(), p_), powmod(den, p_ - 2, p_), p_);
  return s;
}

Scalar Field::parse(std::string_view text) const {
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view t) {
    return std::string(t.starts_with('+') ? t.substr(1) : t);
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.starts_with('-')) {
    throw EngineError(ErrorCode::Format, "bad scalar '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num));
  mpz_class d(strip_plus(den));
  if (d == 0) throw EngineError(ErrorCode::Format, "zero denominator in '" + std::string(text) + "'");
  return from_rational(mpq_class(n, d));
}

Field Scalar::field() const { return Field(p_); }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = powmod(r_, p_ - 2, p_);
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, p_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (p_ == 0) {
    q_ /= o.q_;
  } else {
    r_ = mulmod(r_, powmod(o.r_, p_ - 2, p_), p_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = p_ - r_;
  }
  return s;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (p_ == 0) {
    check_same(a);
    check_same(b);
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    q_ += a.q_ * b.q_;
  } else {
    check_same(a);
    check_same(b);
    r_ = static_cast<u64>((u128(a.r_) * b.r_ + r_) % p_);
  }
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
  if (p_ == 0) {
    check_same(a);
    check_same(b);
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    q_ -= a.q_ * b.q_;
  } else {
    check_same(a);
    check_same(b);
    u64 prod = mulmod(a.r_, b.r_, p_);
    r_ = r_ >= prod ? r_ - prod : r_ + p_ - prod;
  }
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) {
    int c = cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return r_ <=> o.r_;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

}  // namespace p1bimod

#include "homalg/scalar.hpp"

#include <charconv>

#include "homalg/error.hpp"

namespace homalg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 62;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw InvariantViolation("bad prime " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rational();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* b = text.data() + 3;
    const char* e = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(b, e, p);
    if (ec == std::errc() && ptr == e && b != e) return prime(p);
  }
  throw InvariantViolation("bad field '" + text + "'");
}

Scalar Scalar::zero(Field f) {
  Scalar s;
  s.field_ = f;
  if (!f.is_rational()) s.value_ = std::uint64_t{0};
  return s;
}

Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.value_ = mpq_class(mpz_class(std::to_string(v)));
  } else {
    const auto p = f.characteristic();
    const std::uint64_t mag = v < 0 ? std::uint64_t(-(v + 1)) + 1 : std::uint64_t(v);
    std::uint64_t r = mag % p;
    if (v < 0 && r != 0) r = p - r;
    s.value_ = r;
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s;
  mpq_class c(q);
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
  auto bad = [&] { return InvariantViolation("bad scalar '" + text + "' for field " + f.to_string()); };
  if (text.empty()) throw bad();
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den);
  if (d == 0) throw DivisionByZero("scalar '" + text + "'");
  if (f.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    Scalar s;
    s.value_ = std::move(q);
    return s;
  }
  const mpz_class p(std::to_string(f.characteristic()));
  auto residue = [&](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    return Scalar::from_int(f, std::stoll(r.get_str()));
  };
  Scalar dn = residue(d);
  return residue(n) / dn;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) {
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::to_string(std::get<std::uint64_t>(value_));
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(value_); }

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch(field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    mpq_neg(q.get_mpq_t(), q.get_mpq_t());
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    if (v) v = field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(o.value_);
    if (v >= p) v -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    const auto w = std::get<std::uint64_t>(o.value_);
    v = v >= w ? v - w : v + (p - w);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(r.value_);
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  } else {
    const auto p = field_.characteristic();
    std::get<std::uint64_t>(r.value_) = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw DivisionByZero("division by zero");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
    return *this;
  }
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (field_.is_rational()) {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(),
            std::get<mpq_class>(b.value_).get_mpq_t());
    auto& q = std::get<mpq_class>(value_);
    mpq_sub(q.get_mpq_t(), q.get_mpq_t(), t.get_mpq_t());
  } else {
    const auto p = field_.characteristic();
    const auto w = mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), p);
    auto& v = std::get<std::uint64_t>(value_);
    v = v >= w ? v - w : v + (p - w);
  }
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (field_.is_rational()) {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(),
            std::get<mpq_class>(b.value_).get_mpq_t());
    auto& q = std::get<mpq_class>(value_);
    mpq_add(q.get_mpq_t(), q.get_mpq_t(), t.get_mpq_t());
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v += mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), p);
    if (v >= p) v -= p;
  }
}

void Scalar::set_zero() {
  if (field_.is_rational()) {
    mpq_set_ui(std::get<mpq_class>(value_).get_mpq_t(), 0, 1);
  } else {
    std::get<std::uint64_t>(value_) = 0;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

}  // namespace homalg

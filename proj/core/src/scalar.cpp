#include "nilrad/scalar.hpp"

#include <cctype>

namespace nilrad {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  for (std::uint64_t f = 11; f * f <= p; f += 6) {
    if (p % f == 0 || p % (f + 2) == 0) return false;
  }
  return true;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& raw) {
  std::string s = trim(raw);
  if (s == "Q" || s == "q") return rationals();
  std::string digits;
  if (s.rfind("Fp:", 0) == 0)
    digits = s.substr(3);
  else if (!s.empty() && (s[0] == 'F' || s[0] == 'f'))
    digits = s.substr(1);
  else
    throw InputError("cannot parse field '" + raw + "' (expected Q, F<p> or Fp:<p>)");
  if (digits.empty()) throw InputError("missing modulus in field '" + raw + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("bad modulus in field '" + raw + "'");
  return prime(std::stoull(digits));
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    const std::uint64_t p = f.characteristic();
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  s.field_ = Field::rationals();
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& raw) {
  std::string s = trim(raw);
  if (s.empty()) throw InputError("empty scalar literal");
  try {
    if (f.is_rational()) {
      mpq_class q(s);
      q.canonicalize();
      if (q.get_den() == 0) throw InputError("zero denominator in scalar '" + raw + "'");
      return from_mpq(q);
    }
    const std::uint64_t p = f.characteristic();
    std::string body = s;
    const auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
      const std::string mod = trim(s.substr(mod_pos + 5));
      if (mod != std::to_string(p))
        throw InputError("scalar '" + raw + "' has modulus " + mod + ", field expects " +
                         std::to_string(p));
      body = trim(s.substr(0, mod_pos));
    }
    const auto slash = body.find('/');
    if (slash != std::string::npos) {
      const Scalar num = parse(f, body.substr(0, slash));
      const Scalar den = parse(f, body.substr(slash + 1));
      return num / den;
    }
    mpz_class z(body);
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return from_int(f, r.get_si());
  } catch (const std::invalid_argument&) {
    throw InputError("cannot parse scalar '" + raw + "' over " + f.name());
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.characteristic(); }

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw DimensionError("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ += o.q_;
  else
    s.r_ = addmod(r_, o.r_, field_.characteristic());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else if (r_ != 0)
    s.r_ = field_.characteristic() - r_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ *= o.q_;
  else
    s.r_ = mulmod(r_, o.r_, field_.characteristic());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero in " + field_.name());
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = powmod(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
}

std::size_t Scalar::bit_size() const {
  if (!field_.is_rational()) return mpz_sizeinbase(mpz_class(field_.characteristic()).get_mpz_t(), 2);
  const std::size_t nb = mpz_sizeinbase(q_.get_num().get_mpz_t(), 2);
  const std::size_t db = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
  return nb > db ? nb : db;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error("rational() called on prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("residue() called on rational scalar");
  return r_;
}

}  // namespace nilrad

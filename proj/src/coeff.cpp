#include "sfdga/coeff.hpp"

#include <charconv>

#include "sfdga/error.hpp"

namespace sfdga {

RingSpec RingSpec::integers_mod(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Z/n requires n >= 2");
  if (n > (std::uint64_t{1} << 62)) throw Error(ErrorKind::InvalidArgument, "modulus too large");
  return RingSpec(RingKind::IntegersMod, n);
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "int") return integers();
  if (text == "rat") return rationals();
  constexpr std::string_view prefix = "zmod:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
      return integers_mod(n);
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown ring '" + std::string(text) + "' (expected int, rat or zmod:<n>)");
}

bool RingSpec::is_field() const {
  if (kind_ == RingKind::Rationals) return true;
  if (kind_ == RingKind::Integers) return false;
  return mpz_probab_prime_p(mpz_class(std::to_string(modulus_)).get_mpz_t(), 30) != 0;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "int";
    case RingKind::Rationals: return "rat";
    case RingKind::IntegersMod: return "zmod:" + std::to_string(modulus_);
  }
  return "?";
}

namespace {

mpz_class modulus_of(const RingSpec& ring) { return mpz_class(std::to_string(ring.modulus())); }

void require_same(const Coefficient& a, const Coefficient& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorKind::MixedRings, a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

Coefficient::Coefficient(RingSpec ring, long value) : ring_(ring), value_(value) { canonicalize(); }

Coefficient::Coefficient(RingSpec ring, mpq_class value) : ring_(ring), value_(std::move(value)) {
  value_.canonicalize();
  if (ring_.kind() != RingKind::Rationals && value_.get_den() != 1) {
    // Only reachable for Z/n with a unit denominator.
    Coefficient den(ring_, mpq_class(value_.get_den()));
    Coefficient num(ring_, mpq_class(value_.get_num()));
    if (!den.is_unit())
      throw Error(ErrorKind::NotAUnit, "denominator " + den.to_string() + " in " + ring_.to_string());
    *this = num * den.unit_inverse();
    return;
  }
  canonicalize();
}

void Coefficient::canonicalize() {
  if (ring_.kind() == RingKind::IntegersMod) {
    mpz_class r = value_.get_num();
    mpz_class n = modulus_of(ring_);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    value_ = r;
  } else {
    value_.canonicalize();
  }
}

Coefficient Coefficient::parse(RingSpec ring, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0 || s.empty())
    throw Error(ErrorKind::SyntaxError, "bad coefficient '" + s + "'");
  q.canonicalize();
  if (q.get_den() == 0) throw Error(ErrorKind::SyntaxError, "zero denominator in '" + s + "'");
  if (ring.kind() == RingKind::Integers && q.get_den() != 1)
    throw Error(ErrorKind::NotAUnit, "fraction '" + s + "' is not an integer");
  return Coefficient(ring, q);
}

bool Coefficient::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return value_ == 1 || value_ == -1;
    case RingKind::Rationals: return value_ != 0;
    case RingKind::IntegersMod: {
      mpz_class g;
      mpz_class n = modulus_of(ring_);
      mpz_class v = value_.get_num();
      mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Coefficient Coefficient::unit_inverse() const {
  if (!is_unit()) throw Error(ErrorKind::NotAUnit, to_string() + " in " + ring_.to_string());
  switch (ring_.kind()) {
    case RingKind::Integers: return *this;
    case RingKind::Rationals: return Coefficient(ring_, mpq_class(1) / value_);
    case RingKind::IntegersMod: {
      mpz_class inv;
      mpz_class n = modulus_of(ring_);
      mpz_class v = value_.get_num();
      mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
      return Coefficient(ring_, mpq_class(inv));
    }
  }
  return *this;
}

std::string Coefficient::to_string() const { return value_.get_str(); }

Coefficient Coefficient::operator-() const { return Coefficient(ring_, mpq_class(-value_)); }

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  return Coefficient(a.ring_, mpq_class(a.value_ + b.value_));
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  return Coefficient(a.ring_, mpq_class(a.value_ - b.value_));
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  return Coefficient(a.ring_, mpq_class(a.value_ * b.value_));
}

}  // namespace sfdga

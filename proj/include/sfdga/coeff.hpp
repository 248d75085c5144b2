#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sfdga {

enum class RingKind { Integers, Rationals, IntegersMod };

// One of Z, Q or Z/n. Textual form: "int", "rat", "zmod:<n>".
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  static RingSpec integers_mod(std::uint64_t n);
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const;
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;  // 0 unless IntegersMod
};

// An exact element of a RingSpec, always kept in canonical form: integers
// have denominator 1, rationals are reduced with positive denominator and
// residues lie in [0, n).
class Coefficient {
 public:
  Coefficient(RingSpec ring, long value);
  Coefficient(RingSpec ring, mpq_class value);

  static Coefficient zero(RingSpec ring) { return Coefficient(ring, 0L); }
  static Coefficient one(RingSpec ring) { return Coefficient(ring, 1L); }
  // Accepts "n" or "n/d"; a fraction is allowed outside Q only when the
  // denominator is a unit of the ring.
  static Coefficient parse(RingSpec ring, std::string_view text);

  const RingSpec& ring() const { return ring_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_unit() const;
  Coefficient unit_inverse() const;

  // True when the printed form carries a leading minus sign.
  bool is_negative() const { return value_ < 0; }

  std::string to_string() const;

  Coefficient operator-() const;
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  Coefficient& operator+=(const Coefficient& b) { return *this = *this + b; }
  Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  void canonicalize();

  RingSpec ring_;
  mpq_class value_;
};

inline Coefficient ring_add(const Coefficient& a, const Coefficient& b) { return a + b; }
inline Coefficient ring_mul(const Coefficient& a, const Coefficient& b) { return a * b; }

}  // namespace sfdga

#pragma once

#include <cstdint>
#include <string>

namespace edgeideals {

/// Coefficient field for homology: the rationals (default) or a prime field.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t prime = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime_field(std::uint32_t p);  // validates primality

  bool is_rationals() const { return kind == Kind::Rationals; }

  std::string to_string() const;            // "q" or "p:<prime>"
  static FieldSpec parse(const std::string& text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace edgeideals

#include "edgeideals/field.hpp"

#include "edgeideals/errors.hpp"

namespace edgeideals {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field: " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.prime = p;
  return f;
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "q" : "p:" + std::to_string(prime);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q") return rationals();
  if (text.rfind("p:", 0) == 0) {
    try {
      unsigned long v = std::stoul(text.substr(2));
      if (v > 0xffffffffull) throw InputError("field: prime too large");
      return prime_field(static_cast<std::uint32_t>(v));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("field: cannot parse '" + text + "'");
    }
  }
  throw InputError("field: expected 'q' or 'p:<prime>', got '" + text + "'");
}

}  // namespace edgeideals

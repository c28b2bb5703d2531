#pragma once

namespace oddjacobi {

/// Grassmann parity. Addition is mod 2.
enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return Parity((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

/// Koszul sign (-1)^{ab} picked up when two homogeneous factors swap.
constexpr int koszul_sign(Parity a, Parity b) {
  return (is_odd(a) && is_odd(b)) ? -1 : 1;
}

/// (-1)^p as a plain integer sign.
constexpr int sign_of(Parity p) { return is_odd(p) ? -1 : 1; }

constexpr const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

}  // namespace oddjacobi

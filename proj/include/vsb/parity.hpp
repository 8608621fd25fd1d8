#pragma once

#include <cstdint>

namespace vsb {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

inline bool is_odd(Parity p) { return p == Parity::Odd; }

// Koszul sign: -1 iff both arguments are odd.
inline int epsilon_sign(Parity a, Parity b) {
    return (is_odd(a) && is_odd(b)) ? -1 : 1;
}

} // namespace vsb

#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace locmod {

// Elements carry their own ring context, so zero/one are obtained from a
// prototype element rather than from a static.
template <class E>
concept RingElement = std::copyable<E> && requires(const E& a, const E& b, std::int64_t k) {
  { a + b } -> std::convertible_to<E>;
  { a - b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { -a } -> std::convertible_to<E>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<E>;
  { a.one_like() } -> std::convertible_to<E>;
  { a.from_int(k) } -> std::convertible_to<E>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <class E>
struct ring_traits {
  static constexpr bool is_field = false;
};

template <class E>
inline constexpr bool is_field_v = ring_traits<E>::is_field;

template <RingElement E>
E power(E base, unsigned e) {
  E acc = base.one_like();
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace locmod

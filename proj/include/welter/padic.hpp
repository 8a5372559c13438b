// Carry-free base-p arithmetic and digit handling.
//
// Every natural number is viewed as its little-endian digit sequence
// (x_0, x_1, ...) in base p. The carry-free sum and difference act on
// each digit independently modulo p.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace welter {

using Nat = std::uint64_t;

/// Radix of the carry-free arithmetic. Any integer >= 2 is accepted; primality
/// is only required by the representation checks in repcheck.hpp.
class Base {
public:
  constexpr explicit Base(Nat p) : p_(p) {
    if (p < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(p));
  }
  constexpr Nat value() const noexcept { return p_; }
  constexpr operator Nat() const noexcept { return p_; }

private:
  Nat p_;
};

/// p^e, throwing on overflow.
inline Nat power(Base p, unsigned e) {
  Nat r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<Nat>::max() / p.value()) throw std::overflow_error("p^e overflows 64 bits");
    r *= p.value();
  }
  return r;
}

/// Canonical little-endian digit sequence (no trailing zeros).
class DigitSeq {
public:
  DigitSeq(Base p) : p_(p) {}

  static DigitSeq from_value(Nat x, Base p) {
    DigitSeq d(p);
    while (x != 0) {
      d.digits_.push_back(static_cast<unsigned>(x % p.value()));
      x /= p.value();
    }
    return d;
  }

  /// Builds from explicit digits; each must lie in [0, p). Trailing zeros are trimmed.
  static DigitSeq from_digits(std::vector<unsigned> digits, Base p) {
    for (unsigned v : digits)
      if (v >= p.value()) throw std::invalid_argument("digit out of range for base " + std::to_string(p.value()));
    DigitSeq d(p);
    d.digits_ = std::move(digits);
    d.trim();
    return d;
  }

  Nat value() const {
    Nat v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * p_.value() + *it;
    return v;
  }

  /// Digit L; zero beyond the stored length.
  unsigned operator[](std::size_t L) const { return L < digits_.size() ? digits_[L] : 0u; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Base base() const noexcept { return p_; }
  std::span<const unsigned> digits() const noexcept { return digits_; }

  bool operator==(const DigitSeq& o) const { return p_.value() == o.p_.value() && digits_ == o.digits_; }

private:
  void trim() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  }

  Base p_;
  std::vector<unsigned> digits_;
};

/// Digit L of x in base p.
inline unsigned digit(Nat x, unsigned L, Base p) {
  for (unsigned i = 0; i < L && x != 0; ++i) x /= p.value();
  return static_cast<unsigned>(x % p.value());
}

namespace detail {

template <class Op>
Nat digitwise(Nat x, Nat y, Base p, Op op) {
  Nat result = 0, scale = 1;
  const Nat b = p.value();
  while (x != 0 || y != 0) {
    const Nat d = op(x % b, y % b, b);
    result += d * scale;
    x /= b;
    y /= b;
    if (x != 0 || y != 0) scale *= b;
  }
  return result;
}

}  // namespace detail

/// Carry-free addition: digit L of the result is (x_L + y_L) mod p.
inline Nat oplus(Nat x, Nat y, Base p) {
  return detail::digitwise(x, y, p, [](Nat a, Nat b, Nat m) { return (a + b) % m; });
}

/// Borrow-free subtraction: digit L of the result is (x_L - y_L) mod p.
inline Nat ominus(Nat x, Nat y, Base p) {
  return detail::digitwise(x, y, p, [](Nat a, Nat b, Nat m) { return (a + m - b) % m; });
}

/// Residue of a (possibly negative) integer modulo p^L, i.e. the truncation
/// x_{<L}. Truncated arithmetic is done by computing in Z first and then
/// calling this.
inline Nat truncate(std::int64_t x, unsigned L, Base p) {
  const auto mod = static_cast<std::int64_t>(power(p, L));
  const std::int64_t r = x % mod;
  return static_cast<Nat>(r < 0 ? r + mod : r);
}

/// p-adic order; ord(0) is infinite.
class Order {
public:
  static constexpr Order infinite() noexcept { return Order(); }
  static constexpr Order finite(unsigned v) noexcept { return Order(v); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  /// Finite value; throws on infinity.
  unsigned value() const {
    if (infinite_) throw std::logic_error("order is infinite");
    return value_;
  }

  constexpr bool operator==(const Order& o) const noexcept {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const Order& o) const noexcept {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
  constexpr Order() noexcept : infinite_(true), value_(0) {}
  constexpr explicit Order(unsigned v) noexcept : infinite_(false), value_(v) {}

  bool infinite_;
  unsigned value_;
};

inline Order ordp(Nat x, Base p) {
  if (x == 0) return Order::infinite();
  unsigned L = 0;
  while (x % p.value() == 0) {
    x /= p.value();
    ++L;
  }
  return Order::finite(L);
}

/// x (-) (x - 1) = sum_{L <= ord(x)} p^L: the digits touched when 1 is
/// subtracted from x.
inline Nat borrow_mask(Nat x, Base p) {
  if (x == 0) throw std::invalid_argument("borrow_mask requires x >= 1");
  const unsigned top = ordp(x, p).value();
  Nat r = 0;
  for (unsigned L = 0; L <= top; ++L) r += power(p, L);
  return r;
}

/// Strict total order on finitely supported sequences: compare at the highest
/// index where they differ. Entries may exceed p (used on tower rows).
template <class A, class B>
bool top_digit_less(const A& a, const B& b) {
  const std::size_t n = std::max(std::size(a), std::size(b));
  for (std::size_t i = n; i-- > 0;) {
    const Nat x = i < std::size(a) ? static_cast<Nat>(a[i]) : 0;
    const Nat y = i < std::size(b) ? static_cast<Nat>(b[i]) : 0;
    if (x != y) return x < y;
  }
  return false;
}

/// Highest index where two sequences differ, or -1 if equal.
template <class A, class B>
int top_difference(const A& a, const B& b) {
  const std::size_t n = std::max(std::size(a), std::size(b));
  for (std::size_t i = n; i-- > 0;) {
    const Nat x = i < std::size(a) ? static_cast<Nat>(a[i]) : 0;
    const Nat y = i < std::size(b) ? static_cast<Nat>(b[i]) : 0;
    if (x != y) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace welter

// Degrees of the irreducible characters of the symmetric group, their p-adic
// valuations, and the link between "degree prime to p" and Grundy values.
// Only degrees are handled; no representation is ever built.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

#include "welter/board.hpp"
#include "welter/enumerate.hpp"
#include "welter/grundy.hpp"
#include "welter/report.hpp"

namespace welter {

using BigNat = boost::multiprecision::cpp_int;

inline bool is_prime(Nat n) {
  if (n < 2) return false;
  for (Nat d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime base; the representation-theoretic statements need it.
class Prime {
public:
  explicit Prime(Nat p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  Nat value() const noexcept { return p_.value(); }
  operator Base() const noexcept { return p_; }

private:
  Base p_{2};
};

inline constexpr Nat kDefaultDegreeCap = 40;

/// Hook-length formula n! / prod(hooks), exact.
inline BigNat degree_exact(const Partition& lam, Nat cap = kDefaultDegreeCap) {
  const Nat n = lam.size();
  if (n > cap) throw std::length_error("degree: |lambda| = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  BigNat num = 1;
  for (Nat i = 2; i <= n; ++i) num *= i;
  BigNat den = 1;
  for (Nat h : hook_lengths(lam)) den *= h;
  if (num % den != 0) throw std::logic_error("hook-length quotient is not integral for " + to_string(lam));
  return num / den;
}

inline Nat valuation(Nat x, Nat p) {
  Nat v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline Nat valuation(const BigNat& x, Nat p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  BigNat y = x;
  Nat v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

/// nu_p(n!) - sum over cells of nu_p(hook length).
inline Nat degree_valuation(const Partition& lam, Prime p) {
  Nat fact = 0;
  for (Nat i = 2; i <= lam.size(); ++i) fact += valuation(i, p.value());
  Nat hooks = 0;
  for (Nat h : hook_lengths(lam)) hooks += valuation(h, p.value());
  if (hooks > fact) throw std::logic_error("negative valuation for " + to_string(lam));
  return fact - hooks;
}

/// Grundy value of the diagram: the closed form on any position realising it.
inline Nat sg_of(const Partition& lam, Base p) { return sg_tower(position_of(lam, lam.length()), p).value; }

/// sg(lam) = |lam|; equivalent to the degree being prime to p.
inline bool macdonald_prime_to_p(const Partition& lam, Prime p) { return sg_of(lam, p) == lam.size(); }

/// mu inside lam with |mu| = sg(lam) and degree prime to p, or nothing if the
/// search fails (which would refute the corollary). sg = 0 gives the empty
/// partition and sg = 1 the single cell, since Sym(0) = Sym(1).
inline std::optional<Partition> corollary_witness(const Partition& lam, Prime p, Nat cap = kDefaultDegreeCap) {
  if (lam.size() > cap)
    throw std::length_error("witness: |lambda| = " + std::to_string(lam.size()) + " exceeds cap " + std::to_string(cap));
  const Nat target = sg_of(lam, p);
  for (auto& mu : sub_partitions_of_size(lam, target))
    if (degree_valuation(mu, p) == 0) return mu;
  return std::nullopt;
}

/// Both halves of the corollary for every partition of every n <= n_max.
inline Report verify_corollary(Nat n_max, Prime p) {
  Report r{"corollary", "p=" + std::to_string(p.value()) + " nmax=" + std::to_string(n_max)};
  for (Nat n = 0; n <= n_max; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const bool coprime = degree_valuation(lam, p) == 0;
      r.expect(coprime == macdonald_prime_to_p(lam, p),
               to_string(lam) + ": degree prime to p is " + (coprime ? "true" : "false") + " but sg = " +
                   std::to_string(sg_of(lam, p)));
      const auto mu = corollary_witness(lam, p);
      r.expect(mu && mu->contained_in(lam) && mu->size() == sg_of(lam, p) && degree_valuation(*mu, p) == 0,
               to_string(lam) + ": no restriction component of degree prime to p");
    }
  }
  return r;
}

/// The equivalence half only: valuation zero iff sg = n.
inline Report verify_macdonald(Nat n_max, Prime p) {
  Report r{"macdonald", "p=" + std::to_string(p.value()) + " nmax=" + std::to_string(n_max)};
  for (Nat n = 0; n <= n_max; ++n)
    for (const auto& lam : partitions_of(n))
      r.expect((degree_valuation(lam, p) == 0) == macdonald_prime_to_p(lam, p), to_string(lam));
  return r;
}

}  // namespace welter

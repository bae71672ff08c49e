#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cycposet/error.hpp"
#include "cycposet/poset.hpp"

namespace cycposet {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
  }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // strictly increasing primes
  std::uint64_t value = 1;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  Factorization f;
  f.value = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    PrimePower pp{d, 0};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
    }
    f.factors.push_back(pp);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

/// p^r || n: p^r divides n and p^(r+1) does not.
inline bool exactly_divides(std::uint64_t p, unsigned r, std::uint64_t n) {
  if (n == 0 || r == 0) return false;
  const std::uint64_t q = PrimePower{p, r}.value();
  return n % q == 0 && (n / q) % p != 0;
}

// Same test for a prime power given by value.
inline bool exactly_divides(std::uint64_t q, std::uint64_t n) {
  if (q < 2 || n == 0 || n % q) return false;
  const auto f = factorize(q);
  if (f.factors.size() != 1) return false;
  return (n / q) % f.factors[0].prime != 0;
}

inline bool is_prime_power(std::uint64_t q) { return q >= 2 && factorize(q).factors.size() == 1; }

/// b(1)=0, b(2)=1, b(3)=b(4)=b(5)=b(7)=3, b(q)=2 for every other prime power.
inline std::uint64_t b_value(std::uint64_t q) {
  if (q == 1) return 0;
  if (!is_prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
  switch (q) {
    case 2: return 1;
    case 3:
    case 4:
    case 5:
    case 7: return 3;
    default: return 2;
  }
}

/// Minimum number of points of a poset whose automorphism group is cyclic of order n.
inline std::uint64_t beta(std::uint64_t n) {
  if (n == 0) throw DomainError("beta is defined for n >= 1");
  std::uint64_t total = 0;
  for (const auto& pp : factorize(n).factors) total += b_value(pp.value()) * pp.value();
  if (exactly_divides(3, 1, n) && exactly_divides(2, 2, n)) --total;
  return total;
}

/// Z_n x {0,1,2} with (i,0)<(i,1)<(i,2) and (i,0)<(i+1,2); point (i,l) is 3i+l.
inline Poset frucht_poset(std::size_t n) {
  if (n < 3) throw DomainError("frucht_poset needs n >= 3");
  if (3 * n > kDefaultMaxPoints) throw CapacityError("frucht_poset too large");
  std::vector<Relation> r;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = [&](std::size_t j, std::size_t l) { return static_cast<Point>(3 * (j % n) + l); };
    r.emplace_back(at(i, 0), at(i, 1));
    r.emplace_back(at(i, 1), at(i, 2));
    r.emplace_back(at(i, 0), at(i + 1, 2));
    for (int l = 0; l < 3; ++l) labels.push_back("(" + std::to_string(i) + "," + std::to_string(l) + ")");
  }
  return make_poset(3 * n, r).with_labels(std::move(labels));
}

/// Two copies of Z_n: i (point i) < j' (point n+j) iff (j-i) mod n lies in S.
/// Elements of S are read modulo n.
inline Poset circulant_two_level(std::size_t n, const std::vector<std::size_t>& S) {
  if (n == 0) throw DomainError("circulant_two_level needs n >= 1");
  if (2 * n > kDefaultMaxPoints) throw CapacityError("circulant_two_level too large");
  std::vector<bool> in(n, false);
  for (std::size_t s : S) in[s % n] = true;
  std::vector<Relation> r;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) labels.push_back(std::to_string(j) + "'");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (in[(j + n - i) % n]) r.emplace_back(static_cast<Point>(i), static_cast<Point>(n + j));
  return make_poset(2 * n, r).with_labels(std::move(labels));
}

inline const std::vector<std::size_t>& standard_difference_set() {
  static const std::vector<std::size_t> s{0, 1, 2, 4};
  return s;
}

/// Poset with b(p^r) p^r points and automorphism group Z_{p^r}.
inline Poset prime_power_poset(std::uint64_t p, unsigned r) {
  if (r == 0) return Poset{};
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const std::uint64_t q = PrimePower{p, r}.value();
  if (q > kDefaultMaxPoints || b_value(q) * q > kDefaultMaxPoints)
    throw CapacityError("prime power " + std::to_string(q) + " needs more than " +
                        std::to_string(kDefaultMaxPoints) + " points");
  if (q == 2) return antichain(2);
  if (q == 3 || q == 4 || q == 5 || q == 7) return frucht_poset(q);
  return circulant_two_level(q, standard_difference_set());
}

/// 20 points with automorphism group Z_12. A = Z_6 (0..5), A' = Z_6 (6..11),
/// B = Z_4 (12..15), B' = Z_4 (16..19).
inline Poset z12_poset() {
  const auto a = [](int i) { return static_cast<Point>(((i % 6) + 6) % 6); };
  const auto a1 = [](int i) { return static_cast<Point>(6 + ((i % 6) + 6) % 6); };
  const auto b = [](int i) { return static_cast<Point>(12 + ((i % 4) + 4) % 4); };
  const auto b1 = [](int i) { return static_cast<Point>(16 + ((i % 4) + 4) % 4); };
  std::vector<Relation> r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const int d = ((j - i) % 6 + 6) % 6;
      if (d == 0 || d == 1 || d == 3) r.emplace_back(a(i), a1(j));
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int d = ((j - i) % 4 + 4) % 4;
      if (d == 0 || d == 1) r.emplace_back(b(i), b1(j));
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j) {
      if ((j - i) % 2 == 0) {
        r.emplace_back(b1(i), a1(j));
        r.emplace_back(b(i), a(j));
      }
      r.emplace_back(b(i), a1(j));
    }
  std::vector<std::string> labels;
  for (int i = 0; i < 6; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < 6; ++i) labels.push_back(std::to_string(i) + "'");
  for (int i = 0; i < 4; ++i) labels.push_back(std::to_string(i) + "''");
  for (int i = 0; i < 4; ++i) labels.push_back(std::to_string(i) + "'''");
  return make_poset(20, r).with_labels(std::move(labels));
}

/// Ordinal sum of prime_power_poset over the factorization of n in ascending
/// prime order. When 3 || n and 4 || n the parts for 4 and 3 are replaced by
/// z12_poset(), placed in the slot of the factor-2 part.
inline Poset minimal_poset(std::uint64_t n) {
  const auto f = factorize(n);
  const bool merge = exactly_divides(3, 1, n) && exactly_divides(2, 2, n);
  std::vector<Poset> parts;
  for (const auto& pp : f.factors) {
    if (merge && pp.prime == 3) continue;
    if (merge && pp.prime == 2) {
      parts.push_back(z12_poset());
      continue;
    }
    parts.push_back(prime_power_poset(pp.prime, pp.exponent));
  }
  if (parts.size() == 1) return parts.front();
  return ordinal_sum(parts);
}

}  // namespace cycposet

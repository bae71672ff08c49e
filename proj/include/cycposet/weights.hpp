#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cycposet/constructions.hpp"
#include "cycposet/error.hpp"
#include "cycposet/permutation.hpp"

namespace cycposet {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class WeightRule {
  exception_6,
  exception_12,
  exception_10_14,
  general,
};

inline const char* to_string(WeightRule r) {
  switch (r) {
    case WeightRule::exception_6: return "exception_6";
    case WeightRule::exception_12: return "exception_12";
    case WeightRule::exception_10_14: return "exception_10_14";
    case WeightRule::general: return "general";
  }
  return "?";
}

/// Weights w_q of one cycle of length l in a permutation of order n.
/// Satisfies sum_q w_q * q == l.
struct WeightVector {
  std::map<std::uint64_t, Rational> entries;  // only nonzero weights
  std::uint64_t cycle_length = 0;
  std::uint64_t modulus = 0;
  WeightRule rule = WeightRule::general;

  Rational operator[](std::uint64_t q) const {
    const auto it = entries.find(q);
    return it == entries.end() ? Rational(0) : it->second;
  }

  Rational weighted_length() const {
    Rational s = 0;
    for (const auto& [q, w] : entries) s += w * static_cast<std::int64_t>(q);
    return s;
  }
};

inline WeightVector weight_vector(std::uint64_t l, std::uint64_t n) {
  if (l < 2) throw DomainError("cycle length must be at least 2");
  if (n == 0 || n % l != 0)
    throw DomainError("cycle length " + std::to_string(l) + " does not divide " + std::to_string(n));
  WeightVector w;
  w.cycle_length = l;
  w.modulus = n;
  const bool three_exact = exactly_divides(3, 1, n);
  const bool two_exact = exactly_divides(2, 1, n);
  auto put = [&](std::uint64_t q, Rational v) {
    if (v != Rational(0)) w.entries[q] += v;
  };

  if (l == 6) {
    w.rule = WeightRule::exception_6;
    if (three_exact)
      put(3, 2);
    else if (two_exact)
      put(2, 3);
    else
      put(4, Rational(3, 2));
    return w;
  }
  if (l == 12) {
    w.rule = WeightRule::exception_12;
    if (three_exact)
      put(3, 4);
    else
      put(4, 3);
    return w;
  }
  if (l == 10 || l == 14) {
    w.rule = WeightRule::exception_10_14;
    const auto p = static_cast<std::int64_t>(l / 2);
    if (two_exact)
      put(2, 1);
    else
      put(4, Rational(1, 2));
    put(static_cast<std::uint64_t>(p), Rational(2 * (p - 1), p));
    return w;
  }

  w.rule = WeightRule::general;
  const auto f = factorize(l);
  const auto k = static_cast<std::int64_t>(f.factors.size());
  for (const auto& pp : f.factors) {
    const std::uint64_t q = pp.value();
    const auto others = static_cast<std::int64_t>(l / q);
    if (q == 2 && !two_exact)
      put(4, Rational(others, 2 * k));
    else
      put(q, Rational(others, k));
  }
  return w;
}

enum class AuditBranch {
  plain,            // sum_a w_q(a) >= b(q)
  combined_2_3,     // 3 || n and 2 || n: sum (2 w_2 + 3 w_3) >= 11
  combined_3_4,     // 3 || n and 4 || n: sum (4 w_4 + 3 w_3) >= 20
};

inline const char* to_string(AuditBranch b) {
  switch (b) {
    case AuditBranch::plain: return "plain";
    case AuditBranch::combined_2_3: return "combined_2_3";
    case AuditBranch::combined_3_4: return "combined_3_4";
  }
  return "?";
}

struct AuditConstraint {
  std::string name;   // e.g. "w_5", "2*w_2+3*w_3"
  AuditBranch branch = AuditBranch::plain;
  Rational value = 0;
  Rational bound = 0;
  bool passed = false;
};

struct AuditReport {
  std::uint64_t modulus = 0;
  std::map<std::uint64_t, Rational> per_prime_power_sums;
  std::map<std::uint64_t, AuditBranch> branch;  // for each q || n
  std::vector<AuditConstraint> constraints;
  bool passed = false;
  std::uint64_t lower_bound_points = 0;
};

inline std::uint64_t lcm_of(const CycleType& ct) { return ct.order(); }

/// Evaluates the lower-bound inequalities for a permutation of order n with
/// cycle type `ct`. Every q = p^r || n other than 2 and 4 is checked on its
/// own; 2 and 4 are checked on their own unless 3 || n, in which case they
/// enter the combined {2,3} or {3,4} inequality.
inline AuditReport audit_generator(const CycleType& ct, std::uint64_t n) {
  if (n == 0 || lcm_of(ct) != n)
    throw DomainError("cycle type " + ct.to_string() + " has order " + std::to_string(lcm_of(ct)) +
                      ", expected " + std::to_string(n));
  AuditReport rep;
  rep.modulus = n;
  for (const auto& pp : factorize(n).factors) rep.per_prime_power_sums[pp.value()] = 0;
  for (std::size_t l : ct.lengths)
    for (const auto& [q, w] : weight_vector(l, n).entries) rep.per_prime_power_sums[q] += w;

  const auto sum = [&](std::uint64_t q) {
    const auto it = rep.per_prime_power_sums.find(q);
    return it == rep.per_prime_power_sums.end() ? Rational(0) : it->second;
  };
  const bool three = exactly_divides(3, 1, n);
  const bool two = exactly_divides(2, 1, n);
  const bool four = exactly_divides(2, 2, n);

  std::uint64_t bound_points = 0;
  for (const auto& pp : factorize(n).factors) {
    const std::uint64_t q = pp.value();
    AuditBranch br = AuditBranch::plain;
    if (three && two && (q == 2 || q == 3)) br = AuditBranch::combined_2_3;
    if (three && four && (q == 4 || q == 3)) br = AuditBranch::combined_3_4;
    rep.branch[q] = br;
    const bool plain_check = !(q == 2 || q == 4) || !three;
    if (plain_check) {
      const Rational v = sum(q);
      const Rational b = static_cast<std::int64_t>(b_value(q));
      rep.constraints.push_back({"w_" + std::to_string(q), AuditBranch::plain, v, b, v >= b});
    }
    if (br == AuditBranch::plain) bound_points += b_value(q) * q;
  }
  if (three && two) {
    const Rational v = Rational(2) * sum(2) + Rational(3) * sum(3);
    const Rational bound(11);
    rep.constraints.push_back({"2*w_2+3*w_3", AuditBranch::combined_2_3, v, bound, v >= bound});
    bound_points += 11;
  }
  if (three && four) {
    const Rational v = Rational(4) * sum(4) + Rational(3) * sum(3);
    const Rational bound(20);
    rep.constraints.push_back({"4*w_4+3*w_3", AuditBranch::combined_3_4, v, bound, v >= bound});
    bound_points += 20;
  }
  rep.passed = std::all_of(rep.constraints.begin(), rep.constraints.end(),
                           [](const AuditConstraint& c) { return c.passed; });
  rep.lower_bound_points = bound_points;
  return rep;
}

struct LemmaCheck {
  std::string lemma;        // "two_cycles", "third_p_cycle", "two_four_cycles"
  std::string description;
  bool triggered = false;
  bool passed = true;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed = true;
};

/// Necessary conditions on the cycle type of a generator of a cyclic
/// automorphism group of order n.
inline LemmaReport lemma_constraints(const CycleType& ct, std::uint64_t n) {
  if (n == 0 || lcm_of(ct) != n)
    throw DomainError("cycle type " + ct.to_string() + " does not have order " + std::to_string(n));
  LemmaReport rep;
  const auto count_if = [&](auto pred) {
    return static_cast<std::size_t>(std::count_if(ct.lengths.begin(), ct.lengths.end(), pred));
  };

  // At least two cycles of length divisible by each q = p^r || n, q != 2.
  for (const auto& pp : factorize(n).factors) {
    const std::uint64_t q = pp.value();
    if (q == 2) continue;
    const std::size_t c = count_if([&](std::size_t l) { return l % q == 0; });
    rep.checks.push_back({"two_cycles", "at least two cycle lengths divisible by " + std::to_string(q), true,
                          c >= 2});
  }

  // A p-cycle together with another pk-cycle (p does not divide k, k >= 1)
  // forces a third cycle of length divisible by p.
  for (std::uint64_t p : {3u, 5u, 7u}) {
    if (n % p) continue;
    const std::size_t exact_p = count_if([&](std::size_t l) { return l == p; });
    const std::size_t p_not_p2 = count_if([&](std::size_t l) { return l % p == 0 && (l / p) % p != 0; });
    const std::size_t div_p = count_if([&](std::size_t l) { return l % p == 0; });
    LemmaCheck c{"third_p_cycle", "a " + std::to_string(p) + "-cycle and another cycle of length " +
                                      std::to_string(p) + "k require a third length divisible by " +
                                      std::to_string(p),
                 false, true};
    if (exact_p >= 1 && p_not_p2 >= 2) {
      c.triggered = true;
      c.passed = div_p >= 3;
    }
    rep.checks.push_back(c);
  }

  // Two 4-cycles force a third length divisible by 4 or two more even lengths.
  {
    const std::size_t fours = count_if([](std::size_t l) { return l == 4; });
    const std::size_t div4 = count_if([](std::size_t l) { return l % 4 == 0; });
    const std::size_t even = count_if([](std::size_t l) { return l % 2 == 0; });
    LemmaCheck c{"two_four_cycles", "two 4-cycles require a third length divisible by 4 or two more even lengths",
                 false, true};
    if (fours >= 2) {
      c.triggered = true;
      c.passed = div4 >= 3 || even >= 4;
    }
    rep.checks.push_back(c);
  }
  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const LemmaCheck& c) { return c.passed; });
  return rep;
}

}  // namespace cycposet

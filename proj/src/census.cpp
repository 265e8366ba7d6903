#include "wicks/census.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wicks {

namespace {

std::atomic<std::uint64_t> guard_hits{0};

void require_genus(int g, int min) {
  if (g < min)
    throw std::invalid_argument("genus " + std::to_string(g) +
                                " out of range (need >= " +
                                std::to_string(min) + ")");
}

// (a)! / (f)! / (b)! with the out-of-support guard
Rational guarded_factorial_quotient(int a, int f, int b) {
  if (a < 0 || b < 0 || f < 0) {
    guard_hits.fetch_add(1, std::memory_order_relaxed);
    return Rational(0);
  }
  return Rational(factorial(a), factorial(f) * factorial(b));
}

Rational pow_rational(const Rational& base, int exp) {
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  static std::vector<BigInt> table{1};
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  while (static_cast<int>(table.size()) <= n)
    table.push_back(table.back() * static_cast<int>(table.size()));
  return table[n];
}

std::uint64_t factorial_guard_hits() { return guard_hits.load(); }
void reset_factorial_guard() { guard_hits.store(0); }

Rational mass_total(int g) {
  require_genus(g, 1);
  return Rational(2) * pow_rational(Rational(1, 12), g) *
         Rational(factorial(6 * g - 5), factorial(g) * factorial(3 * g - 3));
}

Rational mass_order2(int g, int r) {
  require_genus(g, 1);
  if (r < 0) return Rational(0);
  int num = 2 * g + 1 - r;
  if (num < 0 || num % 4 != 0) return Rational(0);
  int f = num / 4;
  return pow_rational(Rational(4, 12), f) * Rational(1, factorial(r)) *
         guarded_factorial_quotient(6 * f + 2 * r - 5, f, 3 * f + r - 3);
}

Rational mass_order3(int g, int s, int t) {
  require_genus(g, 1);
  if (s < 0 || t < 0) return Rational(0);
  int num = g + 1 - s - t;
  if (num < 0 || num % 3 != 0) return Rational(0);
  if (s % 3 != (2 * g + 1) % 3 || t % 3 != (2 * g) % 3) return Rational(0);
  if (g == 1) return s == 0 && t == 2 ? Rational(1, 6) : Rational(0);
  int f = num / 3;
  return Rational(2, 3) * pow_rational(Rational(9, 12), f) *
         Rational(1, factorial(s) * factorial(t)) *
         guarded_factorial_quotient(6 * f + 2 * (s + t) - 5, f,
                                    3 * f + s + t - 3);
}

Rational mass_order6(int g, int r, int s, int t) {
  require_genus(g, 1);
  if (r < 0 || s < 0 || t < 0) return Rational(0);
  int num = 2 * g + 5 - 3 * r - 4 * s - 4 * t;
  if (num < 0 || num % 12 != 0) return Rational(0);
  if ((2 * s) % 3 != (2 * g + 1) % 3 || (2 * t) % 3 != (2 * g) % 3)
    return Rational(0);
  if (g == 1) return r == 1 && s == 0 && t == 1 ? Rational(1, 6) : Rational(0);
  int f = num / 12;
  return Rational(2, 6) * pow_rational(Rational(36, 12), f) *
         Rational(1, factorial(r) * factorial(s) * factorial(t)) *
         guarded_factorial_quotient(6 * f + 2 * (r + s + t) - 5, f,
                                    3 * f + r + s + t - 3);
}

std::array<int, 3> order6_label(int r, int s, int t) {
  return {3 * r, 2 * s, 2 * t};
}

std::optional<std::array<int, 3>> order6_args(int label_r, int label_s,
                                              int label_t) {
  if (label_r % 3 != 0 || label_s % 2 != 0 || label_t % 2 != 0)
    return std::nullopt;
  return std::array{label_r / 3, label_s / 2, label_t / 2};
}

Masses masses(int g) {
  require_genus(g, 1);
  Masses out;
  out.m1 = mass_total(g);

  out.m2 = 0;
  for (int f = 0; 2 * g + 1 - 4 * f >= 0; ++f)
    out.m2 += mass_order2(g, 2 * g + 1 - 4 * f);

  // s runs over its residue class mod 3; t is then determined per f
  out.m3 = 0;
  for (int f = 0; g + 1 - 3 * f >= 0; ++f) {
    int total = g + 1 - 3 * f;
    for (int s = (2 * g + 1) % 3; s <= total; s += 3)
      out.m3 += mass_order3(g, s, total - s);
  }

  // the congruences make 3 | (2g+5-12f-4s-4t) automatic, so r is determined
  out.m6 = 0;
  for (int f = 0; 2 * g + 5 - 12 * f >= 0; ++f) {
    int rem = 2 * g + 5 - 12 * f;
    for (int s = (2 * (2 * g + 1)) % 3; 4 * s <= rem; s += 3) {
      for (int t = (2 * (2 * g)) % 3; 4 * s + 4 * t <= rem; t += 3) {
        int three_r = rem - 4 * s - 4 * t;
        if (three_r % 3 != 0) continue;
        out.m6 += mass_order6(g, three_r / 3, s, t);
      }
    }
  }
  return out;
}

DiskRadii disk_radii(int g) {
  require_genus(g, 2);
  DiskRadii out;
  out.beta = std::numbers::pi / (12 * g - 6);
  out.R = std::acosh(1.0 / (2.0 * std::sin(out.beta)));
  out.C = std::acosh(1.0 / (std::sqrt(3.0) * std::tan(out.beta)));
  return out;
}

std::string_view bijection_status_name(BijectionStatus s) {
  switch (s) {
    case BijectionStatus::proven: return "proven";
    case BijectionStatus::open: return "open";
    case BijectionStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

CensusRow counts(int g) {
  require_genus(g, 1);
  CensusRow row;
  row.genus = g;
  row.mass = masses(g);
  auto as_integer = [&](const Rational& q, const char* what) {
    if (denominator(q) != 1)
      throw std::logic_error(std::string(what) + " is not integral at genus " +
                             std::to_string(g));
    BigInt n = numerator(q);
    if (n < 0)
      throw std::logic_error(std::string(what) + " is negative at genus " +
                             std::to_string(g));
    return n;
  };
  const Masses& m = row.mass;
  row.M1 = as_integer(m.m1 + m.m2 + 2 * m.m3 + 2 * m.m6, "M1");
  row.M2 = as_integer(2 * m.m2 + 4 * m.m6, "M2");
  row.M3 = as_integer(3 * m.m3 + 3 * m.m6, "M3");
  row.M6 = as_integer(6 * m.m6, "M6");
  row.n6 = row.M6;
  row.n3 = row.M3 - row.M6;
  row.n2 = row.M2 - row.M6;
  row.n1 = row.M1 - row.M2 - row.M3 + row.M6;
  if (row.n1 < 0 || row.n2 < 0 || row.n3 < 0)
    throw std::logic_error("negative exact-order count at genus " +
                           std::to_string(g));
  row.bijection_status = g == 1  ? BijectionStatus::not_applicable
                         : g == 3 ? BijectionStatus::open
                                  : BijectionStatus::proven;
  if (g >= 2) row.radii = disk_radii(g);
  return row;
}

std::string rational_str(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

}  // namespace wicks

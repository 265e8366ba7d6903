#pragma once
// Exact mass and count formulas for oriented maximal forms, plus the embedded
// and covering disk radii of the corresponding optimal surfaces. All masses
// and counts are exact rationals/integers end to end; the census counts run
// past 10^49 by genus 15, so everything is arbitrary precision.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wicks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// m1 = 2 (1/12)^g (6g-5)! / (g! (3g-3)!), the mass of all maximal forms.
Rational mass_total(int g);

// Mass of forms with an order-2 symmetry reversing exactly r edges onto
// themselves. Nonzero only when f = (2g+1-r)/4 is a nonnegative integer.
Rational mass_order2(int g, int r);

// Mass of forms with an order-3 symmetry fixing s positive and t negative
// vertices. Support: f = (g+1-s-t)/3 integral >= 0, s = 2g+1 and t = 2g
// mod 3. Genus 1 is the special value 1/6 at (s,t) = (0,2).
Rational mass_order3(int g, int s, int t);

// Mass of forms with an order-6 symmetry; arguments are the unscaled (r,s,t)
// whose class label is (3r; 2s, 2t). Support: f = (2g+5-3r-4s-4t)/12
// integral >= 0 plus the mod-3 conditions on 2s, 2t. Genus 1 is the special
// value 1/6 at (r,s,t) = (1,0,1), label (3; 0, 2).
Rational mass_order6(int g, int r, int s, int t);

std::array<int, 3> order6_label(int r, int s, int t);  // -> (3r, 2s, 2t)
// inverse of order6_label; empty when the label is not of that shape
std::optional<std::array<int, 3>> order6_args(int label_r, int label_s,
                                              int label_t);

struct Masses {
  Rational m1, m2, m3, m6;  // m2/m3/m6 summed over their full supports
};
Masses masses(int g);

// Out-of-support factorial guard: a formula term whose support conditions
// hold but whose factorial argument would be negative is counted here and
// evaluates to 0 (never happens for g >= 2; genus 1 uses special values).
std::uint64_t factorial_guard_hits();
void reset_factorial_guard();

enum class BijectionStatus { proven, open, not_applicable };
std::string_view bijection_status_name(BijectionStatus s);

struct DiskRadii {
  double beta = 0;  // pi / (12g - 6)
  double R = 0;     // embedded-disk radius  acosh(1 / (2 sin beta))
  double C = 0;     // covering-disk radius  acosh(1 / (sqrt(3) tan beta))
};
DiskRadii disk_radii(int g);  // g >= 2

struct CensusRow {
  int genus = 0;
  Masses mass;
  // classes having an automorphism of order d (d | 6)
  BigInt M1, M2, M3, M6;
  // classes whose automorphism group has order exactly d
  BigInt n1, n2, n3, n6;
  // surface counting applies for genus 2 and >= 4; genus 3 is open
  BijectionStatus bijection_status = BijectionStatus::not_applicable;
  std::optional<DiskRadii> radii;
};

// Assembles the counts M1 = m1 + m2 + 2 m3 + 2 m6, M2 = 2 m2 + 4 m6,
// M3 = 3 m3 + 3 m6, M6 = 6 m6 and the exact-order counts by inclusion-
// exclusion; throws std::logic_error if any M fails to be a nonnegative
// integer.
CensusRow counts(int g);

std::string rational_str(const Rational& q);  // "p/q", or "p" when integral

}  // namespace wicks

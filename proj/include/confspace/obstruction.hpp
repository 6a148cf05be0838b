#ifndef CONFSPACE_OBSTRUCTION_HPP
#define CONFSPACE_OBSTRUCTION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confspace/face_poset.hpp"

namespace confspace {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// Number theory on the binomial row

/// C(n,0), ..., C(n,n) exactly.
std::vector<BigInt> binomial_row(unsigned n);

/// gcd{C(n,1), ..., C(n,n-1)} for n >= 2. Stops early once the running gcd
/// reaches 1.
BigInt binomial_gcd(unsigned n);

struct PrimePower {
  std::uint64_t p;
  int k;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, k) with n = p^k, or nullopt. n >= 2.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// Exponent of p in x (x != 0).
unsigned p_adic_valuation(const BigInt& x, unsigned long p);

/// Exponent of p in m!.
std::uint64_t legendre_valuation(std::uint64_t m, std::uint64_t p);

/// Number of carries when adding a and b in base p. By Kummer this is the
/// exponent of p in C(a+b, a).
unsigned kummer_carries(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// ---------------------------------------------------------------------------
// Equivariant cochains on the complement complex

/// An equivariant (M-1)-cochain: one integer per ridge orbit. values[j-1]
/// is the value on ridges whose d-1 separator sits at position j.
struct RidgeOrbitCochain {
  unsigned n = 0;
  std::vector<BigInt> values;

  RidgeOrbitCochain() = default;
  RidgeOrbitCochain(unsigned n, std::vector<BigInt> values);

  const BigInt& at(int j) const { return values.at(static_cast<std::size_t>(j - 1)); }
};

/// sum_j x_j C(n, j): the value of the coboundary on every facet.
BigInt coboundary_value(const RidgeOrbitCochain& b);

class NoWitness : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Integers x_1..x_{n-1} with sum_j x_j C(n,j) = 1, built by accumulating
/// extended gcds from left to right. Throws NoWitness when n is a prime
/// power. The identity is checked before returning.
RidgeOrbitCochain coboundary_witness(unsigned n);

/// Entry j-1 counts the ridges of orbit j in the boundary of `facet`, read
/// off the cover relation of `poset`.
std::vector<std::uint64_t> facet_incidence_vector(const CellLabel& facet, const FacePoset& poset);

/// (delta b)(F) for every facet F of the complement complex, in poset order.
/// Every ridge enters the boundary of a facet with coefficient +1.
std::vector<BigInt> verify_coboundary_on_complex(int d, int n, const RidgeOrbitCochain& b,
                                                 std::uint64_t budget = kDefaultBudget);

struct ObstructionReport {
  int d = 0;
  int n = 0;
  BigInt gcd;
  std::optional<PrimePower> prime_power;
  bool map_exists = false;
  std::optional<RidgeOrbitCochain> witness;

  /// "Z/g" or "trivial".
  std::string group() const;
};

/// Top equivariant cohomology Z/gcd generated by the class of the constant
/// 1 cocycle; the equivariant map exists iff that class vanishes.
ObstructionReport obstruction_report(int d, int n);

}  // namespace confspace

#endif  // CONFSPACE_OBSTRUCTION_HPP

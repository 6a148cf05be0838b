#include "confspace/obstruction.hpp"

#include <algorithm>

namespace confspace {

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    row[k + 1] = row[k] * (n - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
  }
  return row;
}

BigInt binomial_gcd(unsigned n) {
  if (n < 2) throw std::invalid_argument("binomial_gcd needs n >= 2");
  BigInt g = 0;
  BigInt c = 1;
  // the row is symmetric, so the first half suffices
  for (unsigned k = 1; k <= n / 2; ++k) {
    c *= n - k + 1;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("is_prime_power needs n >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

unsigned p_adic_valuation(const BigInt& x, unsigned long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  BigInt rest = abs(x);
  unsigned v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::uint64_t legendre_valuation(std::uint64_t m, std::uint64_t p) {
  std::uint64_t v = 0;
  while (m > 0) {
    m /= p;
    v += m;
  }
  return v;
}

unsigned kummer_carries(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  unsigned carries = 0;
  std::uint64_t carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

RidgeOrbitCochain::RidgeOrbitCochain(unsigned n_, std::vector<BigInt> values_)
    : n(n_), values(std::move(values_)) {
  if (n < 2) throw std::invalid_argument("cochain needs n >= 2");
  if (values.size() != n - 1) throw std::invalid_argument("cochain needs n-1 orbit values");
}

BigInt coboundary_value(const RidgeOrbitCochain& b) {
  const auto row = binomial_row(b.n);
  BigInt sum = 0;
  for (unsigned j = 1; j < b.n; ++j) sum += b.values[j - 1] * row[j];
  return sum;
}

RidgeOrbitCochain coboundary_witness(unsigned n) {
  if (n < 2) throw std::invalid_argument("coboundary_witness needs n >= 2");
  const auto row = binomial_row(n);
  std::vector<BigInt> x(n - 1, 0);
  // invariant: sum_{j<=k} x_j C(n,j) = g
  BigInt g = row[1];
  x[0] = 1;
  for (unsigned k = 2; k < n && g != 1; ++k) {
    BigInt next_g, s, t;
    mpz_gcdext(next_g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), row[k].get_mpz_t());
    for (unsigned j = 1; j < k; ++j) x[j - 1] *= s;
    x[k - 1] = t;
    g = next_g;
  }
  if (g != 1) throw NoWitness("n = " + std::to_string(n) + " is a prime power; gcd is " + g.get_str());

  RidgeOrbitCochain witness(n, std::move(x));
  if (coboundary_value(witness) != 1) throw std::logic_error("witness failed verification");
  return witness;
}

std::vector<std::uint64_t> facet_incidence_vector(const CellLabel& facet, const FacePoset& poset) {
  if (poset.kind() != ComplexKind::complement)
    throw std::invalid_argument("incidence vectors live on the complement complex");
  facet.require(ComplexKind::complement);
  if (cell_dimension(facet) != top_dimension(poset.d(), poset.n()))
    throw InvalidLabel("label is not a facet: " + format_label(facet));
  const auto index = poset.index_of(facet);
  if (!index) throw std::invalid_argument("facet not in poset");

  std::vector<std::uint64_t> counts(poset.n() - 1, 0);
  for (std::size_t ridge : poset.lower_covers(*index))
    ++counts[ridge_orbit_index(poset.element(ridge)) - 1];
  return counts;
}

std::vector<BigInt> verify_coboundary_on_complex(int d, int n, const RidgeOrbitCochain& b,
                                                 std::uint64_t budget) {
  if (d < 2) throw std::invalid_argument("the complement complex has ridges only for d >= 2");
  if (static_cast<int>(b.n) != n) throw std::invalid_argument("cochain has the wrong n");
  const FacePoset poset = enumerate_cells(d, n, ComplexKind::complement, budget);
  const int top = top_dimension(d, n);
  std::vector<BigInt> values;
  for (std::size_t f = 0; f < poset.size(); ++f) {
    if (poset.dim(f) != top) continue;
    BigInt sum = 0;
    for (std::size_t ridge : poset.lower_covers(f)) sum += b.at(ridge_orbit_index(poset.element(ridge)));
    values.push_back(sum);
  }
  return values;
}

std::string ObstructionReport::group() const {
  return gcd == 1 ? std::string("trivial") : "Z/" + gcd.get_str();
}

ObstructionReport obstruction_report(int d, int n) {
  if (d < 2 || n < 2) throw std::invalid_argument("obstruction_report needs d >= 2 and n >= 2");
  ObstructionReport report;
  report.d = d;
  report.n = n;
  report.gcd = binomial_gcd(static_cast<unsigned>(n));
  report.prime_power = is_prime_power(static_cast<std::uint64_t>(n));
  report.map_exists = report.gcd == 1;
  if (report.map_exists) report.witness = coboundary_witness(static_cast<unsigned>(n));
  if (report.map_exists == report.prime_power.has_value())
    throw std::logic_error("gcd criterion disagrees with factorization");
  return report;
}

}  // namespace confspace

#ifndef FIBRE_LOWERING_HPP
#define FIBRE_LOWERING_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fibre/multiindex.hpp"
#include "fibre/numeric.hpp"

namespace fibre {

/// Element of the polynomial algebra on the x_j^a: exponent -> coefficient,
/// no zero coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial monomial(const MultiIndex& k, const Rational& c = 1);

  void add_term(const MultiIndex& k, const Rational& c);
  Rational coefficient(const MultiIndex& k) const;
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<MultiIndex, Rational> terms_;
};

/// The lowering derivation: x_j^a -> x_{j-1}^a for j >= 0, x_{-1}^a -> 0,
/// extended by linearity and the Leibniz rule.
Polynomial dbar(const Polynomial& p);
/// dbar applied r times, recomputed from scratch.
Polynomial dbar_power(const Polynomial& p, long r);

/// sum_{a,j} (j+1) k_j^a; dbar^r x^k vanishes for every larger r.
long lowering_capacity(const MultiIndex& k);

/// All nonzero C_{k,l} with |l| = r, from C_{k,0} = 1 and
///   C_{k,l} = sum_{a, j >= 0, l_j^a >= 1} C_{k,l-e_j^a} (k_j^a - l_j^a + 1 + l_{j+1}^a),
/// with C_{k,l} = 0 whenever k - l + <-l has a negative component.
std::map<MultiIndex, BigInt> c_coefficients(const MultiIndex& k, long r);
BigInt c_coefficient(const MultiIndex& k, const MultiIndex& l);

/// D_{k,l} = C_{k,l} (k - l + <-l)! for a nonnegative target, else 0.
BigInt d_coefficient(const MultiIndex& k, const MultiIndex& l);
/// Same quantity through D_{k,0} = k! and
///   D_{k,l} = sum D_{k,l-e_j^a} (k_{j-1}^a - l_{j-1}^a + l_j^a).
BigInt d_coefficient_recursive(const MultiIndex& k, const MultiIndex& l);
/// All nonzero D_{k,l} with |l| = r, through the D recursion.
std::map<MultiIndex, BigInt> d_coefficients(const MultiIndex& k, long r);

/// Univariate polynomial in u with rational coefficients.
class UPolynomial {
 public:
  UPolynomial() = default;
  static UPolynomial monomial(long degree, const Rational& c);

  void add_term(long degree, const Rational& c);
  Rational coefficient(long degree) const;
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  UPolynomial& operator*=(const Rational& c);
  bool operator==(const UPolynomial&) const = default;

 private:
  std::map<long, Rational> terms_;
};

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b);

/// "u^2/2", "3*u", "1", "0"; terms by ascending degree joined by " + ".
std::string to_string(const UPolynomial& p);

/// C_{k,b}(u) for every target b, from the factorized form
/// prod_{a,j} (sum_{m=0}^{j+1} u^m / m! x_{j-m}^a)^{k_j^a}.
std::map<MultiIndex, UPolynomial> coefficient_gf(const MultiIndex& k);
/// Same map from sum_r u^r / r! dbar^r x^k.
std::map<MultiIndex, UPolynomial> coefficient_gf_by_dbar(const MultiIndex& k);

/// n_{a,j,s} > 0 entries keyed by (a, j, s), -1 <= s <= j.
struct TransportArray {
  std::map<std::tuple<int, int, int>, long> entries;

  auto operator<=>(const TransportArray&) const = default;
};

/// Every transport array from k to b: row sums k_j^a, column sums b_s^a,
/// support on s <= j. Deterministic lexicographic order.
std::vector<TransportArray> transport_arrays(const MultiIndex& k, const MultiIndex& b);

/// C_{k,b}(u) as the sum over transport arrays.
UPolynomial transition_gf(const MultiIndex& k, const MultiIndex& b);
/// b! C_{k,b}(u).
UPolynomial transition_gf_d(const MultiIndex& k, const MultiIndex& b);

}  // namespace fibre

#endif  // FIBRE_LOWERING_HPP

#ifndef FIBRE_SERIES_HPP
#define FIBRE_SERIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fibre/multiindex.hpp"
#include "fibre/numeric.hpp"

namespace fibre {

/// Multivariate formal power series in the variables u_{a,j}, exact
/// rational coefficients, truncated at a fixed total degree. A monomial
/// u^k is keyed by the multi-index k. Terms beyond the degree bound are
/// dropped eagerly; zero coefficients are never stored.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long max_degree = 0);

  static TruncatedSeries constant(const Rational& c, long max_degree);
  static TruncatedSeries monomial(const MultiIndex& k, const Rational& c, long max_degree);

  long max_degree() const { return max_degree_; }

  Rational coefficient(const MultiIndex& k) const;
  /// Terms of total degree n, keyed by exponent.
  const std::map<MultiIndex, Rational>& homogeneous(long n) const;
  /// All terms, ordered by degree and then canonically.
  std::vector<std::pair<MultiIndex, Rational>> terms() const;
  std::size_t term_count() const;
  bool is_zero() const;

  void add_term(const MultiIndex& k, const Rational& c);

  /// Copy with a smaller (or equal) degree bound.
  TruncatedSeries truncated(long max_degree) const;
  /// Only the degree-n part, same bound.
  TruncatedSeries homogeneous_part(long n) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);

  /// Equal bounds and equal terms.
  bool operator==(const TruncatedSeries& other) const;

 private:
  long max_degree_;
  std::vector<std::map<MultiIndex, Rational>> by_degree_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
/// Cauchy product truncated at min of the two bounds.
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries pow(const TruncatedSeries& s, unsigned exponent);

/// u_{a,j} -> u_{a,j}^r on every variable, truncated at max_degree.
TruncatedSeries plethysm_substitute(const TruncatedSeries& s, long r, long max_degree);

/// exp(s); requires a zero constant term (DomainError otherwise).
TruncatedSeries exp(const TruncatedSeries& s);
/// log(s); requires constant term 1 (DomainError otherwise).
TruncatedSeries log(const TruncatedSeries& s);

/// Series in an auxiliary variable z whose coefficients are truncated
/// u-series: element m is the coefficient of z^m.
using ZSeries = std::vector<TruncatedSeries>;

ZSeries multiply(const ZSeries& a, const ZSeries& b);
/// exp in the z-grading; requires the z^0 coefficient to be zero.
ZSeries exp(const ZSeries& s);
/// log in the z-grading; requires the z^0 coefficient to be 1.
ZSeries log(const ZSeries& s);

/// "u^k -> c" lines in the graded canonical order.
std::string to_string(const TruncatedSeries& s, const Alphabet& alphabet);

}  // namespace fibre

#endif  // FIBRE_SERIES_HPP

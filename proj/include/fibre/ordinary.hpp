#ifndef FIBRE_ORDINARY_HPP
#define FIBRE_ORDINARY_HPP

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "fibre/multiindex.hpp"
#include "fibre/numeric.hpp"
#include "fibre/series.hpp"

namespace fibre {

/// Number of m-element multisets drawn from an r-element set:
/// binomial(r + m - 1, m) for r >= 1, and [m == 0] for r == 0.
BigInt mlt(const BigInt& r, unsigned long m);

/// Branch-profile multiplicities below a root: profile -> multiplicity.
using ProfileMultiplicity = std::map<MultiIndex, long>;

/// Ordinary fibre cardinality F_k through the multiset recursion over root
/// types and branch-profile multiplicities. Memoized; one instance per
/// computation context (calls are serialized internally).
class OrdinaryRecursion {
 public:
  BigInt operator()(const MultiIndex& k);

  /// Visits every multiplicity datum nu with |nu| = size and
  /// Sigma(nu) = target, in canonical order.
  void for_each_multiplicity(const MultiIndex& target, long size,
                             const std::function<void(const ProfileMultiplicity&)>& visit);

 private:
  BigInt compute(const MultiIndex& k);

  std::recursive_mutex mutex_;
  std::map<MultiIndex, BigInt> memo_;
};

BigInt ordinary_count(const MultiIndex& k);

/// Partitions of m in multiplicity notation: element r-1 holds m_r.
/// Lexicographic order on (m_1, m_2, ...), largest first.
std::vector<std::vector<long>> partitions(long m);

/// z_lambda = prod r^{m_r} m_r!.
BigInt z_lambda(const std::vector<long>& multiplicities);

/// Z_SET_m(p_1, ..., p_m) = sum over partitions of p_lambda / z_lambda.
/// Requires p.size() >= m. Series mode truncates at the bound of p[0].
TruncatedSeries cycle_index_set(long m, const std::vector<TruncatedSeries>& p);
Rational cycle_index_set(long m, const std::vector<Rational>& p);

/// F(u) truncated at max_degree built from per-profile ordinary counts.
TruncatedSeries ordinary_series_from_counts(const std::vector<int>& decorations, long max_degree,
                                            OrdinaryRecursion& counts);

/// Right side of F = sum_{a,j} u_{a,j} Z_SET_{j+1}(F(u^[1]), ..., F(u^[j+1])).
TruncatedSeries ordinary_rhs(const TruncatedSeries& f, const std::vector<int>& decorations,
                             long max_degree);

/// The solution F(u) truncated at max_degree, solved degree by degree.
TruncatedSeries ordinary_series(const std::vector<int>& decorations, long max_degree);

/// H_0 .. H_{max_m} as the z-coefficients of prod_l (1 - z u^l)^{-F_l}.
ZSeries h_series_euler_product(const std::vector<int>& decorations, long max_m, long max_degree,
                               OrdinaryRecursion& counts);

/// H_m = Z_SET_m(F(u^[1]), ..., F(u^[m])) for the given truncated F.
TruncatedSeries h_series_cycle_index(const TruncatedSeries& f, long m, long max_degree);

/// H_m truncated at max_degree; evaluates both routes and throws
/// std::logic_error if they disagree.
TruncatedSeries h_series(const std::vector<int>& decorations, long m, long max_degree);

}  // namespace fibre

#endif  // FIBRE_ORDINARY_HPP

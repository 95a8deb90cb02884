#ifndef FIBRE_WEIGHTED_HPP
#define FIBRE_WEIGHTED_HPP

#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "fibre/multiindex.hpp"
#include "fibre/numeric.hpp"
#include "fibre/series.hpp"

namespace fibre {

/// Labelled count L_k, automorphism-weighted count W_k and coefficient
/// mass J_k of the fibre over x^k.
struct WeightedCounts {
  BigInt labelled;
  Rational weighted;
  BigInt mass;

  bool operator==(const WeightedCounts&) const = default;
};

/// Number of rooted trees on {1..n} in which vertex i has r_i children:
/// (n-1)! / prod r_i!. Throws DomainError("fertility sum violation")
/// unless sum r_i = n - 1.
BigInt prescribed_fertility_count(std::span<const long> fertilities);

/// Closed formulas, with n = |k|:
///   L = n! (n-1)! / prod k_j^a! (j+1)!^{k_j^a},  W = L / n!,
///   J = (n-1)! / prod (j+1)!^{k_j^a}.
/// Throws DomainError("weight must be -1").
WeightedCounts weighted_counts(const MultiIndex& k);

/// Root-decomposition recursion for W_k over ordered tuples of weight -1
/// branch profiles. Memoized; one instance per computation context.
class WeightedRecursion {
 public:
  Rational operator()(const MultiIndex& k);

 private:
  Rational compute(const MultiIndex& k);
  // Sum over ordered m-tuples of weight -1 multi-indices adding up to
  // target of the product of their W values.
  Rational tuples(long m, const MultiIndex& target);

  std::recursive_mutex mutex_;
  std::map<MultiIndex, Rational> memo_;
  std::map<std::pair<long, MultiIndex>, Rational> tuple_memo_;
};

Rational weighted_counts_recursive(const MultiIndex& k);

/// Right side of T = sum_{a,j} u_{a,j} T^{j+1} / (j+1)! truncated at
/// max_degree, with j running over -1 .. max(max_degree - 2, -1).
TruncatedSeries weighted_rhs(const TruncatedSeries& t, const std::vector<int>& decorations,
                             long max_degree);

/// The zero-constant-term solution T(u) truncated at max_degree, solved
/// degree by degree.
TruncatedSeries weighted_series(const std::vector<int>& decorations, long max_degree);

/// u_{a,j} * s, dropping terms above max_degree.
TruncatedSeries multiply_by_variable(const TruncatedSeries& s, Key variable, long max_degree);

}  // namespace fibre

#endif  // FIBRE_WEIGHTED_HPP

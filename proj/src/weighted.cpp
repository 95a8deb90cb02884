#include "fibre/weighted.hpp"

#include <algorithm>

namespace fibre {

BigInt prescribed_fertility_count(std::span<const long> fertilities) {
  const long n = static_cast<long>(fertilities.size());
  if (n < 1) throw DomainError("fertility sum violation");
  long sum = 0;
  for (long r : fertilities) {
    if (r < 0) throw DomainError("fertility sum violation");
    sum += r;
  }
  if (sum != n - 1) throw DomainError("fertility sum violation");
  BigInt denominator = 1;
  for (long r : fertilities) denominator *= factorial(static_cast<unsigned>(r));
  BigInt count = factorial(static_cast<unsigned>(n - 1)) / denominator;
  return count;
}

WeightedCounts weighted_counts(const MultiIndex& k) {
  if (k.empty() || weight(k) != -1) throw DomainError("weight must be -1");
  const unsigned n = static_cast<unsigned>(degree(k));
  BigInt fertility_part = 1;  // prod (j+1)!^{k_j^a}
  BigInt multiplicity_part = 1;  // prod k_j^a!
  for (const auto& e : k.entries()) {
    fertility_part *= pow(factorial(static_cast<unsigned>(e.key.j + 1)),
                          static_cast<unsigned long>(e.count));
    multiplicity_part *= factorial(static_cast<unsigned>(e.count));
  }
#ifdef FIBRE_MUTANT_W
  const BigInt& numerator = factorial(n);
#else
  const BigInt& numerator = factorial(n - 1);
#endif
  WeightedCounts out;
  out.weighted = Rational(numerator, multiplicity_part * fertility_part);
  out.weighted.canonicalize();
  BigInt labelled_num = factorial(n) * factorial(n - 1);
  BigInt labelled_den = multiplicity_part * fertility_part;
  out.labelled = labelled_num / labelled_den;
  out.mass = factorial(n - 1) / fertility_part;
  return out;
}

Rational WeightedRecursion::operator()(const MultiIndex& k) {
  if (k.empty() || weight(k) != -1) throw DomainError("weight must be -1");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return compute(k);
}

Rational WeightedRecursion::compute(const MultiIndex& k) {
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  Rational total = 0;
  for (const auto& e : k.entries()) {
    const long arity = e.key.j + 1;
    MultiIndex rest = subtract(k, MultiIndex::unit(e.key.decoration, e.key.j));
    Rational branches = tuples(arity, rest);
    if (branches == 0) continue;
    total += branches / Rational(factorial(static_cast<unsigned>(arity)));
  }
  memo_.emplace(k, total);
  return total;
}

Rational WeightedRecursion::tuples(long m, const MultiIndex& target) {
  if (m == 0) return target.empty() ? Rational(1) : Rational(0);
  // Each part has weight -1 and degree >= 1.
  if (weight(target) != -m || degree(target) < m) return 0;
  if (m == 1) return compute(target);
  auto key = std::make_pair(m, target);
  if (auto it = tuple_memo_.find(key); it != tuple_memo_.end()) return it->second;
  Rational total = 0;
  for_each_submultiindex(target, [&](const MultiIndex& first) {
    if (first.empty() || weight(first) != -1) return true;
    MultiIndex rest = subtract(target, first);
    Rational tail = tuples(m - 1, rest);
    if (tail != 0) total += compute(first) * tail;
    return true;
  });
  tuple_memo_.emplace(std::move(key), total);
  return total;
}

Rational weighted_counts_recursive(const MultiIndex& k) {
  WeightedRecursion recursion;
  return recursion(k);
}

TruncatedSeries multiply_by_variable(const TruncatedSeries& s, Key variable, long max_degree) {
  TruncatedSeries out(max_degree);
  const MultiIndex u = MultiIndex::unit(variable.decoration, variable.j);
  for (long n = 0; n + 1 <= max_degree; ++n) {
    for (const auto& [k, c] : s.homogeneous(n)) out.add_term(add(k, u), c);
  }
  return out;
}

TruncatedSeries weighted_rhs(const TruncatedSeries& t, const std::vector<int>& decorations,
                             long max_degree) {
  const int top = static_cast<int>(std::max(max_degree - 2, -1L));
  const TruncatedSeries base = t.truncated(max_degree);
  TruncatedSeries out(max_degree);
  TruncatedSeries power = TruncatedSeries::constant(1, max_degree);  // T^{j+1}
  for (int j = -1; j <= top; ++j) {
    if (j >= 0) power = power * base;
    TruncatedSeries term = power * Rational(BigInt(1), factorial(static_cast<unsigned>(j + 1)));
    for (int a : decorations) out += multiply_by_variable(term, Key{a, j}, max_degree);
  }
  return out;
}

TruncatedSeries weighted_series(const std::vector<int>& decorations, long max_degree) {
  if (max_degree < 1) throw DomainError("series degree must be >= 1");
  TruncatedSeries t(max_degree);
  // After pass n the coefficients of degree <= n are final.
  for (long n = 1; n <= max_degree; ++n) {
    t = weighted_rhs(t.truncated(n), decorations, n).truncated(max_degree);
  }
  return t;
}

}  // namespace fibre

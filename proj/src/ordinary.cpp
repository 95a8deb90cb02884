#include "fibre/ordinary.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibre/weighted.hpp"

namespace fibre {

BigInt mlt(const BigInt& r, unsigned long m) {
  if (r == 0) return m == 0 ? BigInt(1) : BigInt(0);
  if (r < 0) throw DomainError("multiset number needs r >= 0");
  // binomial(r + m - 1, m) = prod_{i < m} (r + i) / m!
  BigInt numerator = 1;
  for (unsigned long i = 0; i < m; ++i) numerator *= r + i;
  BigInt result = numerator / factorial(static_cast<unsigned>(m));
  return result;
}

BigInt OrdinaryRecursion::operator()(const MultiIndex& k) {
  if (k.empty() || weight(k) != -1) throw DomainError("weight must be -1");
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return compute(k);
}

void OrdinaryRecursion::for_each_multiplicity(
    const MultiIndex& target, long size,
    const std::function<void(const ProfileMultiplicity&)>& visit) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  // Candidate branch profiles are the weight -1 multi-indices bounded by
  // the target.
  std::vector<MultiIndex> candidates;
  for_each_submultiindex(target, [&](const MultiIndex& l) {
    if (!l.empty() && weight(l) == -1) candidates.push_back(l);
    return true;
  });
  std::sort(candidates.begin(), candidates.end());

  ProfileMultiplicity nu;
  std::function<void(std::size_t, const MultiIndex&, long)> walk =
      [&](std::size_t i, const MultiIndex& remaining, long count) {
        if (count == 0) {
          if (remaining.empty()) visit(nu);
          return;
        }
        if (i == candidates.size() || weight(remaining) != -count) return;
        walk(i + 1, remaining, count);
        MultiIndex rest = remaining;
        for (long m = 1; m <= count; ++m) {
          auto next = try_subtract(rest, candidates[i]);
          if (!next) break;
          rest = *std::move(next);
          nu[candidates[i]] = m;
          walk(i + 1, rest, count - m);
        }
        nu.erase(candidates[i]);
      };
  walk(0, target, size);
}

BigInt OrdinaryRecursion::compute(const MultiIndex& k) {
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  BigInt total = 0;
  for (const auto& e : k.entries()) {
    const long arity = e.key.j + 1;
    MultiIndex rest = subtract(k, MultiIndex::unit(e.key.decoration, e.key.j));
    for_each_multiplicity(rest, arity, [&](const ProfileMultiplicity& nu) {
      BigInt product = 1;
      for (const auto& [l, m] : nu) {
        product *= mlt(compute(l), static_cast<unsigned long>(m));
        if (product == 0) break;
      }
      total += product;
    });
  }
  memo_.emplace(k, total);
  return total;
}

BigInt ordinary_count(const MultiIndex& k) {
  OrdinaryRecursion recursion;
  return recursion(k);
}

std::vector<std::vector<long>> partitions(long m) {
  if (m < 0) throw DomainError("partition of a negative integer");
  std::vector<std::vector<long>> out;
  std::vector<long> mult(static_cast<std::size_t>(m), 0);
  // Assign m_1 first (largest first), then m_2, ...
  std::function<void(long, long)> walk = [&](long part, long remaining) {
    if (remaining == 0) {
      out.push_back(mult);
      return;
    }
    if (part > m) return;
    for (long c = remaining / part; c >= 0; --c) {
      mult[static_cast<std::size_t>(part - 1)] = c;
      walk(part + 1, remaining - c * part);
    }
    mult[static_cast<std::size_t>(part - 1)] = 0;
  };
  walk(1, m);
  return out;
}

BigInt z_lambda(const std::vector<long>& multiplicities) {
  BigInt z = 1;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const long r = static_cast<long>(i) + 1;
    const long mr = multiplicities[i];
    z *= pow(BigInt(r), static_cast<unsigned long>(mr)) * factorial(static_cast<unsigned>(mr));
  }
  return z;
}

TruncatedSeries cycle_index_set(long m, const std::vector<TruncatedSeries>& p) {
  if (static_cast<long>(p.size()) < m) throw DomainError("cycle index needs p_1 .. p_m");
  const long bound = p.empty() ? 0 : p[0].max_degree();
  TruncatedSeries out(bound);
  for (const auto& lambda : partitions(m)) {
    TruncatedSeries term = TruncatedSeries::constant(1, bound);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i] > 0) term = term * pow(p[i], static_cast<unsigned>(lambda[i]));
    }
    term *= Rational(BigInt(1), z_lambda(lambda));
    out += term;
  }
  return out;
}

Rational cycle_index_set(long m, const std::vector<Rational>& p) {
  if (static_cast<long>(p.size()) < m) throw DomainError("cycle index needs p_1 .. p_m");
  Rational out = 0;
  for (const auto& lambda : partitions(m)) {
    Rational term = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      for (long c = 0; c < lambda[i]; ++c) term *= p[i];
    }
    out += term / Rational(z_lambda(lambda));
  }
  return out;
}

TruncatedSeries ordinary_series_from_counts(const std::vector<int>& decorations, long max_degree,
                                            OrdinaryRecursion& counts) {
  TruncatedSeries f(max_degree);
  for (const auto& l : tree_profiles(decorations, max_degree)) f.add_term(l, Rational(counts(l)));
  return f;
}

TruncatedSeries ordinary_rhs(const TruncatedSeries& f, const std::vector<int>& decorations,
                             long max_degree) {
  const int top = static_cast<int>(std::max(max_degree - 2, -1L));
  // Branch collections sit below one root variable, so degree max_degree - 1
  // suffices inside the cycle index.
  const long inner = std::max(max_degree - 1, 0L);
  std::vector<TruncatedSeries> powers;
  for (long r = 1; r <= top + 1; ++r) powers.push_back(plethysm_substitute(f, r, inner));
  TruncatedSeries out(max_degree);
  for (int j = -1; j <= top; ++j) {
    TruncatedSeries z = j == -1 ? TruncatedSeries::constant(1, inner)
                                : cycle_index_set(j + 1, powers);
    for (int a : decorations) out += multiply_by_variable(z, Key{a, j}, max_degree);
  }
  return out;
}

TruncatedSeries ordinary_series(const std::vector<int>& decorations, long max_degree) {
  if (max_degree < 1) throw DomainError("series degree must be >= 1");
  TruncatedSeries f(max_degree);
  for (long n = 1; n <= max_degree; ++n) {
    f = ordinary_rhs(f.truncated(n), decorations, n).truncated(max_degree);
  }
  return f;
}

ZSeries h_series_euler_product(const std::vector<int>& decorations, long max_m, long max_degree,
                               OrdinaryRecursion& counts) {
  if (max_m < 0) throw DomainError("negative multiset size");
  ZSeries h(static_cast<std::size_t>(max_m + 1), TruncatedSeries(max_degree));
  h[0].add_term(MultiIndex{}, 1);
  for (const auto& l : tree_profiles(decorations, max_degree)) {
    const BigInt f = counts(l);
    // (1 - z u^l)^{-F_l} = sum_n Mlt(F_l, n) z^n u^{n l}
    ZSeries next = h;
    for (long n = 1; n <= max_m; ++n) {
      const MultiIndex shift = scale(l, n);
      if (degree(shift) > max_degree) break;
      const Rational c(mlt(f, static_cast<unsigned long>(n)));
      if (c == 0) continue;
      for (long i = 0; i + n <= max_m; ++i) {
        auto& dst = next[static_cast<std::size_t>(i + n)];
        for (const auto& [k, v] : h[static_cast<std::size_t>(i)].terms()) {
          Rational term = v * c;
          dst.add_term(add(k, shift), term);
        }
      }
    }
    h = std::move(next);
  }
  return h;
}

TruncatedSeries h_series_cycle_index(const TruncatedSeries& f, long m, long max_degree) {
  if (m == 0) return TruncatedSeries::constant(1, max_degree);
  std::vector<TruncatedSeries> powers;
  for (long r = 1; r <= m; ++r) powers.push_back(plethysm_substitute(f, r, max_degree));
  return cycle_index_set(m, powers);
}

TruncatedSeries h_series(const std::vector<int>& decorations, long m, long max_degree) {
  OrdinaryRecursion counts;
  ZSeries product = h_series_euler_product(decorations, m, max_degree, counts);
  TruncatedSeries cycle =
      h_series_cycle_index(ordinary_series(decorations, max_degree), m, max_degree);
  if (!(product[static_cast<std::size_t>(m)] == cycle)) {
    throw std::logic_error("Euler product and cycle index disagree for H_" + std::to_string(m));
  }
  return cycle;
}

}  // namespace fibre

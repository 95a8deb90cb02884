#include "fibre/coproduct.hpp"

#include <algorithm>
#include <functional>

#include "fibre/lowering.hpp"

namespace fibre {

long forest_size(const MonomialForest& f) {
  long r = 0;
  for (const auto& [factor, m] : f) r += m;
  return r;
}

MultiIndex forest_sum(const MonomialForest& f) {
  MultiIndex total;
  for (const auto& [factor, m] : f) total = add(total, scale(factor, m));
  return total;
}

BigInt forest_symmetry(const MonomialForest& f, ForestSigma mode) {
  BigInt s = 1;
  for (const auto& [factor, m] : f) {
    if (mode != ForestSigma::SigmaOnly) s *= factorial(static_cast<unsigned>(m));
    if (mode != ForestSigma::MultOnly) {
      s *= pow(symmetry_factor(factor), static_cast<unsigned long>(m));
    }
  }
  return s;
}

std::vector<RawTerm> coproduct_raw(const MultiIndex& k, DecompositionMode mode,
                                   ForestSigma sigma) {
  if (k.empty() || weight(k) != -1) throw DomainError("weight must be -1");
  std::vector<MultiIndex> candidates;
  for_each_submultiindex(k, [&](const MultiIndex& l) {
    if (!l.empty() && weight(l) == -1) candidates.push_back(l);
    return true;
  });
  std::sort(candidates.begin(), candidates.end(), GradedLess{});

  const BigInt k_factorial = factorial(k);
  std::vector<RawTerm> out;
  MonomialForest forest;
  std::function<void(std::size_t, const MultiIndex&)> walk = [&](std::size_t i,
                                                                 const MultiIndex& rest) {
    if (i == candidates.size()) {
      RawTerm term;
      term.forest = forest;
      term.remainder = rest;
      term.order = forest_size(forest);
      term.prefactor = Rational(k_factorial, forest_symmetry(forest, sigma) * factorial(rest));
      term.prefactor.canonicalize();
      if (mode == DecompositionMode::Ordered) {
        BigInt orderings = factorial(static_cast<unsigned>(term.order));
        for (const auto& [factor, m] : forest) orderings /= factorial(static_cast<unsigned>(m));
        term.prefactor *= orderings;
      }
      out.push_back(std::move(term));
      return;
    }
    walk(i + 1, rest);
    MultiIndex left = rest;
    for (long m = 1;; ++m) {
      auto next = try_subtract(left, candidates[i]);
      if (!next) break;
      left = *std::move(next);
      forest[candidates[i]] = m;
      walk(i + 1, left);
    }
    forest.erase(candidates[i]);
  };
  walk(0, k);
  std::sort(out.begin(), out.end(), [](const RawTerm& x, const RawTerm& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.forest < y.forest;
  });
  return out;
}

namespace {

Polynomial expand_right_leg(const MultiIndex& b, long r, CoproductForm form) {
  switch (form) {
    case CoproductForm::RawDbar:
      return dbar_power(Polynomial::monomial(b), r);
    case CoproductForm::RefinedC: {
      Polynomial p;
      for (const auto& [l, c] : c_coefficients(b, r)) p.add_term(*shift_target(b, l), Rational(c));
      return p;
    }
    case CoproductForm::RefinedD: {
      Polynomial p;
      for (const auto& [l, d] : d_coefficients(b, r)) {
        const MultiIndex target = *shift_target(b, l);
        Rational c(d, factorial(target));
        c.canonicalize();
        p.add_term(target, c);
      }
      return p;
    }
  }
  return {};
}

}  // namespace

TensorExpansion coproduct(const MultiIndex& k, CoproductForm form, DecompositionMode mode,
                          ForestSigma sigma) {
  TensorExpansion out;
  for (const auto& term : coproduct_raw(k, mode, sigma)) {
    const Polynomial right = expand_right_leg(term.remainder, term.order, form);
    for (const auto& [c, v] : right.terms()) {
      Rational add_value = term.prefactor * v;
      auto [it, inserted] = out.try_emplace(TensorKey{term.forest, c}, add_value);
      if (!inserted) it->second += add_value;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string to_string(const MonomialForest& f, const Alphabet& alphabet) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& [factor, m] : f) {
    for (long i = 0; i < m; ++i) {
      if (!out.empty()) out += " ⊙ ";
      out += to_string(factor, alphabet);
    }
  }
  return out;
}

std::string to_string(const TensorExpansion& e, const Alphabet& alphabet) {
  std::string out;
  for (const auto& [key, c] : e) {
    out += to_string(key.first, alphabet) + " ⊗ " + to_string(key.second, alphabet) + " : " +
           to_string(c) + "\n";
  }
  return out;
}

}  // namespace fibre

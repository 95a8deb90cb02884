#ifndef FIBRE_COPRODUCT_HPP
#define FIBRE_COPRODUCT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibre/multiindex.hpp"
#include "fibre/numeric.hpp"

namespace fibre {

/// Commutative product of weight -1 monomials: factor -> multiplicity.
using MonomialForest = std::map<MultiIndex, long>;

long forest_size(const MonomialForest& f);
MultiIndex forest_sum(const MonomialForest& f);

enum class ForestSigma { MultTimesSigma, SigmaOnly, MultOnly };
enum class DecompositionMode { Multiset, Ordered };
enum class CoproductForm { RawDbar, RefinedC, RefinedD };

/// MultTimesSigma: prod over distinct factors of mult! times prod_i sigma(x^{k^i});
/// the other modes keep one of the two products.
BigInt forest_symmetry(const MonomialForest& f,
                       ForestSigma mode = ForestSigma::MultTimesSigma);

struct RawTerm {
  MonomialForest forest;
  MultiIndex remainder;
  long order = 0;
  Rational prefactor;
};

/// Every decomposition k = k^1 + ... + k^r + b with wt(k^i) = -1 and
/// prefactor k! / (sigma(forest) b!), in canonical order.
std::vector<RawTerm> coproduct_raw(const MultiIndex& k,
                                   DecompositionMode mode = DecompositionMode::Multiset,
                                   ForestSigma sigma = ForestSigma::MultTimesSigma);

using TensorKey = std::pair<MonomialForest, MultiIndex>;
using TensorExpansion = std::map<TensorKey, Rational>;

/// The raw terms with dbar^r x^b expanded in the requested form; equal keys
/// merged and zeros dropped.
TensorExpansion coproduct(const MultiIndex& k, CoproductForm form,
                          DecompositionMode mode = DecompositionMode::Multiset,
                          ForestSigma sigma = ForestSigma::MultTimesSigma);

/// "1" for the empty forest, otherwise factors joined by " ⊙ ".
std::string to_string(const MonomialForest& f, const Alphabet& alphabet);
/// One line per term: "<forest> ⊗ <monomial> : <coefficient>".
std::string to_string(const TensorExpansion& e, const Alphabet& alphabet);

}  // namespace fibre

#endif  // FIBRE_COPRODUCT_HPP

#ifndef FIBRE_TREES_HPP
#define FIBRE_TREES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "fibre/multiindex.hpp"
#include "fibre/numeric.hpp"

namespace fibre {

/// Decorated rooted tree in canonical form: children sorted by the
/// canonical order (decoration first, then the child lists
/// lexicographically), so equal subtrees are adjacent and structural
/// equality is isomorphism.
class DecoratedTree {
 public:
  explicit DecoratedTree(int decoration) : decoration_(decoration) {}

  int decoration() const { return decoration_; }
  const std::vector<DecoratedTree>& children() const { return children_; }
  std::size_t fertility() const { return children_.size(); }
  std::size_t vertex_count() const { return size_; }

  bool operator==(const DecoratedTree& other) const;
  std::strong_ordering operator<=>(const DecoratedTree& other) const;

 private:
  friend DecoratedTree canonicalize(int decoration, std::vector<DecoratedTree> children);

  int decoration_;
  std::size_t size_ = 1;
  std::vector<DecoratedTree> children_;
};

/// Root decoration over a multiset of (already canonical) children.
DecoratedTree canonicalize(int decoration, std::vector<DecoratedTree> children);

/// |Aut(t)|: product over runs of equal children of (run length)! times
/// the automorphism orders of all children.
BigInt automorphism_order(const DecoratedTree& t);

/// k(t): k_j^a counts the vertices with decoration a and j + 1 children.
MultiIndex profile(const DecoratedTree& t);

/// Text form "a(a,a(b))", children in canonical order.
std::string to_string(const DecoratedTree& t, const Alphabet& alphabet);
/// Parses and canonicalizes. Throws ParseError.
DecoratedTree parse_tree(std::string_view text, const Alphabet& alphabet);

struct OracleCaps {
  long max_vertices = 8;
  std::size_t max_decorations = 2;
};

/// Brute-force generator of all canonical trees, memoized per decoration
/// set. Trees of size n are a root decoration over a multiset of smaller
/// trees, chosen in nondecreasing canonical order so each appears once.
/// Population is guarded by a mutex; use one instance per context.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(OracleCaps caps = {}) : caps_(caps) {}

  /// Every canonical tree with n vertices over the given decoration ids,
  /// sorted canonically. Throws CapExceeded beyond the configured caps.
  std::vector<DecoratedTree> trees(long n, const std::vector<int>& decorations);

  /// All trees with profile k (filtering trees(|k|) by profile); empty
  /// unless weight(k) == -1.
  std::vector<DecoratedTree> fibre(const MultiIndex& k);

  /// Groups every tree with at most max_n vertices by profile.
  std::map<MultiIndex, std::vector<DecoratedTree>> fibres_by_profile(
      long max_n, const std::vector<int>& decorations);

  const OracleCaps& caps() const { return caps_; }

 private:
  struct Level {
    std::vector<int> decorations;
    // by_size[n] holds the trees with n vertices (index 0 unused).
    std::vector<std::vector<DecoratedTree>> by_size{1};
  };

  Level& level_for(const std::vector<int>& decorations);
  void extend(Level& level, long n);
  void check_caps(long n, std::size_t decorations) const;

  OracleCaps caps_;
  std::mutex mutex_;
  std::vector<Level> levels_;
};

std::vector<DecoratedTree> enumerate_trees(long n, const Alphabet& alphabet);
std::vector<DecoratedTree> enumerate_fibre(const MultiIndex& k);

/// jmath(x^k) = sum over the fibre of sigma(x^k) / sigma(t) t.
using FibreExpansion = std::map<DecoratedTree, Rational>;

/// Throws DomainError("weight must be -1").
FibreExpansion jmath_expansion(const MultiIndex& k, TreeEnumerator& enumerator);
FibreExpansion jmath_expansion(const MultiIndex& k);

}  // namespace fibre

#endif  // FIBRE_TREES_HPP

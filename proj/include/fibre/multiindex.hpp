#ifndef FIBRE_MULTIINDEX_HPP
#define FIBRE_MULTIINDEX_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibre/numeric.hpp"

namespace fibre {

/// Finite decoration alphabet. Names are kept sorted, so the interned id
/// order coincides with the lexicographic order of names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  std::optional<int> id(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }
  std::vector<int> ids() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

bool is_valid_decoration_name(std::string_view name);

/// Every identifier occurring in a multi-index or tree text, sorted and
/// deduplicated. Used to infer an alphabet from command-line input.
std::vector<std::string> scan_decoration_names(std::string_view text);

/// Coordinate (a, j) of a multi-index; j >= -1.
struct Key {
  int decoration = 0;
  int j = -1;

  auto operator<=>(const Key&) const = default;
};

/// Finitely supported map (decoration, j) -> count in canonical sparse
/// form: entries sorted by key, every stored count >= 1.
class MultiIndex {
 public:
  struct Entry {
    Key key;
    long count = 0;

    auto operator<=>(const Entry&) const = default;
  };

  MultiIndex() = default;

  /// Accepts entries in any order; equal keys are summed and zero counts
  /// dropped. Throws DomainError on j < -1 or a negative total.
  MultiIndex(std::initializer_list<Entry> entries);
  static MultiIndex from_entries(std::vector<Entry> entries);
  /// Trusts the caller: entries already sorted by key, distinct, count >= 1.
  static MultiIndex from_canonical(std::vector<Entry> entries);
  static MultiIndex unit(int decoration, int j) { return MultiIndex{{{decoration, j}, 1}}; }

  long operator[](Key key) const;
  long count(int decoration, int j) const { return (*this)[Key{decoration, j}]; }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// Largest j present, or -2 for the empty multi-index.
  int max_index() const;
  std::vector<int> decorations() const;

  bool operator==(const MultiIndex&) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

  std::size_t hash() const;

 private:
  std::vector<Entry> entries_;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& k) const { return k.hash(); }
};

long degree(const MultiIndex& k);
long weight(const MultiIndex& k);

/// Product of coordinate factorials; the symmetry factor of x^k.
BigInt symmetry_factor(const MultiIndex& k);
/// Same value as symmetry_factor, under the k! notation.
BigInt factorial(const MultiIndex& k);

MultiIndex add(const MultiIndex& k, const MultiIndex& m);
/// Throws DomainError("negative component") when k - m is not >= 0.
MultiIndex subtract(const MultiIndex& k, const MultiIndex& m);
/// k - m when componentwise nonnegative.
std::optional<MultiIndex> try_subtract(const MultiIndex& k, const MultiIndex& m);
/// r * k, used for plethystic substitution u^l -> u^{rl}.
MultiIndex scale(const MultiIndex& k, long r);

inline MultiIndex operator+(const MultiIndex& k, const MultiIndex& m) { return add(k, m); }
inline MultiIndex operator-(const MultiIndex& k, const MultiIndex& m) { return subtract(k, m); }

/// m <= k componentwise.
bool is_sub_multiindex(const MultiIndex& m, const MultiIndex& k);

bool is_lowering(const MultiIndex& l);

/// (<-l)_j = l_{j+1}. Throws DomainError("not a lowering multi-index").
MultiIndex left_shift(const MultiIndex& l);

/// k - l + <-l, or nullopt when a component would be negative.
std::optional<MultiIndex> shift_target(const MultiIndex& k, const MultiIndex& l);

/// The unique lowering l with b = k - l + <-l, or nullopt (unreachable).
using ShiftResult = std::optional<MultiIndex>;
ShiftResult find_shift(const MultiIndex& k, const MultiIndex& b);

/// Visits every m with 0 <= m <= k, odometer-style in canonical order
/// (first coordinate fastest). The visitor returns false to stop early.
void for_each_submultiindex(const MultiIndex& k,
                            const std::function<bool(const MultiIndex&)>& visit);

/// Every multi-index over the given decorations with 1 <= degree <= max_degree,
/// indices j in [-1, max_index] and the requested weight; ordered by degree,
/// then canonically.
std::vector<MultiIndex> enumerate_multiindices(const std::vector<int>& decorations,
                                               int max_index, long max_degree);
std::vector<MultiIndex> enumerate_multiindices(const std::vector<int>& decorations,
                                               int max_index, long max_degree, long weight);

/// The weight -1 multi-indices of degree <= max_degree (tree profiles).
std::vector<MultiIndex> tree_profiles(const std::vector<int>& decorations, long max_degree);

/// Orders by degree first, then canonically. Used for printed series.
struct GradedLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const long da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  }
};

/// Text grammar "a:-1=2,a:1=1" or "0" for the empty multi-index.
std::string to_string(const MultiIndex& k, const Alphabet& alphabet);
MultiIndex parse_multiindex(std::string_view text, const Alphabet& alphabet);

}  // namespace fibre

#endif  // FIBRE_MULTIINDEX_HPP

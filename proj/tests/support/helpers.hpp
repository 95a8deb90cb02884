#ifndef FIBRE_TESTS_HELPERS_HPP
#define FIBRE_TESTS_HELPERS_HPP

#include <string_view>

#include "fibre/multiindex.hpp"
#include "fibre/trees.hpp"

namespace fibre::testing {

inline const Alphabet& ab() {
  static const Alphabet alphabet({"a", "b"});
  return alphabet;
}

inline MultiIndex mi(std::string_view text) { return parse_multiindex(text, ab()); }
inline DecoratedTree tree(std::string_view text) { return parse_tree(text, ab()); }
inline std::string str(const MultiIndex& k) { return to_string(k, ab()); }

constexpr int A = 0;
constexpr int B = 1;

}  // namespace fibre::testing

#endif  // FIBRE_TESTS_HELPERS_HPP

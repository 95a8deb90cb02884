#include "fibre/trees.hpp"

#include <algorithm>
#include <functional>

namespace fibre {

bool DecoratedTree::operator==(const DecoratedTree& other) const {
  return size_ == other.size_ && decoration_ == other.decoration_ &&
         children_ == other.children_;
}

std::strong_ordering DecoratedTree::operator<=>(const DecoratedTree& other) const {
  if (auto c = decoration_ <=> other.decoration_; c != 0) return c;
  return std::lexicographical_compare_three_way(children_.begin(), children_.end(),
                                                other.children_.begin(), other.children_.end());
}

DecoratedTree canonicalize(int decoration, std::vector<DecoratedTree> children) {
  std::sort(children.begin(), children.end());
  DecoratedTree t(decoration);
  for (const auto& c : children) t.size_ += c.size_;
  t.children_ = std::move(children);
  return t;
}

BigInt automorphism_order(const DecoratedTree& t) {
  BigInt order = 1;
  const auto& ch = t.children();
  std::size_t i = 0;
  while (i < ch.size()) {
    std::size_t run = 1;
    while (i + run < ch.size() && ch[i + run] == ch[i]) ++run;
    order *= factorial(static_cast<unsigned>(run));
    BigInt child = automorphism_order(ch[i]);
    order *= pow(child, run);
    i += run;
  }
  return order;
}

namespace {

void collect_profile(const DecoratedTree& t, std::vector<MultiIndex::Entry>& out) {
  out.push_back({{t.decoration(), static_cast<int>(t.fertility()) - 1}, 1});
  for (const auto& c : t.children()) collect_profile(c, out);
}

}  // namespace

MultiIndex profile(const DecoratedTree& t) {
  std::vector<MultiIndex::Entry> entries;
  collect_profile(t, entries);
  return MultiIndex::from_entries(std::move(entries));
}

std::string to_string(const DecoratedTree& t, const Alphabet& alphabet) {
  std::string out = alphabet.name(t.decoration());
  if (t.children().empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(t.children()[i], alphabet);
  }
  out += ')';
  return out;
}

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  DecoratedTree parse() {
    DecoratedTree t = node();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  DecoratedTree node() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ',') {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (!is_valid_decoration_name(name)) fail("invalid decoration '" + std::string(name) + "'");
    auto id = alphabet_.id(name);
    if (!id) fail("decoration '" + std::string(name) + "' is not in the alphabet");
    std::vector<DecoratedTree> children;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      children.push_back(node());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(node());
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    return canonicalize(*id, std::move(children));
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("tree '" + std::string(text_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

DecoratedTree parse_tree(std::string_view text, const Alphabet& alphabet) {
  return TreeParser(text, alphabet).parse();
}

// ---------------------------------------------------------------------------
// Enumeration

void TreeEnumerator::check_caps(long n, std::size_t decorations) const {
  if (n > caps_.max_vertices) {
    throw CapExceeded("tree oracle limited to " + std::to_string(caps_.max_vertices) +
                      " vertices (requested " + std::to_string(n) + ")");
  }
  if (decorations > caps_.max_decorations) {
    throw CapExceeded("tree oracle limited to " + std::to_string(caps_.max_decorations) +
                      " decorations (requested " + std::to_string(decorations) + ")");
  }
}

TreeEnumerator::Level& TreeEnumerator::level_for(const std::vector<int>& decorations) {
  for (auto& level : levels_) {
    if (level.decorations == decorations) return level;
  }
  levels_.push_back(Level{decorations, {{}}});
  return levels_.back();
}

void TreeEnumerator::extend(Level& level, long n) {
  while (static_cast<long>(level.by_size.size()) <= n) {
    const long size = static_cast<long>(level.by_size.size());
    std::vector<DecoratedTree> pool;
    for (const auto& trees : level.by_size) pool.insert(pool.end(), trees.begin(), trees.end());
    std::sort(pool.begin(), pool.end());

    std::vector<DecoratedTree> result;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, long)> choose = [&](std::size_t start, long remaining) {
      if (remaining == 0) {
        std::vector<DecoratedTree> children;
        children.reserve(chosen.size());
        for (std::size_t i : chosen) children.push_back(pool[i]);
        for (int d : level.decorations) result.push_back(canonicalize(d, children));
        return;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        if (static_cast<long>(pool[i].vertex_count()) > remaining) continue;
        chosen.push_back(i);
        choose(i, remaining - static_cast<long>(pool[i].vertex_count()));
        chosen.pop_back();
      }
    };
    choose(0, size - 1);
    std::sort(result.begin(), result.end());
    level.by_size.push_back(std::move(result));
  }
}

std::vector<DecoratedTree> TreeEnumerator::trees(long n, const std::vector<int>& decorations) {
  if (n < 1) throw DomainError("tree size must be positive");
  if (decorations.empty()) throw DomainError("empty decoration alphabet");
  std::vector<int> decos = decorations;
  std::sort(decos.begin(), decos.end());
  decos.erase(std::unique(decos.begin(), decos.end()), decos.end());
  check_caps(n, decos.size());
  std::lock_guard<std::mutex> lock(mutex_);
  Level& level = level_for(decos);
  extend(level, n);
  return level.by_size[static_cast<std::size_t>(n)];
}

std::vector<DecoratedTree> TreeEnumerator::fibre(const MultiIndex& k) {
  if (k.empty() || weight(k) != -1) return {};
  std::vector<DecoratedTree> out;
  for (auto& t : trees(degree(k), k.decorations())) {
    if (profile(t) == k) out.push_back(std::move(t));
  }
  return out;
}

std::map<MultiIndex, std::vector<DecoratedTree>> TreeEnumerator::fibres_by_profile(
    long max_n, const std::vector<int>& decorations) {
  std::map<MultiIndex, std::vector<DecoratedTree>> out;
  for (long n = 1; n <= max_n; ++n) {
    for (auto& t : trees(n, decorations)) out[profile(t)].push_back(std::move(t));
  }
  return out;
}

std::vector<DecoratedTree> enumerate_trees(long n, const Alphabet& alphabet) {
  TreeEnumerator enumerator;
  return enumerator.trees(n, alphabet.ids());
}

std::vector<DecoratedTree> enumerate_fibre(const MultiIndex& k) {
  TreeEnumerator enumerator;
  return enumerator.fibre(k);
}

FibreExpansion jmath_expansion(const MultiIndex& k, TreeEnumerator& enumerator) {
  if (weight(k) != -1) throw DomainError("weight must be -1");
  const BigInt sigma_k = symmetry_factor(k);
  FibreExpansion out;
  for (auto& t : enumerator.fibre(k)) {
    Rational c(sigma_k, automorphism_order(t));
    c.canonicalize();
    out.emplace(std::move(t), std::move(c));
  }
  return out;
}

FibreExpansion jmath_expansion(const MultiIndex& k) {
  TreeEnumerator enumerator;
  return jmath_expansion(k, enumerator);
}

}  // namespace fibre

#include "fibre/multiindex.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace fibre {

// ---------------------------------------------------------------------------
// Alphabet

bool is_valid_decoration_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_) {
    if (!is_valid_decoration_name(n)) throw ParseError("invalid decoration name '" + n + "'");
  }
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

std::optional<int> Alphabet::id(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<int> Alphabet::ids() const {
  std::vector<int> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
  return out;
}

std::vector<std::string> scan_decoration_names(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto word = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  while (i < text.size()) {
    if (alpha(text[i]) && (i == 0 || !word(text[i - 1]))) {
      std::size_t j = i;
      while (j < text.size() && word(text[j])) ++j;
      names.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::initializer_list<Entry> entries)
    : MultiIndex(from_entries(std::vector<Entry>(entries))) {}

MultiIndex MultiIndex::from_entries(std::vector<Entry> entries) {
  std::map<Key, long> acc;
  for (const auto& e : entries) {
    if (e.key.j < -1) throw DomainError("fertility index below -1");
    acc[e.key] += e.count;
  }
  MultiIndex k;
  for (const auto& [key, count] : acc) {
    if (count < 0) throw DomainError("negative component");
    if (count > 0) k.entries_.push_back({key, count});
  }
  return k;
}

MultiIndex MultiIndex::from_canonical(std::vector<Entry> entries) {
  MultiIndex k;
  k.entries_ = std::move(entries);
  return k;
}

long MultiIndex::operator[](Key key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, const Key& k) { return e.key < k; });
  return (it != entries_.end() && it->key == key) ? it->count : 0;
}

int MultiIndex::max_index() const {
  int m = -2;
  for (const auto& e : entries_) m = std::max(m, e.key.j);
  return m;
}

std::vector<int> MultiIndex::decorations() const {
  std::vector<int> out;
  for (const auto& e : entries_) {
    if (out.empty() || out.back() != e.key.decoration) out.push_back(e.key.decoration);
  }
  return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(),
                                                other.entries_.begin(), other.entries_.end());
}

std::size_t MultiIndex::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 0x100000001b3ULL; };
  for (const auto& e : entries_) {
    mix(static_cast<std::size_t>(e.key.decoration));
    mix(static_cast<std::size_t>(e.key.j + 1));
    mix(static_cast<std::size_t>(e.count));
  }
  return h;
}

long degree(const MultiIndex& k) {
  long d = 0;
  for (const auto& e : k.entries()) d += e.count;
  return d;
}

long weight(const MultiIndex& k) {
  long w = 0;
  for (const auto& e : k.entries()) w += e.key.j * e.count;
  return w;
}

BigInt symmetry_factor(const MultiIndex& k) {
  BigInt s = 1;
  for (const auto& e : k.entries()) s *= fibre::factorial(static_cast<unsigned>(e.count));
  return s;
}

BigInt factorial(const MultiIndex& k) { return symmetry_factor(k); }

namespace {

// Merges two sorted entry lists with sign applied to the second.
std::vector<MultiIndex::Entry> merge(const MultiIndex& k, const MultiIndex& m, long sign,
                                     bool& negative) {
  std::vector<MultiIndex::Entry> out;
  out.reserve(k.support_size() + m.support_size());
  auto a = k.entries().begin(), ae = k.entries().end();
  auto b = m.entries().begin(), be = m.entries().end();
  negative = false;
  while (a != ae || b != be) {
    MultiIndex::Entry e;
    if (b == be || (a != ae && a->key < b->key)) {
      e = *a++;
    } else if (a == ae || b->key < a->key) {
      e = {b->key, sign * b->count};
      ++b;
    } else {
      e = {a->key, a->count + sign * b->count};
      ++a;
      ++b;
    }
    if (e.count < 0) negative = true;
    if (e.count != 0) out.push_back(e);
  }
  return out;
}

}  // namespace

MultiIndex add(const MultiIndex& k, const MultiIndex& m) {
  bool negative = false;
  return MultiIndex::from_canonical(merge(k, m, +1, negative));
}

std::optional<MultiIndex> try_subtract(const MultiIndex& k, const MultiIndex& m) {
  bool negative = false;
  auto entries = merge(k, m, -1, negative);
  if (negative) return std::nullopt;
  return MultiIndex::from_canonical(std::move(entries));
}

MultiIndex subtract(const MultiIndex& k, const MultiIndex& m) {
  auto r = try_subtract(k, m);
  if (!r) throw DomainError("negative component");
  return *std::move(r);
}

MultiIndex scale(const MultiIndex& k, long r) {
  if (r < 0) throw DomainError("negative component");
  std::vector<MultiIndex::Entry> out;
  if (r == 0) return {};
  for (const auto& e : k.entries()) out.push_back({e.key, e.count * r});
  return MultiIndex::from_canonical(std::move(out));
}

bool is_sub_multiindex(const MultiIndex& m, const MultiIndex& k) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [&](const MultiIndex::Entry& e) { return k[e.key] >= e.count; });
}

bool is_lowering(const MultiIndex& l) {
  return std::none_of(l.entries().begin(), l.entries().end(),
                      [](const MultiIndex::Entry& e) { return e.key.j == -1; });
}

MultiIndex left_shift(const MultiIndex& l) {
  if (!is_lowering(l)) throw DomainError("not a lowering multi-index");
  std::vector<MultiIndex::Entry> out;
  for (const auto& e : l.entries()) out.push_back({{e.key.decoration, e.key.j - 1}, e.count});
  return MultiIndex::from_canonical(std::move(out));
}

std::optional<MultiIndex> shift_target(const MultiIndex& k, const MultiIndex& l) {
  return try_subtract(add(k, left_shift(l)), l);
}

ShiftResult find_shift(const MultiIndex& k, const MultiIndex& b) {
  std::vector<int> decos = k.decorations();
  for (int d : b.decorations()) decos.push_back(d);
  std::sort(decos.begin(), decos.end());
  decos.erase(std::unique(decos.begin(), decos.end()), decos.end());
  const int top = std::max(k.max_index(), b.max_index());

  std::vector<MultiIndex::Entry> lowering;
  for (int a : decos) {
    long balance = 0;
    for (int j = -1; j <= top; ++j) balance += k.count(a, j) - b.count(a, j);
    if (balance != 0) return std::nullopt;
    // Lambda_j = sum_{m >= j} (k_m - b_m), accumulated from the top down.
    long lambda = 0;
    for (int j = top; j >= 0; --j) {
      lambda += k.count(a, j) - b.count(a, j);
      if (lambda < 0) return std::nullopt;
      if (lambda > 0) lowering.push_back({{a, j}, lambda});
    }
  }
  MultiIndex l = MultiIndex::from_entries(std::move(lowering));
  auto target = shift_target(k, l);
  if (!target || *target != b) return std::nullopt;
  return l;
}

void for_each_submultiindex(const MultiIndex& k,
                            const std::function<bool(const MultiIndex&)>& visit) {
  const auto& entries = k.entries();
  std::vector<long> digits(entries.size(), 0);
  while (true) {
    std::vector<MultiIndex::Entry> sub;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (digits[i] > 0) sub.push_back({entries[i].key, digits[i]});
    }
    if (!visit(MultiIndex::from_canonical(std::move(sub)))) return;
    std::size_t i = 0;
    while (i < entries.size() && digits[i] == entries[i].count) digits[i++] = 0;
    if (i == entries.size()) return;
    ++digits[i];
  }
}

std::vector<MultiIndex> enumerate_multiindices(const std::vector<int>& decorations,
                                               int max_index, long max_degree) {
  std::vector<Key> keys;
  for (int a : decorations) {
    for (int j = -1; j <= max_index; ++j) keys.push_back({a, j});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<MultiIndex> out;
  std::vector<MultiIndex::Entry> current;
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long remaining) {
    if (i == keys.size()) {
      if (!current.empty()) out.push_back(MultiIndex::from_canonical(current));
      return;
    }
    walk(i + 1, remaining);
    for (long c = 1; c <= remaining; ++c) {
      current.push_back({keys[i], c});
      walk(i + 1, remaining - c);
      current.pop_back();
    }
  };
  walk(0, max_degree);
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

std::vector<MultiIndex> enumerate_multiindices(const std::vector<int>& decorations,
                                               int max_index, long max_degree, long w) {
  auto all = enumerate_multiindices(decorations, max_index, max_degree);
  std::erase_if(all, [w](const MultiIndex& k) { return weight(k) != w; });
  return all;
}

std::vector<MultiIndex> tree_profiles(const std::vector<int>& decorations, long max_degree) {
  // A tree with n vertices has no vertex with more than n - 1 children.
  const int max_index = static_cast<int>(std::max(max_degree - 2, -1L));
  return enumerate_multiindices(decorations, max_index, max_degree, -1);
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const MultiIndex& k, const Alphabet& alphabet) {
  if (k.empty()) return "0";
  std::string out;
  for (const auto& e : k.entries()) {
    if (!out.empty()) out += ',';
    out += alphabet.name(e.key.decoration);
    out += ':';
    out += std::to_string(e.key.j);
    out += '=';
    out += std::to_string(e.count);
  }
  return out;
}

namespace {

long parse_integer(std::string_view s, std::string_view whole) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed integer '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

MultiIndex parse_multiindex(std::string_view text, const Alphabet& alphabet) {
  const std::string whole(text);
  if (text == "0") return {};
  if (text.empty()) throw ParseError("empty multi-index");
  std::map<Key, long> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view entry = text.substr(pos, comma - pos);
    std::size_t colon = entry.find(':');
    std::size_t equals = entry.find('=');
    if (colon == std::string_view::npos || equals == std::string_view::npos || equals < colon) {
      throw ParseError("malformed entry '" + std::string(entry) + "' in '" + whole + "'");
    }
    std::string_view name = entry.substr(0, colon);
    if (!is_valid_decoration_name(name)) {
      throw ParseError("invalid decoration '" + std::string(name) + "' in '" + whole + "'");
    }
    auto id = alphabet.id(name);
    if (!id) {
      throw ParseError("decoration '" + std::string(name) + "' is not in the alphabet");
    }
    long j = parse_integer(entry.substr(colon + 1, equals - colon - 1), text);
    long count = parse_integer(entry.substr(equals + 1), text);
    if (j < -1) throw ParseError("fertility index below -1 in '" + whole + "'");
    if (count < 1) throw ParseError("count must be >= 1 in '" + whole + "'");
    Key key{*id, static_cast<int>(j)};
    if (!seen.emplace(key, count).second) {
      throw ParseError("duplicate entry '" + std::string(name) + ":" + std::to_string(j) +
                       "' in '" + whole + "'");
    }
    pos = comma + 1;
  }
  std::vector<MultiIndex::Entry> entries;
  for (const auto& [key, count] : seen) entries.push_back({key, count});
  return MultiIndex::from_entries(std::move(entries));
}

}  // namespace fibre

#include "reference.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fibre::reference {

namespace {

struct Flat {
  std::vector<int> parent;
  std::vector<int> decoration;
};

void flatten(const DecoratedTree& t, int parent, Flat& out) {
  const int self = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.decoration.push_back(t.decoration());
  for (const auto& c : t.children()) flatten(c, self, out);
}

}  // namespace

BigInt automorphisms_by_permutation(const DecoratedTree& t) {
  Flat f;
  flatten(t, -1, f);
  const int n = static_cast<int>(f.parent.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const int image = perm[static_cast<std::size_t>(v)];
      const int p = f.parent[static_cast<std::size_t>(v)];
      const int pimage = f.parent[static_cast<std::size_t>(image)];
      ok = f.decoration[static_cast<std::size_t>(v)] == f.decoration[static_cast<std::size_t>(image)] &&
           (p == -1 ? pimage == -1 : pimage == perm[static_cast<std::size_t>(p)]);
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<std::vector<int>> labelled_rooted_trees(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  // Each vertex picks a parent in [-1, n); keep arrays with exactly one
  // root and no cycles.
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      int roots = 0;
      for (int p : parent) roots += p == -1;
      if (roots != 1) return;
      for (int s = 0; s < n; ++s) {
        int x = s;
        for (int steps = 0; x != -1; ++steps) {
          if (steps > n) return;
          x = parent[static_cast<std::size_t>(x)];
        }
      }
      out.push_back(parent);
      return;
    }
    for (int p = -1; p < n; ++p) {
      if (p == v) continue;
      parent[static_cast<std::size_t>(v)] = p;
      assign(v + 1);
    }
  };
  assign(0);
  return out;
}

std::map<std::vector<long>, BigInt> labelled_fertility_census(int n) {
  std::map<std::vector<long>, BigInt> census;
  for (const auto& parent : labelled_rooted_trees(n)) {
    std::vector<long> fert(static_cast<std::size_t>(n), 0);
    for (int p : parent) {
      if (p >= 0) ++fert[static_cast<std::size_t>(p)];
    }
    ++census[fert];
  }
  return census;
}

BigInt labelled_profile_count(const MultiIndex& k) {
  const int n = static_cast<int>(degree(k));
  // Children-count histograms of all labelled trees on n vertices.
  std::map<std::map<long, long>, BigInt> histograms;
  for (const auto& [fert, count] : labelled_fertility_census(n)) {
    std::map<long, long> h;
    for (long f : fert) ++h[f];
    histograms[h] += count;
  }
  std::map<long, long> wanted;
  std::map<long, std::vector<long>> split;
  for (const auto& e : k.entries()) {
    wanted[e.key.j + 1] += e.count;
    split[e.key.j + 1].push_back(e.count);
  }
  BigInt total = 0;
  for (const auto& [h, count] : histograms) {
    if (h != wanted) continue;
    BigInt ways = 1;
    for (const auto& [f, c] : h) {
      BigInt m;
      mpz_fac_ui(m.get_mpz_t(), static_cast<unsigned long>(c));
      for (long part : split[f]) {
        BigInt d;
        mpz_fac_ui(d.get_mpz_t(), static_cast<unsigned long>(part));
        m /= d;
      }
      ways *= m;
    }
    total += count * ways;
  }
  return total;
}

RefPolynomial ref_monomial(const MultiIndex& k) {
  RefMonomial m;
  for (const auto& e : k.entries()) m[{e.key.decoration, e.key.j}] = e.count;
  return {{m, BigInt(1)}};
}

RefPolynomial ref_dbar(const RefPolynomial& p) {
  RefPolynomial out;
  for (const auto& [m, c] : p) {
    for (const auto& [var, power] : m) {
      if (var.second < 0) continue;
      RefMonomial next = m;
      if (--next[var] == 0) next.erase(var);
      ++next[{var.first, var.second - 1}];
      out[next] += c * power;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MultiIndex to_multiindex(const RefMonomial& m) {
  std::vector<MultiIndex::Entry> entries;
  for (const auto& [var, power] : m) entries.push_back({{var.first, var.second}, power});
  return MultiIndex::from_entries(entries);
}

std::vector<MultiIndex> scan_lowerings(const MultiIndex& k, const MultiIndex& b, long max_order) {
  std::vector<Key> slots;
  for (int a : k.decorations()) {
    for (int j = 0; j <= std::max(k.max_index(), 0); ++j) slots.push_back({a, j});
  }
  std::vector<MultiIndex> out;
  std::vector<long> counts(slots.size(), 0);
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long left) {
    if (i == slots.size()) {
      std::vector<MultiIndex::Entry> entries;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (counts[s] > 0) entries.push_back({slots[s], counts[s]});
      }
      MultiIndex l = MultiIndex::from_entries(entries);
      // target = k - l + <-l, computed by hand.
      std::map<std::pair<int, int>, long> t;
      for (const auto& e : k.entries()) t[{e.key.decoration, e.key.j}] += e.count;
      for (const auto& e : l.entries()) {
        t[{e.key.decoration, e.key.j}] -= e.count;
        t[{e.key.decoration, e.key.j - 1}] += e.count;
      }
      std::vector<MultiIndex::Entry> te;
      for (const auto& [key, c] : t) {
        if (c < 0) return;
        if (c > 0) te.push_back({{key.first, key.second}, c});
      }
      if (MultiIndex::from_entries(te) == b) out.push_back(l);
      return;
    }
    for (long c = 0; c <= left; ++c) {
      counts[i] = c;
      walk(i + 1, left - c);
    }
    counts[i] = 0;
  };
  walk(0, max_order);
  return out;
}

const std::vector<long> kRootedTrees = {1, 1, 2, 4, 9, 20, 48, 115};
const std::vector<long> kTwoColouredRootedTrees = {2, 4, 14, 52, 214, 916, 4116, 18996};

}  // namespace fibre::reference

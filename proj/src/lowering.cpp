#include "fibre/lowering.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fibre {

Polynomial Polynomial::monomial(const MultiIndex& k, const Rational& c) {
  Polynomial p;
  p.add_term(k, c);
  return p;
}

void Polynomial::add_term(const MultiIndex& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial dbar(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& e : m.entries()) {
      if (e.key.j < 0) continue;
      const int a = e.key.decoration;
      MultiIndex lowered = add(subtract(m, MultiIndex::unit(a, e.key.j)),
                               MultiIndex::unit(a, e.key.j - 1));
      Rational term = c * e.count;
      out.add_term(lowered, term);
    }
  }
  return out;
}

Polynomial dbar_power(const Polynomial& p, long r) {
  if (r < 0) throw DomainError("negative power of dbar");
  Polynomial out = p;
  for (long i = 0; i < r && !out.is_zero(); ++i) out = dbar(out);
  return out;
}

long lowering_capacity(const MultiIndex& k) {
  long capacity = 0;
  for (const auto& e : k.entries()) capacity += (e.key.j + 1) * e.count;
  return capacity;
}

namespace {

void require_lowering(const MultiIndex& l) {
  if (!is_lowering(l)) throw DomainError("not a lowering multi-index");
}

// Coordinates (a, j >= 0) that can carry a nonzero lowering for source k.
std::vector<Key> lowering_slots(const MultiIndex& k) {
  std::vector<Key> slots;
  const int top = k.max_index();
  for (int a : k.decorations()) {
    for (int j = 0; j <= top; ++j) slots.push_back({a, j});
  }
  return slots;
}

using Layer = std::map<MultiIndex, BigInt>;

// Builds the layer |l| = r from |l| = r - 1 with the given step factor;
// entries whose target k - l + <-l is negative are dropped (they are zero).
Layer next_layer(const MultiIndex& k, const Layer& previous,
                 const std::function<long(const MultiIndex& l, Key slot)>& factor) {
  std::set<MultiIndex> candidates;
  const auto slots = lowering_slots(k);
  for (const auto& [lp, value] : previous) {
    for (Key s : slots) candidates.insert(add(lp, MultiIndex::unit(s.decoration, s.j)));
  }
  Layer out;
  for (const auto& l : candidates) {
    if (!shift_target(k, l)) continue;
    BigInt total = 0;
    for (const auto& e : l.entries()) {
      MultiIndex prev = subtract(l, MultiIndex::unit(e.key.decoration, e.key.j));
      auto it = previous.find(prev);
      if (it == previous.end()) continue;
      total += it->second * factor(l, e.key);
    }
    if (total != 0) out.emplace(l, std::move(total));
  }
  return out;
}

long c_step(const MultiIndex& k, const MultiIndex& l, Key slot) {
  const int a = slot.decoration, j = slot.j;
  return k.count(a, j) - l.count(a, j) + 1 + l.count(a, j + 1);
}

long d_step(const MultiIndex& k, const MultiIndex& l, Key slot) {
  const int a = slot.decoration, j = slot.j;
  return k.count(a, j - 1) - l.count(a, j - 1) + l.count(a, j);
}

}  // namespace

std::map<MultiIndex, BigInt> c_coefficients(const MultiIndex& k, long r) {
  if (r < 0) throw DomainError("negative lowering order");
  Layer layer{{MultiIndex{}, BigInt(1)}};
  for (long i = 0; i < r && !layer.empty(); ++i) {
    layer = next_layer(k, layer, [&](const MultiIndex& l, Key s) { return c_step(k, l, s); });
  }
  return layer;
}

std::map<MultiIndex, BigInt> d_coefficients(const MultiIndex& k, long r) {
  if (r < 0) throw DomainError("negative lowering order");
  Layer layer{{MultiIndex{}, factorial(k)}};
  for (long i = 0; i < r && !layer.empty(); ++i) {
    layer = next_layer(k, layer, [&](const MultiIndex& l, Key s) { return d_step(k, l, s); });
  }
  return layer;
}

namespace {

BigInt top_down(const MultiIndex& k, const MultiIndex& l, const BigInt& base,
                long (*step)(const MultiIndex&, const MultiIndex&, Key),
                std::map<MultiIndex, BigInt>& memo) {
  if (l.empty()) return base;
  if (!shift_target(k, l)) return 0;
  if (auto it = memo.find(l); it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& e : l.entries()) {
    MultiIndex prev = subtract(l, MultiIndex::unit(e.key.decoration, e.key.j));
    BigInt sub = top_down(k, prev, base, step, memo);
    if (sub != 0) total += sub * step(k, l, e.key);
  }
  memo.emplace(l, total);
  return total;
}

}  // namespace

BigInt c_coefficient(const MultiIndex& k, const MultiIndex& l) {
  require_lowering(l);
  std::map<MultiIndex, BigInt> memo;
  return top_down(k, l, BigInt(1), &c_step, memo);
}

BigInt d_coefficient(const MultiIndex& k, const MultiIndex& l) {
  require_lowering(l);
  auto target = shift_target(k, l);
  if (!target) return 0;
  return c_coefficient(k, l) * factorial(*target);
}

BigInt d_coefficient_recursive(const MultiIndex& k, const MultiIndex& l) {
  require_lowering(l);
  std::map<MultiIndex, BigInt> memo;
  return top_down(k, l, factorial(k), &d_step, memo);
}

// ---------------------------------------------------------------------------
// Univariate polynomials

UPolynomial UPolynomial::monomial(long degree, const Rational& c) {
  UPolynomial p;
  p.add_term(degree, c);
  return p;
}

void UPolynomial::add_term(long degree, const Rational& c) {
  if (degree < 0) throw DomainError("negative degree in u");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational UPolynomial::coefficient(long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rational(0) : it->second;
}

UPolynomial& UPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
  UPolynomial out;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      Rational c = ca * cb;
      out.add_term(da + db, c);
    }
  }
  return out;
}

std::string to_string(const UPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [d, c] : p.terms()) {
    std::string term;
    BigInt num = c.get_num();
    const BigInt& den = c.get_den();
    if (!out.empty()) {
      if (num < 0) {
        out += " - ";
        num = -num;
      } else {
        out += " + ";
      }
    } else if (num < 0) {
      term += "-";
      num = -num;
    }
    if (d == 0) {
      term += num.get_str();
    } else {
      if (num != 1) term += num.get_str() + "*";
      term += d == 1 ? std::string("u") : "u^" + std::to_string(d);
    }
    if (den != 1) term += "/" + den.get_str();
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient generating functions

std::map<MultiIndex, UPolynomial> coefficient_gf(const MultiIndex& k) {
  std::map<MultiIndex, UPolynomial> acc{{MultiIndex{}, UPolynomial::monomial(0, 1)}};
  for (const auto& e : k.entries()) {
    const int a = e.key.decoration, j = e.key.j;
    // E_u(x_j^a) = sum_{m=0}^{j+1} u^m / m! x_{j-m}^a
    std::vector<std::pair<MultiIndex, UPolynomial>> factor;
    for (int m = 0; m <= j + 1; ++m) {
      factor.emplace_back(MultiIndex::unit(a, j - m),
                          UPolynomial::monomial(m, Rational(BigInt(1), factorial(m))));
    }
    for (long c = 0; c < e.count; ++c) {
      std::map<MultiIndex, UPolynomial> next;
      for (const auto& [target, poly] : acc) {
        for (const auto& [x, u] : factor) {
          UPolynomial prod = poly * u;
          auto& slot = next[add(target, x)];
          for (const auto& [d, v] : prod.terms()) slot.add_term(d, v);
        }
      }
      acc = std::move(next);
    }
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return acc;
}

std::map<MultiIndex, UPolynomial> coefficient_gf_by_dbar(const MultiIndex& k) {
  std::map<MultiIndex, UPolynomial> out;
  Polynomial p = Polynomial::monomial(k);
  for (long r = 0; !p.is_zero(); ++r) {
    const Rational scale_r(BigInt(1), factorial(static_cast<unsigned>(r)));
    for (const auto& [m, c] : p.terms()) {
      Rational coeff = c * scale_r;
      out[m].add_term(r, coeff);
    }
    p = dbar(p);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ---------------------------------------------------------------------------
// Transport arrays

namespace {

using DecorationArray = std::map<std::tuple<int, int, int>, long>;

std::vector<DecorationArray> arrays_for_decoration(int a, const MultiIndex& k,
                                                   const MultiIndex& b) {
  std::vector<std::pair<int, long>> rows, cols;
  for (const auto& e : k.entries()) {
    if (e.key.decoration == a) rows.emplace_back(e.key.j, e.count);
  }
  for (const auto& e : b.entries()) {
    if (e.key.decoration == a) cols.emplace_back(e.key.j, e.count);
  }
  std::vector<DecorationArray> out;
  std::vector<long> capacity;
  for (const auto& c : cols) capacity.push_back(c.second);
  DecorationArray current;

  // Row by row, column by column: place n in cell (row, col) for s <= j.
  std::function<void(std::size_t, std::size_t, long)> place = [&](std::size_t row,
                                                                  std::size_t col, long left) {
    if (row == rows.size()) {
      if (std::all_of(capacity.begin(), capacity.end(), [](long c) { return c == 0; })) {
        out.push_back(current);
      }
      return;
    }
    if (left == 0) {
      std::size_t next = row + 1;
      place(next, 0, next < rows.size() ? rows[next].second : 0);
      return;
    }
    if (col == cols.size() || cols[col].first > rows[row].first) return;
    const long most = std::min(left, capacity[col]);
    for (long n = most; n >= 0; --n) {
      const auto key = std::make_tuple(a, rows[row].first, cols[col].first);
      if (n > 0) current[key] = n;
      capacity[col] -= n;
      place(row, col + 1, left - n);
      capacity[col] += n;
      if (n > 0) current.erase(key);
    }
  };
  if (!rows.empty()) place(0, 0, rows[0].second);
  else if (cols.empty()) out.emplace_back();
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TransportArray> transport_arrays(const MultiIndex& k, const MultiIndex& b) {
  std::vector<int> decos = k.decorations();
  for (int d : b.decorations()) decos.push_back(d);
  std::sort(decos.begin(), decos.end());
  decos.erase(std::unique(decos.begin(), decos.end()), decos.end());

  std::vector<TransportArray> out{TransportArray{}};
  for (int a : decos) {
    auto local = arrays_for_decoration(a, k, b);
    std::vector<TransportArray> combined;
    for (const auto& partial : out) {
      for (const auto& piece : local) {
        TransportArray t = partial;
        t.entries.insert(piece.begin(), piece.end());
        combined.push_back(std::move(t));
      }
    }
    out = std::move(combined);
    if (out.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

UPolynomial transition_gf(const MultiIndex& k, const MultiIndex& b) {
  UPolynomial out;
  for (const auto& array : transport_arrays(k, b)) {
    BigInt numerator = 1;
    for (const auto& e : k.entries()) numerator *= factorial(static_cast<unsigned>(e.count));
    BigInt denominator = 1;
    long exponent = 0;
    for (const auto& [key, n] : array.entries) {
      const auto [a, j, s] = key;
      (void)a;
      denominator *= factorial(static_cast<unsigned>(n));
      denominator *= pow(factorial(static_cast<unsigned>(j - s)), static_cast<unsigned long>(n));
      exponent += (j - s) * n;
    }
    Rational c(numerator, denominator);
    c.canonicalize();
    out.add_term(exponent, c);
  }
  return out;
}

UPolynomial transition_gf_d(const MultiIndex& k, const MultiIndex& b) {
  UPolynomial p = transition_gf(k, b);
  p *= Rational(factorial(b));
  return p;
}

}  // namespace fibre

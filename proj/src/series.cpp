#include "fibre/series.hpp"

#include <algorithm>

namespace fibre {

TruncatedSeries::TruncatedSeries(long max_degree)
    : max_degree_(max_degree), by_degree_(static_cast<std::size_t>(std::max(max_degree, 0L) + 1)) {
  if (max_degree < 0) throw DomainError("negative truncation degree");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long max_degree) {
  TruncatedSeries s(max_degree);
  s.add_term(MultiIndex{}, c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const MultiIndex& k, const Rational& c,
                                          long max_degree) {
  TruncatedSeries s(max_degree);
  s.add_term(k, c);
  return s;
}

Rational TruncatedSeries::coefficient(const MultiIndex& k) const {
  const long d = degree(k);
  if (d > max_degree_) return 0;
  const auto& part = by_degree_[static_cast<std::size_t>(d)];
  auto it = part.find(k);
  return it == part.end() ? Rational(0) : it->second;
}

const std::map<MultiIndex, Rational>& TruncatedSeries::homogeneous(long n) const {
  static const std::map<MultiIndex, Rational> empty;
  if (n < 0 || n > max_degree_) return empty;
  return by_degree_[static_cast<std::size_t>(n)];
}

std::vector<std::pair<MultiIndex, Rational>> TruncatedSeries::terms() const {
  std::vector<std::pair<MultiIndex, Rational>> out;
  for (const auto& part : by_degree_) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::size_t TruncatedSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& part : by_degree_) n += part.size();
  return n;
}

bool TruncatedSeries::is_zero() const { return term_count() == 0; }

void TruncatedSeries::add_term(const MultiIndex& k, const Rational& c) {
  if (c == 0) return;
  const long d = degree(k);
  if (d > max_degree_) return;
  auto& part = by_degree_[static_cast<std::size_t>(d)];
  auto [it, inserted] = part.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) part.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(long max_degree) const {
  TruncatedSeries out(max_degree);
  for (long n = 0; n <= std::min(max_degree, max_degree_); ++n) {
    out.by_degree_[static_cast<std::size_t>(n)] = by_degree_[static_cast<std::size_t>(n)];
  }
  return out;
}

TruncatedSeries TruncatedSeries::homogeneous_part(long n) const {
  TruncatedSeries out(max_degree_);
  if (n >= 0 && n <= max_degree_) {
    out.by_degree_[static_cast<std::size_t>(n)] = by_degree_[static_cast<std::size_t>(n)];
  }
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  for (long n = 0; n <= std::min(max_degree_, other.max_degree_); ++n) {
    for (const auto& [k, c] : other.by_degree_[static_cast<std::size_t>(n)]) add_term(k, c);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  for (long n = 0; n <= std::min(max_degree_, other.max_degree_); ++n) {
    for (const auto& [k, c] : other.by_degree_[static_cast<std::size_t>(n)]) add_term(k, -c);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    for (auto& part : by_degree_) part.clear();
    return *this;
  }
  for (auto& part : by_degree_) {
    for (auto& [k, v] : part) v *= c;
  }
  return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return max_degree_ == other.max_degree_ && by_degree_ == other.by_degree_;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long bound = std::min(a.max_degree(), b.max_degree());
  TruncatedSeries out(bound);
  for (long da = 0; da <= bound; ++da) {
    const auto& pa = a.homogeneous(da);
    if (pa.empty()) continue;
    for (long db = 0; da + db <= bound; ++db) {
      const auto& pb = b.homogeneous(db);
      for (const auto& [ka, ca] : pa) {
        for (const auto& [kb, cb] : pb) {
          Rational c = ca * cb;
          out.add_term(add(ka, kb), c);
        }
      }
    }
  }
  return out;
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::constant(1, s.max_degree());
  TruncatedSeries base = s;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncatedSeries plethysm_substitute(const TruncatedSeries& s, long r, long max_degree) {
  if (r < 1) throw DomainError("plethysm exponent must be positive");
  TruncatedSeries out(max_degree);
  for (const auto& [k, c] : s.terms()) out.add_term(scale(k, r), c);
  return out;
}

namespace {

// Degree-graded Taylor recursions shared by both gradings. parts[n] is the
// degree-n component; products of components are taken with the ring's
// own multiplication.
std::vector<TruncatedSeries> graded_exp(const std::vector<TruncatedSeries>& parts,
                                        const TruncatedSeries& one) {
  if (!parts.empty() && !parts[0].is_zero()) {
    throw DomainError("exp requires a zero constant term");
  }
  std::vector<TruncatedSeries> e{one};
  for (std::size_t n = 1; n < parts.size(); ++n) {
    TruncatedSeries acc(one.max_degree());
    for (std::size_t k = 1; k <= n; ++k) {
      if (parts[k].is_zero() || e[n - k].is_zero()) continue;
      acc += (parts[k] * e[n - k]) * Rational(static_cast<long>(k));
    }
    acc *= Rational(1, static_cast<long>(n));
    e.push_back(std::move(acc));
  }
  return e;
}

std::vector<TruncatedSeries> graded_log(const std::vector<TruncatedSeries>& parts,
                                        const TruncatedSeries& one) {
  if (parts.empty() || !(parts[0] == one)) {
    throw DomainError("log requires constant term 1");
  }
  std::vector<TruncatedSeries> l{TruncatedSeries(one.max_degree())};
  for (std::size_t n = 1; n < parts.size(); ++n) {
    TruncatedSeries acc = parts[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) {
      if (l[k].is_zero() || parts[n - k].is_zero()) continue;
      acc -= (l[k] * parts[n - k]) * Rational(static_cast<long>(k));
    }
    acc *= Rational(1, static_cast<long>(n));
    l.push_back(std::move(acc));
  }
  return l;
}

std::vector<TruncatedSeries> split_by_degree(const TruncatedSeries& s) {
  std::vector<TruncatedSeries> parts;
  for (long n = 0; n <= s.max_degree(); ++n) parts.push_back(s.homogeneous_part(n));
  return parts;
}

TruncatedSeries join(const std::vector<TruncatedSeries>& parts, long max_degree) {
  TruncatedSeries out(max_degree);
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace

TruncatedSeries exp(const TruncatedSeries& s) {
  const TruncatedSeries one = TruncatedSeries::constant(1, s.max_degree());
  return join(graded_exp(split_by_degree(s), one), s.max_degree());
}

TruncatedSeries log(const TruncatedSeries& s) {
  auto parts = split_by_degree(s);
  const TruncatedSeries one = TruncatedSeries::constant(1, s.max_degree());
  if (!(parts[0] == one)) throw DomainError("log requires constant term 1");
  return join(graded_log(parts, one), s.max_degree());
}

ZSeries multiply(const ZSeries& a, const ZSeries& b) {
  const std::size_t len = std::min(a.size(), b.size());
  if (len == 0) return {};
  const long bound = a[0].max_degree();
  ZSeries out(len, TruncatedSeries(bound));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

ZSeries exp(const ZSeries& s) {
  if (s.empty()) return {};
  return graded_exp(s, TruncatedSeries::constant(1, s[0].max_degree()));
}

ZSeries log(const ZSeries& s) {
  if (s.empty()) throw DomainError("log requires constant term 1");
  return graded_log(s, TruncatedSeries::constant(1, s[0].max_degree()));
}

std::string to_string(const TruncatedSeries& s, const Alphabet& alphabet) {
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    out += to_string(k, alphabet);
    out += " → ";
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace fibre

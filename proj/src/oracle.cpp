#include "fibre/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <map>
#include <thread>

#include "fibre/coproduct.hpp"
#include "fibre/lowering.hpp"
#include "fibre/ordinary.hpp"
#include "fibre/trees.hpp"
#include "fibre/weighted.hpp"

namespace fibre {

namespace {

enum Quantity {
  kWRecursion,
  kWFibre,
  kLabelled,
  kMass,
  kFFibre,
  kTreeCount,
  kWeightedSeries,
  kOrdinarySeries,
  kHDual,
  kCDbar,
  kCTransport,
  kDPaths,
  kCoproduct,
  kQuantityCount
};

const char* const kQuantityNames[kQuantityCount] = {
    "W formula = W recursion",
    "W formula = fibre sum 1/sigma(t)",
    "L = n! W",
    "J formula = jmath mass",
    "F recursion = fibre size",
    "sum F_k = tree count",
    "weighted series = W",
    "ordinary series = F",
    "H_m Euler product = cycle index",
    "C recursion = iterated dbar",
    "C recursion = transport arrays",
    "D definition = D recursion",
    "coproduct forms agree",
};

struct CaseResult {
  Quantity quantity;
  std::string subject;
  std::string expected;
  std::string got;
  bool ok;
};

// Per-thread memo state; nothing is shared between workers.
struct Context {
  TreeEnumerator trees;
  WeightedRecursion weighted;
  OrdinaryRecursion ordinary;

  explicit Context(OracleCaps caps) : trees(caps) {}
};

using Job = std::function<void(Context&, std::vector<CaseResult>&)>;

template <class T>
void compare(std::vector<CaseResult>& out, Quantity q, const std::string& subject,
             const T& expected, const T& got) {
  out.push_back({q, subject, to_string(expected), to_string(got), expected == got});
}

std::string describe(const std::map<MultiIndex, Rational>& p, const Alphabet& alphabet) {
  std::string s;
  for (const auto& [k, c] : p) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*[" + to_string(k, alphabet) + "]";
  }
  return s.empty() ? "0" : s;
}

void profile_checks(const MultiIndex& k, const Alphabet& alphabet, const OracleOptions& options,
                    Context& ctx, std::vector<CaseResult>& out) {
  const std::string subject = to_string(k, alphabet);
  const long n = degree(k);
  const WeightedCounts counts = weighted_counts(k);

  compare(out, kWRecursion, subject, counts.weighted, ctx.weighted(k));

  const auto fibre = ctx.trees.fibre(k);
  Rational brute = 0;
  Rational mass = 0;
  const BigInt sigma_k = symmetry_factor(k);
  for (const auto& t : fibre) {
    const BigInt aut = automorphism_order(t);
    brute += Rational(BigInt(1), aut);
    mass += Rational(sigma_k) / Rational(aut);
  }
  compare(out, kWFibre, subject, counts.weighted, brute);

  const Rational labelled_from_w = counts.weighted * factorial(static_cast<unsigned>(n));
  compare(out, kLabelled, subject, labelled_from_w, Rational(counts.labelled));
  compare(out, kMass, subject, Rational(counts.mass), mass);
  compare(out, kFFibre, subject, BigInt(static_cast<long>(fibre.size())), ctx.ordinary(k));

  for (long r = 0; r <= options.lowering_max_order; ++r) {
    const std::string sub_r = subject + " r=" + std::to_string(r);
    const auto cs = c_coefficients(k, r);
    std::map<MultiIndex, Rational> from_c, from_dbar, from_transport;
    for (const auto& [l, c] : cs) from_c[*shift_target(k, l)] += Rational(c);
    const Polynomial lowered = dbar_power(Polynomial::monomial(k), r);
    for (const auto& [m, c] : lowered.terms()) from_dbar[m] = c;
    out.push_back({kCDbar, sub_r, describe(from_c, alphabet), describe(from_dbar, alphabet),
                   from_c == from_dbar});

    bool transport_ok = true, d_ok = true;
    for (const auto& [l, c] : cs) {
      const MultiIndex target = *shift_target(k, l);
      const UPolynomial expected = UPolynomial::monomial(r, Rational(c) / Rational(factorial(static_cast<unsigned>(r))));
      if (!(transition_gf(k, target) == expected)) transport_ok = false;
      if (d_coefficient(k, l) != d_coefficient_recursive(k, l)) d_ok = false;
    }
    const auto ds = d_coefficients(k, r);
    for (const auto& [l, d] : ds) {
      if (d != c_coefficient(k, l) * factorial(*shift_target(k, l))) d_ok = false;
    }
    if (ds.size() != cs.size()) d_ok = false;
    out.push_back({kCTransport, sub_r, "consistent", transport_ok ? "consistent" : "mismatch",
                   transport_ok});
    out.push_back({kDPaths, sub_r, "consistent", d_ok ? "consistent" : "mismatch", d_ok});
  }

  if (n <= options.coproduct_max_degree) {
    for (auto mode : {DecompositionMode::Multiset, DecompositionMode::Ordered}) {
      const auto raw = coproduct(k, CoproductForm::RawDbar, mode);
      const auto refined_c = coproduct(k, CoproductForm::RefinedC, mode);
      const auto refined_d = coproduct(k, CoproductForm::RefinedD, mode);
      const bool ok = raw == refined_c && raw == refined_d;
      out.push_back({kCoproduct,
                     subject + (mode == DecompositionMode::Ordered ? " ordered" : " multiset"),
                     std::to_string(raw.size()) + " terms",
                     ok ? std::to_string(raw.size()) + " terms" : "forms differ", ok});
    }
  }
}

void global_checks(const std::vector<int>& decos, const std::vector<MultiIndex>& profiles,
                   const Alphabet& alphabet, const OracleOptions& options, Context& ctx,
                   std::vector<CaseResult>& out) {
  const long max_n = options.max_n;
  std::map<long, BigInt> f_by_degree;
  for (const auto& k : profiles) f_by_degree[degree(k)] += ctx.ordinary(k);
  for (long n = 1; n <= max_n; ++n) {
    compare(out, kTreeCount, "n=" + std::to_string(n), f_by_degree[n],
            BigInt(static_cast<long>(ctx.trees.trees(n, decos).size())));
  }

  const TruncatedSeries w = weighted_series(decos, max_n);
  const TruncatedSeries f = ordinary_series(decos, max_n);
  std::map<MultiIndex, Rational> w_expected, f_expected, w_got, f_got;
  for (const auto& k : profiles) {
    w_expected[k] = weighted_counts(k).weighted;
    f_expected[k] = Rational(ctx.ordinary(k));
  }
  for (const auto& [k, c] : w.terms()) w_got[k] = c;
  for (const auto& [k, c] : f.terms()) f_got[k] = c;
  for (const auto& k : profiles) {
    compare(out, kWeightedSeries, to_string(k, alphabet), w_expected[k], w.coefficient(k));
    compare(out, kOrdinarySeries, to_string(k, alphabet), f_expected[k], f.coefficient(k));
  }
  // No stray monomials outside the profiles.
  out.push_back({kWeightedSeries, "support", std::to_string(w_expected.size()),
                 std::to_string(w_got.size()), w_got.size() == w_expected.size()});
  out.push_back({kOrdinarySeries, "support", std::to_string(f_expected.size()),
                 std::to_string(f_got.size()), f_got.size() == f_expected.size()});

  const long top_m = std::min(options.h_max_m, max_n);
  const ZSeries product = h_series_euler_product(decos, top_m, max_n, ctx.ordinary);
  for (long m = 0; m <= top_m; ++m) {
    const TruncatedSeries cycle = h_series_cycle_index(f, m, max_n);
    const auto& euler = product[static_cast<std::size_t>(m)];
    const bool ok = euler == cycle;
    out.push_back({kHDual, "m=" + std::to_string(m),
                   std::to_string(euler.term_count()) + " terms",
                   ok ? std::to_string(cycle.term_count()) + " terms" : "differs", ok});
  }
}

}  // namespace

OracleReport run_oracle(const Alphabet& alphabet, const OracleOptions& options) {
  if (options.max_n < 1) throw DomainError("max-n must be >= 1");
  if (options.max_n > options.max_n_cap) {
    throw CapExceeded("oracle max-n " + std::to_string(options.max_n) + " exceeds cap " +
                      std::to_string(options.max_n_cap));
  }
  if (alphabet.size() > options.max_decorations) {
    throw CapExceeded("oracle alphabet size " + std::to_string(alphabet.size()) +
                      " exceeds cap " + std::to_string(options.max_decorations));
  }
  const OracleCaps caps{options.max_n_cap, options.max_decorations};
  const std::vector<int> decos = alphabet.ids();
  const std::vector<MultiIndex> profiles = tree_profiles(decos, options.max_n);

  std::vector<Job> jobs;
  jobs.push_back([&](Context& ctx, std::vector<CaseResult>& out) {
    global_checks(decos, profiles, alphabet, options, ctx, out);
  });
  for (const auto& k : profiles) {
    jobs.push_back([&, k](Context& ctx, std::vector<CaseResult>& out) {
      profile_checks(k, alphabet, options, ctx, out);
    });
  }

  std::vector<std::vector<CaseResult>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    Context ctx(caps);
    for (std::size_t i = next++; i < jobs.size(); i = next++) jobs[i](ctx, results[i]);
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  OracleReport report;
  report.rows.resize(kQuantityCount);
  for (int q = 0; q < kQuantityCount; ++q) report.rows[static_cast<std::size_t>(q)].quantity = kQuantityNames[q];
  // Canonical order: per quantity, jobs in submission order.
  for (int q = 0; q < kQuantityCount; ++q) {
    for (const auto& job_results : results) {
      for (const auto& r : job_results) {
        if (r.quantity != q) continue;
        auto& row = report.rows[static_cast<std::size_t>(q)];
        ++row.cases;
        if (!r.ok) {
          ++row.failures;
          if (!report.first_failure) {
            report.first_failure = OracleFailure{kQuantityNames[q], r.subject, r.expected, r.got};
          }
        }
      }
    }
  }
  return report;
}

void print_oracle_report(std::ostream& out, const OracleReport& report, const Alphabet& alphabet,
                         long max_n) {
  std::string names;
  for (const auto& name : alphabet.names()) names += (names.empty() ? "" : ",") + name;
  out << "oracle max-n " << max_n << " alphabet " << names << "\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(36) << row.quantity << std::right << std::setw(8) << row.cases
        << " cases  " << (row.failures == 0 ? "pass" : "FAIL (" + std::to_string(row.failures) + ")")
        << "\n";
  }
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    out << "first failure: " << f.quantity << " at " << f.subject << ": expected " << f.expected
        << ", got " << f.got << "\n";
    out << "result: fail\n";
  } else {
    out << "result: pass\n";
  }
}

}  // namespace fibre

#ifndef FIBRE_ORACLE_HPP
#define FIBRE_ORACLE_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibre/multiindex.hpp"

namespace fibre {

struct OracleOptions {
  long max_n = 5;
  unsigned threads = 1;
  long max_n_cap = 8;
  std::size_t max_decorations = 2;
  // Coproduct and lowering checks grow fastest; they stop at these bounds.
  long coproduct_max_degree = 5;
  long lowering_max_order = 3;
  long h_max_m = 4;
};

struct OracleFailure {
  std::string quantity;
  std::string subject;
  std::string expected;
  std::string got;
};

struct OracleRow {
  std::string quantity;
  long cases = 0;
  long failures = 0;
};

struct OracleReport {
  std::vector<OracleRow> rows;
  std::optional<OracleFailure> first_failure;

  bool passed() const { return !first_failure.has_value(); }
};

/// Runs every brute-force versus formula, recursion and series comparison
/// over the weight -1 profiles of degree <= max_n. Independent profiles may
/// be checked on several threads; the report does not depend on the thread
/// count. Throws CapExceeded beyond the configured caps.
OracleReport run_oracle(const Alphabet& alphabet, const OracleOptions& options);

/// Fixed-layout table followed by "result: pass" or the first failure.
void print_oracle_report(std::ostream& out, const OracleReport& report, const Alphabet& alphabet,
                         long max_n);

}  // namespace fibre

#endif  // FIBRE_ORACLE_HPP

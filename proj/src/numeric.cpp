#include "fibre/numeric.hpp"

#include <deque>
#include <mutex>

namespace fibre {

const BigInt& factorial(unsigned n) {
  if (n > kFactorialLimit) {
    throw CapExceeded("factorial argument " + std::to_string(n) + " exceeds " +
                      std::to_string(kFactorialLimit));
  }
  static std::mutex mutex;
  static std::deque<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    BigInt next = table.back() * static_cast<unsigned long>(table.size());
    table.push_back(std::move(next));
  }
  return table[n];
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw ParseError("malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace fibre

#ifndef FIBRE_NUMERIC_HPP
#define FIBRE_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fibre {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation's mathematical precondition does not hold
/// (wrong weight, negative component, broken fertility sum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed text input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a configured hard cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n! from a process-wide table that grows on demand. Thread safe; the
/// returned reference stays valid for the lifetime of the process.
/// Arguments above kFactorialLimit throw CapExceeded.
inline constexpr unsigned kFactorialLimit = 4096;
const BigInt& factorial(unsigned n);

BigInt binomial(unsigned long n, unsigned long k);

/// Exact integer power of a big integer.
BigInt pow(const BigInt& base, unsigned long exponent);

/// "p/q" fully reduced, integers without "/1".
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p" or "p/q"; throws ParseError.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace fibre

#endif  // FIBRE_NUMERIC_HPP

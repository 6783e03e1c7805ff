#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cdgraph {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// Factorization

/// Limits for prime_factors. Trial division by every prime below
/// `trial_bound` runs first; leftover composites go to Brent's rho with a
/// seeded generator. Composites larger than `max_composite_bits` or that
/// survive `rho_attempts` rho runs raise CapExceeded.
struct FactorOptions {
  std::uint32_t trial_bound = 1'000'000;
  unsigned max_composite_bits = 128;
  unsigned rho_attempts = 8;
  std::uint64_t rho_iterations = 1ull << 22;
  std::uint64_t seed = 0x5eed'cd9a'7a11'0001ull;
  // Miller-Rabin rounds passed to mpz_probab_prime_p.
  int primality_rounds = 30;
};

bool is_probable_prime(const BigInt& n, int rounds = 30);

/// Distinct prime divisors of n (n >= 1), ascending.
std::vector<BigInt> prime_factors(const BigInt& n, const FactorOptions& opts = {});

/// Divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// ---------------------------------------------------------------------------
// Cyclotomic values

/// Phi_d(q) by dividing q^d - 1 by Phi_e(q) for every proper divisor e of d.
BigInt cyclotomic_eval(std::uint64_t d, const BigInt& q);

// ---------------------------------------------------------------------------
// Zsigmondy primes

enum class ZsigmondyException {
  None,
  /// n = 2 and a = 2^k - 1.
  SquareOfMersenneBase,
  /// n = 6 and a = 2.
  SixthPowerOfTwo,
};

std::string to_string(ZsigmondyException e);

struct ZsigmondyResult {
  BigInt base;
  std::uint64_t exponent = 0;
  /// Primes p with p | a^n - 1 and p not dividing a^k - 1 for 1 <= k < n.
  std::vector<BigInt> primitive_primes;
  ZsigmondyException exception = ZsigmondyException::None;
};

/// Exception family that (a, n) falls into, if any.
ZsigmondyException zsigmondy_exception(const BigInt& a, std::uint64_t n);

/// Requires a >= 2 and n >= 2. Primitive primes are found by factoring
/// Phi_n(a), which every prime of multiplicative order n divides, and keeping
/// those whose order of a is exactly n.
ZsigmondyResult zsigmondy(const BigInt& a, std::uint64_t n, const FactorOptions& opts = {});

// ---------------------------------------------------------------------------
// Quotient (q^m - 1) / (q^(m/s) - 1)

struct QuotientQuery {
  BigInt q;
  std::uint64_t m = 0;
  std::uint64_t s = 0;
};

/// Throws InvalidArgument unless q >= 2, m >= 2, s prime and s | m.
void validate(const QuotientQuery& qq);

/// Exact division (q^m - 1) / (q^(m/s) - 1).
BigInt quotient_value(const QuotientQuery& qq);

/// Product of Phi_d(q) over d | m with d not dividing m/s.
BigInt quotient_value_cyclotomic(const QuotientQuery& qq);

std::vector<BigInt> quotient_prime_divisors(const QuotientQuery& qq, const FactorOptions& opts = {});

enum class QuotientCheckOutcome {
  /// The quotient has at least two distinct prime divisors.
  Holds,
  /// Preconditions met but the quotient has fewer than two prime divisors.
  Fails,
  /// The query lies outside the hypotheses; no verdict is given.
  PreconditionViolated,
};

std::string to_string(QuotientCheckOutcome o);

struct QuotientCheckResult {
  QuotientCheckOutcome outcome = QuotientCheckOutcome::PreconditionViolated;
  /// Which hypothesis failed, when outcome is PreconditionViolated.
  std::string violation;
};

/// p when n = p^k for a prime p and k >= 1. Requires n >= 2.
std::optional<BigInt> prime_power_base(const BigInt& n, int rounds = 30);

/// Decided by a prime-power test on the quotient, so it never factors and
/// never runs out of budget.
/// Hypotheses: m has at least two distinct prime divisors, m is odd or q is
/// even, and not (q = 2 and 6 | m).
QuotientCheckResult check_quotient_primes(const QuotientQuery& qq, const FactorOptions& opts = {});

}  // namespace cdgraph

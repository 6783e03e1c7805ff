#include "cdgraph/number_theory.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cdgraph/errors.hpp"

namespace cdgraph {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> sieve(std::uint32_t bound) {
  std::vector<bool> composite(bound, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < bound; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kSieveLimit);
  return primes;
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BigInt pow_big(const BigInt& base, std::uint64_t e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

BigInt random_below(std::mt19937_64& rng, const BigInt& n) {
  // Enough random words to cover n, reduced mod n. The slight bias is
  // irrelevant for rho starting points.
  BigInt r = 0;
  for (std::size_t bits = 0; bits < mpz_sizeinbase(n.get_mpz_t(), 2) + 64; bits += 64) {
    r <<= 64;
    r += big(rng());
  }
  return r % n;
}

// Brent's cycle-finding variant of Pollard's rho. Returns a nontrivial
// divisor of the odd composite n, or 0 when this attempt gave up.
BigInt brent_rho(const BigInt& n, std::mt19937_64& rng, std::uint64_t max_iterations) {
  const BigInt c = random_below(rng, n - 1) + 1;
  BigInt y = random_below(rng, n);
  BigInt x, ys, g = 1, q = 1, diff;
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t r = 1;
  std::uint64_t iterations = 0;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t span = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < span; ++i) {
        step(y);
        diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = gcd(q, n);
      k += span;
      iterations += span;
    }
    r *= 2;
    if (iterations > max_iterations) return 0;
  }
  if (g == n) {
    // The batched product overshot; replay one step at a time.
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

}  // namespace

bool is_probable_prime(const BigInt& n, int rounds) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), rounds) > 0;
}

std::vector<BigInt> prime_factors(const BigInt& n_in, const FactorOptions& opts) {
  if (n_in < 1) throw InvalidArgument("prime_factors needs a positive integer");
  BigInt n = n_in;
  std::vector<BigInt> out;

  const std::vector<std::uint32_t> local =
      opts.trial_bound > kSieveLimit ? sieve(opts.trial_bound) : std::vector<std::uint32_t>{};
  const std::vector<std::uint32_t>& primes = local.empty() ? small_primes() : local;
  for (std::uint32_t p : primes) {
    if (p >= opts.trial_bound) break;
    if (BigInt(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<BigInt> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    BigInt m = pending.back();
    pending.pop_back();
    if (is_probable_prime(m, opts.primality_rounds)) {
      out.push_back(m);
      continue;
    }
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > opts.max_composite_bits) {
      throw CapExceeded("composite cofactor of " + std::to_string(mpz_sizeinbase(m.get_mpz_t(), 2)) +
                        " bits exceeds the " + std::to_string(opts.max_composite_bits) +
                        "-bit factorization budget");
    }
    if (mpz_even_p(m.get_mpz_t())) {
      pending.push_back(2);
      pending.push_back(m / 2);
      continue;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      BigInt root = sqrt(m);
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    BigInt d = 0;
    for (unsigned attempt = 0; attempt < opts.rho_attempts && d == 0; ++attempt) {
      d = brent_rho(m, rng, opts.rho_iterations);
    }
    if (d == 0) {
      throw CapExceeded("rho failed to split a " + std::to_string(mpz_sizeinbase(m.get_mpz_t(), 2)) +
                        "-bit composite within budget");
    }
    pending.push_back(d);
    pending.push_back(m / d);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

BigInt cyclotomic_eval(std::uint64_t d, const BigInt& q) {
  if (d < 1) throw InvalidArgument("cyclotomic index must be >= 1");
  if (q < 2) throw InvalidArgument("cyclotomic argument must be >= 2");
  std::map<std::uint64_t, BigInt> phi;
  for (std::uint64_t e : divisors(d)) {
    BigInt value = pow_big(q, e) - 1;
    for (const auto& [f, phi_f] : phi) {
      if (e % f == 0) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), phi_f.get_mpz_t());
    }
    phi.emplace(e, std::move(value));
  }
  return phi.at(d);
}

std::string to_string(ZsigmondyException e) {
  switch (e) {
    case ZsigmondyException::None: return "none";
    case ZsigmondyException::SquareOfMersenneBase: return "n=2,a=2^k-1";
    case ZsigmondyException::SixthPowerOfTwo: return "n=6,a=2";
  }
  return "?";
}

ZsigmondyException zsigmondy_exception(const BigInt& a, std::uint64_t n) {
  if (n == 2) {
    const BigInt next = a + 1;
    if (mpz_popcount(next.get_mpz_t()) == 1) return ZsigmondyException::SquareOfMersenneBase;
  }
  if (n == 6 && a == 2) return ZsigmondyException::SixthPowerOfTwo;
  return ZsigmondyException::None;
}

ZsigmondyResult zsigmondy(const BigInt& a, std::uint64_t n, const FactorOptions& opts) {
  if (a < 2) throw InvalidArgument("Zsigmondy base must be >= 2");
  if (n < 2) throw InvalidArgument("Zsigmondy exponent must be >= 2");

  ZsigmondyResult result;
  result.base = a;
  result.exponent = n;
  result.exception = zsigmondy_exception(a, n);

  std::vector<std::uint64_t> n_primes;
  for (const BigInt& r : prime_factors(big(n), opts)) n_primes.push_back(r.get_ui());

  for (const BigInt& p : prime_factors(cyclotomic_eval(n, a), opts)) {
    bool primitive = true;
    BigInt residue;
    for (std::uint64_t r : n_primes) {
      mpz_powm_ui(residue.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n / r), p.get_mpz_t());
      if (residue == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) result.primitive_primes.push_back(p);
  }
  return result;
}

void validate(const QuotientQuery& qq) {
  if (qq.q < 2) throw InvalidArgument("quotient base q must be >= 2");
  if (qq.m < 2) throw InvalidArgument("quotient exponent m must be >= 2");
  if (qq.s < 2 || !is_probable_prime(big(qq.s))) {
    throw InvalidArgument("s = " + std::to_string(qq.s) + " is not prime");
  }
  if (qq.m % qq.s != 0) {
    throw InvalidArgument("s = " + std::to_string(qq.s) + " does not divide m = " + std::to_string(qq.m));
  }
}

BigInt quotient_value(const QuotientQuery& qq) {
  validate(qq);
  BigInt num = pow_big(qq.q, qq.m) - 1;
  const BigInt den = pow_big(qq.q, qq.m / qq.s) - 1;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

BigInt quotient_value_cyclotomic(const QuotientQuery& qq) {
  validate(qq);
  const std::uint64_t reduced = qq.m / qq.s;
  BigInt product = 1;
  for (std::uint64_t d : divisors(qq.m)) {
    if (reduced % d != 0) product *= cyclotomic_eval(d, qq.q);
  }
  return product;
}

std::vector<BigInt> quotient_prime_divisors(const QuotientQuery& qq, const FactorOptions& opts) {
  // Factoring the cyclotomic pieces separately keeps composites small.
  validate(qq);
  const std::uint64_t reduced = qq.m / qq.s;
  std::vector<BigInt> primes;
  for (std::uint64_t d : divisors(qq.m)) {
    if (reduced % d != 0) {
      for (BigInt& p : prime_factors(cyclotomic_eval(d, qq.q), opts)) primes.push_back(std::move(p));
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::optional<BigInt> prime_power_base(const BigInt& n, int rounds) {
  if (n < 2) throw InvalidArgument("prime_power_base needs n >= 2");
  BigInt r = n, root;
  while (mpz_perfect_power_p(r.get_mpz_t())) {
    for (unsigned long k = 2;; ++k) {
      if (mpz_root(root.get_mpz_t(), r.get_mpz_t(), k)) break;
    }
    r = root;
  }
  if (is_probable_prime(r, rounds)) return r;
  return std::nullopt;
}

std::string to_string(QuotientCheckOutcome o) {
  switch (o) {
    case QuotientCheckOutcome::Holds: return "holds";
    case QuotientCheckOutcome::Fails: return "fails";
    case QuotientCheckOutcome::PreconditionViolated: return "precondition_violated";
  }
  return "?";
}

QuotientCheckResult check_quotient_primes(const QuotientQuery& qq, const FactorOptions& opts) {
  validate(qq);
  QuotientCheckResult result;
  const std::uint64_t m = qq.m;
  if (prime_factors(big(m), opts).size() < 2) {
    result.violation = "m = " + std::to_string(m) + " has fewer than two distinct prime divisors";
    return result;
  }
  if (m % 2 == 0 && qq.q % 2 != 0) {
    result.violation = "m is even and q is odd";
    return result;
  }
  if (qq.q == 2 && m % 6 == 0) {
    result.violation = "q = 2 and 6 divides m";
    return result;
  }
  // At least two distinct primes exactly when the quotient is not a prime
  // power, which needs no factoring.
  const BigInt value = quotient_value(qq);
  result.outcome = value > 1 && !prime_power_base(value, opts.primality_rounds) ? QuotientCheckOutcome::Holds
                                                                              : QuotientCheckOutcome::Fails;
  return result;
}

}  // namespace cdgraph

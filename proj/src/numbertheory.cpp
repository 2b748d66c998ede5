#include "bigeo/numbertheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "bigeo/errors.hpp"

namespace bigeo {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit multiplication overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit addition overflow");
  return out;
}

std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw OverflowError("64-bit negation overflow");
  return a < 0 ? -a : a;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

// Distinct prime factors of m > 0, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t m) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= m / p; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

struct SquarefreeSplit {
  std::int64_t core;  // signed squarefree part
  std::int64_t root;  // value = core * root^2
};

SquarefreeSplit squarefree_split(std::int64_t value) {
  std::int64_t sign = value < 0 ? -1 : 1;
  std::int64_t m = checked_abs(value);
  std::int64_t core = 1;
  std::int64_t root = 1;
  for (std::int64_t p = 2; p <= m / p; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= m;
  return {sign * core, root};
}

bool same_sign(std::int64_t a, std::int64_t b, std::int64_t c) {
  return (a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0);
}

// -u*v must be a nonzero square modulo every odd prime dividing m.
std::optional<std::int64_t> residue_obstruction(std::int64_t m, std::int64_t u, std::int64_t v) {
  for (std::int64_t p : prime_factors(checked_abs(m))) {
    if (p == 2) continue;
    const std::int64_t target = ((-(u % p) * (v % p)) % p + p) % p;
    if (target == 0 || pow_mod(target, (p - 1) / 2, p) != 1) return p;
  }
  return std::nullopt;
}

bool has_primitive_zero_mod8(std::int64_t a, std::int64_t b, std::int64_t c) {
  for (std::int64_t x = 0; x < 8; ++x) {
    for (std::int64_t y = 0; y < 8; ++y) {
      for (std::int64_t z = 0; z < 8; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        const std::int64_t value = (a % 8) * x * x + (b % 8) * y * y + (c % 8) * z * z;
        if (value % 8 == 0) return true;
      }
    }
  }
  return false;
}

std::optional<Triple> trivial_zero(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0) return Triple{1, 0, 0};
  if (b == 0) return Triple{0, 1, 0};
  if (c == 0) return Triple{0, 0, 1};
  return std::nullopt;
}

}  // namespace

std::int64_t evaluate_form(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& t) {
  std::int64_t sum = checked_mul(a, checked_mul(t.x, t.x));
  sum = checked_add(sum, checked_mul(b, checked_mul(t.y, t.y)));
  return checked_add(sum, checked_mul(c, checked_mul(t.z, t.z)));
}

std::int64_t integer_sqrt(std::int64_t m) {
  if (m < 0) throw PreconditionError("square root of negative integer " + std::to_string(m));
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m)));
  while (root > 0 && static_cast<__int128>(root) * root > m) --root;
  while (static_cast<__int128>(root + 1) * (root + 1) <= m) ++root;
  return root;
}

bool is_perfect_square(std::int64_t m) {
  if (m < 0) throw PreconditionError("is_perfect_square: negative input " + std::to_string(m));
  const std::int64_t root = integer_sqrt(m);
  return root * root == m;
}

bool is_prime_power(std::int64_t m) {
  if (m <= 0) throw PreconditionError("is_prime_power: input must be positive");
  return prime_factors(m).size() == 1;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

ReducedForm reduce_ternary_form(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 || b == 0 || c == 0) {
    throw PreconditionError("reduce_ternary_form: coefficients must be nonzero");
  }
  ReducedForm f{a, b, c, 1, 1, 1};
  const std::int64_t g = gcd(gcd(a, b), c);
  f.a /= g;
  f.b /= g;
  f.c /= g;

  const auto sa = squarefree_split(f.a);
  const auto sb = squarefree_split(f.b);
  const auto sc = squarefree_split(f.c);
  f.a = sa.core;
  f.b = sb.core;
  f.c = sc.core;
  f.scale_x = checked_mul(sb.root, sc.root);
  f.scale_y = checked_mul(sa.root, sc.root);
  f.scale_z = checked_mul(sa.root, sb.root);

  // A common factor g of two coefficients forces g to divide the third
  // variable; move it across: (a, b, c) -> (a/g, b/g, c*g) with z = g*Z.
  for (bool changed = true; changed;) {
    changed = false;
    if (const std::int64_t h = gcd(f.a, f.b); h > 1) {
      f.a /= h;
      f.b /= h;
      f.c = checked_mul(f.c, h);
      f.scale_z = checked_mul(f.scale_z, h);
      changed = true;
    }
    if (const std::int64_t h = gcd(f.a, f.c); h > 1) {
      f.a /= h;
      f.c /= h;
      f.b = checked_mul(f.b, h);
      f.scale_y = checked_mul(f.scale_y, h);
      changed = true;
    }
    if (const std::int64_t h = gcd(f.b, f.c); h > 1) {
      f.b /= h;
      f.c /= h;
      f.a = checked_mul(f.a, h);
      f.scale_x = checked_mul(f.scale_x, h);
      changed = true;
    }
  }
  return f;
}

LocalVerdict local_conditions(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0 && c == 0) throw PreconditionError("local_conditions: zero form");
  if (trivial_zero(a, b, c)) return {true, {}};
  const ReducedForm f = reduce_ternary_form(a, b, c);
  if (same_sign(f.a, f.b, f.c)) {
    return {false, "definite form: all coefficients share a sign"};
  }
  const std::array<std::array<std::int64_t, 3>, 3> checks{{
      {f.a, f.b, f.c},
      {f.b, f.a, f.c},
      {f.c, f.a, f.b},
  }};
  for (const auto& [m, u, v] : checks) {
    if (auto p = residue_obstruction(m, u, v)) {
      return {false, "no nontrivial solution modulo " + std::to_string(*p)};
    }
  }
  if (!has_primitive_zero_mod8(f.a, f.b, f.c)) {
    return {false, "no primitive solution modulo 8"};
  }
  return {true, {}};
}

std::optional<Triple> holzer_search(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0 && c == 0) throw PreconditionError("holzer_search: zero form");
  if (auto t = trivial_zero(a, b, c)) return t;
  const ReducedForm f = reduce_ternary_form(a, b, c);

  std::array<std::int64_t, 3> coef{f.a, f.b, f.c};
  std::array<std::int64_t, 3> bound{
      integer_sqrt(checked_abs(checked_mul(f.b, f.c))),
      integer_sqrt(checked_abs(checked_mul(f.a, f.c))),
      integer_sqrt(checked_abs(checked_mul(f.a, f.b))),
  };

  // Iterate over the two variables whose box is smallest and solve for the
  // remaining one; the enumeration cost is |coef[solve]| * sqrt(|other two|).
  std::size_t solve = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (checked_abs(coef[i]) < checked_abs(coef[solve])) solve = i;
  }
  const std::size_t u = (solve + 1) % 3;
  const std::size_t v = (solve + 2) % 3;
  const std::size_t outer = std::min(u, v);
  const std::size_t inner = std::max(u, v);

  for (std::int64_t s = 0; s <= bound[outer]; ++s) {
    for (std::int64_t t = 0; t <= bound[inner]; ++t) {
      if (s == 0 && t == 0) continue;
      const std::int64_t rest =
          -checked_add(checked_mul(coef[outer], s * s), checked_mul(coef[inner], t * t));
      if (rest % coef[solve] != 0) continue;
      const std::int64_t square = rest / coef[solve];
      if (square < 0) continue;
      const std::int64_t w = integer_sqrt(square);
      if (w * w != square || w > bound[solve]) continue;

      std::array<std::int64_t, 3> reduced{};
      reduced[outer] = s;
      reduced[inner] = t;
      reduced[solve] = w;
      Triple witness{checked_mul(reduced[0], f.scale_x), checked_mul(reduced[1], f.scale_y),
                     checked_mul(reduced[2], f.scale_z)};
      if (evaluate_form(a, b, c, witness) != 0 || witness.is_zero()) {
        throw std::logic_error("holzer_search produced an invalid witness");
      }
      return witness;
    }
  }
  return std::nullopt;
}

LegendreResult legendre_solvable(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0 && c == 0) {
    throw PreconditionError("legendre_solvable: coefficients (0, 0, 0)");
  }
  if (auto t = trivial_zero(a, b, c)) return {true, t, {}};

  LocalVerdict local = local_conditions(a, b, c);
  if (!local.passes) return {false, std::nullopt, std::move(local.obstruction)};

  if (auto witness = holzer_search(a, b, c)) return {true, witness, {}};
  return {false, std::nullopt, "no nontrivial solution inside the Holzer box"};
}

namespace {

std::string term(std::int64_t coefficient, const char* var, bool leading) {
  std::string out;
  if (coefficient < 0) {
    out = leading ? "-" : " - ";
  } else if (!leading) {
    out = " + ";
  }
  const std::int64_t mag = coefficient < 0 ? -coefficient : coefficient;
  if (mag != 1) out += std::to_string(mag);
  return out + var + "²";
}

std::string triple_text(const Triple& t) {
  return "(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ", " + std::to_string(t.z) +
         ")";
}

}  // namespace

std::string BrcVerdict::summary() const {
  const std::string head = passes ? "passes: " : "fails: ";
  if (applicable_case == BrcCase::even) {
    return head + "k−λ = " + std::to_string(square_coefficient) +
           (passes ? " is a perfect square" : " not a perfect square");
  }
  std::string equation = "x² = " + term(square_coefficient, "y", true);
  if (lambda_coefficient != 0) equation += term(lambda_coefficient, "z", false);
  if (passes) return head + equation + " has solution " + triple_text(*witness);
  return head + equation + " has no nontrivial solution (" + obstruction.value_or("") + ")";
}

BrcVerdict brc_check(std::int64_t n, std::int64_t k, std::int64_t lambda) {
  if (n < 2 || k < 1 || lambda < 0) {
    throw PreconditionError("brc_check requires n >= 2, k >= 1, lambda >= 0");
  }
  if (k <= lambda) {
    throw PreconditionError("brc_check requires k > lambda (got k = " + std::to_string(k) +
                            ", lambda = " + std::to_string(lambda) + ")");
  }
  BrcVerdict verdict;
  verdict.square_coefficient = k - lambda;
  if (n % 2 == 0) {
    verdict.applicable_case = BrcCase::even;
    verdict.passes = is_perfect_square(k - lambda);
    if (!verdict.passes) {
      verdict.obstruction = "k−λ = " + std::to_string(k - lambda) + " not a perfect square";
    }
    return verdict;
  }
  verdict.applicable_case = BrcCase::odd;
  const std::int64_t sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
  verdict.lambda_coefficient = sign * lambda;
  // x^2 = (k - lambda) y^2 + sign*lambda z^2  <=>  x^2 - (k - lambda) y^2 - sign*lambda z^2 = 0
  LegendreResult result = legendre_solvable(1, -(k - lambda), -sign * lambda);
  verdict.passes = result.solvable;
  verdict.witness = result.witness;
  if (!result.solvable) verdict.obstruction = std::move(result.obstruction);
  return verdict;
}

bool ryser_applies(std::int64_t n, std::int64_t k, std::int64_t lambda) {
  return n % 2 != 0 && gcd(k, lambda) == 1;
}

}  // namespace bigeo

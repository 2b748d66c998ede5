#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace bigeo {

struct Triple {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  bool is_zero() const noexcept { return x == 0 && y == 0 && z == 0; }
  friend bool operator==(const Triple&, const Triple&) = default;
};

// a*x^2 + b*y^2 + c*z^2 with overflow detection.
std::int64_t evaluate_form(std::int64_t a, std::int64_t b, std::int64_t c, const Triple& t);

// Throws PreconditionError for m < 0. 0 and 1 are squares.
bool is_perfect_square(std::int64_t m);

// floor(sqrt(m)) for m >= 0.
std::int64_t integer_sqrt(std::int64_t m);

// True iff m = p^e with p prime and e >= 1. 1 is not a prime power.
// Throws PreconditionError for m <= 0.
bool is_prime_power(std::int64_t m);

std::int64_t gcd(std::int64_t a, std::int64_t b);

// A ternary diagonal form a x^2 + b y^2 + c z^2 brought to Legendre normal
// form: coefficients nonzero, squarefree and pairwise coprime. A nontrivial
// zero (X, Y, Z) of the reduced form maps to the nontrivial zero
// (scale_x * X, scale_y * Y, scale_z * Z) of the original form, and the
// original form has a nontrivial zero only if the reduced one does.
struct ReducedForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t scale_x = 1;
  std::int64_t scale_y = 1;
  std::int64_t scale_z = 1;
};

// Requires all three coefficients nonzero.
ReducedForm reduce_ternary_form(std::int64_t a, std::int64_t b, std::int64_t c);

struct LocalVerdict {
  bool passes = false;
  std::string obstruction;  // empty when passes
};

// Local solvability test for a x^2 + b y^2 + c z^2 = 0 on the reduced form:
// indefiniteness, quadratic-residue conditions at every odd prime dividing a
// coefficient, and a primitive solution modulo 8. Any zero coefficient
// passes trivially.
LocalVerdict local_conditions(std::int64_t a, std::int64_t b, std::int64_t c);

// Exhaustive search for a nontrivial zero of the reduced form inside the
// Holzer box |X| <= sqrt|bc|, |Y| <= sqrt|ac|, |Z| <= sqrt|ab|, mapped back to
// the original coefficients. Does not consult local_conditions.
std::optional<Triple> holzer_search(std::int64_t a, std::int64_t b, std::int64_t c);

struct LegendreResult {
  bool solvable = false;
  std::optional<Triple> witness;  // present iff solvable
  std::string obstruction;        // nonempty iff not solvable
};

// Decides whether a x^2 + b y^2 + c z^2 = 0 has an integer solution other
// than (0, 0, 0). Throws PreconditionError when a = b = c = 0.
LegendreResult legendre_solvable(std::int64_t a, std::int64_t b, std::int64_t c);

enum class BrcCase { even, odd };

struct BrcVerdict {
  BrcCase applicable_case = BrcCase::even;
  bool passes = false;
  // Odd case: x^2 = (k - lambda) y^2 + sign * lambda z^2 with
  // sign = (-1)^((n-1)/2).
  std::int64_t square_coefficient = 0;  // k - lambda
  std::int64_t lambda_coefficient = 0;  // sign * lambda (odd case only)
  std::optional<Triple> witness;
  std::optional<std::string> obstruction;

  std::string summary() const;
};

// Bruck-Ryser-Chowla condition for a symmetric (n, k, lambda)-design.
// Requires n >= 2, k >= 1, lambda >= 0 and k > lambda.
BrcVerdict brc_check(std::int64_t n, std::int64_t k, std::int64_t lambda);

// n odd and gcd(k, lambda) = 1.
bool ryser_applies(std::int64_t n, std::int64_t k, std::int64_t lambda);

}  // namespace bigeo

// Copyright 2026 The qfw Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFW_K0_HPP
#define QFW_K0_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qfw {

// Exact arithmetic in the fraction field of polynomials whose variables
// carry fractional exponents m / p^l for a fixed odd prime p (the base
// field extended by arbitrarily deep p-th root towers over each variable).
// Coefficients are exact rationals. Equality of fractions is decided by
// cross-multiplication, so representations need not be reduced.

/// Exponent m / p^depth, kept reduced: depth == 0 or p does not divide m.
struct FracExp {
  std::int64_t num = 0;
  int depth = 0;

  bool operator==(const FracExp&) const = default;
  bool is_zero() const { return num == 0; }
};

FracExp reduced_frac_exp(std::int64_t num, int depth, long p);
FracExp add(FracExp a, FracExp b, long p);
FracExp negate(FracExp a);
FracExp scale(FracExp a, std::int64_t k, long p);

/// Exact division of the exponent value by a prime. Deepens the tower when
/// divisor == p; otherwise requires divisor | num.
std::optional<FracExp> divide_by_prime(FracExp a, long divisor, long p);

/// Compares exponent values (-1, 0, 1).
int compare(FracExp a, FracExp b, long p);

std::string frac_exp_to_string(FracExp e, long p);

/// Product of variable powers v^(m/p^l); factors sorted by variable index,
/// exponents nonzero. Negative exponents are allowed.
struct Monomial {
  std::vector<std::pair<int, FracExp>> factors;

  bool operator==(const Monomial&) const = default;
  bool is_empty() const { return factors.empty(); }
};

Monomial monomial_mul(const Monomial& a, const Monomial& b, long p);
Monomial monomial_inverse(const Monomial& a);
Monomial monomial_pow(const Monomial& a, std::int64_t k, long p);
std::optional<Monomial> monomial_prime_root(const Monomial& a, long divisor,
                                            long p);

/// Total order: first variable (ascending index) whose exponents differ
/// decides, larger exponent first. The empty monomial is the constant 1.
int compare(const Monomial& a, const Monomial& b, long p);

struct Term {
  Monomial monomial;
  mpq_class coeff;
};

/// Terms in strictly descending monomial order with nonzero coefficients.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& leading() const { return terms.front(); }
};

Poly poly_zero();
Poly poly_constant(const mpq_class& c);
Poly poly_term(Monomial m, mpq_class c);
bool poly_equal(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b, long p);
Poly poly_negate(const Poly& a);
Poly poly_sub(const Poly& a, const Poly& b, long p);
Poly poly_mul(const Poly& a, const Poly& b, long p);
Poly poly_pow(const Poly& a, std::int64_t k, long p);
std::string poly_to_string(const Poly& a, long p);

/// Exact p-th root of a rational (p odd), if it exists.
std::optional<mpq_class> rational_prime_root(const mpq_class& c, long p);

/// Element of the fraction field: num/den with den nonzero. Normalized so
/// zero is 0/1 and the denominator's leading coefficient is 1.
class K0Elem {
 public:
  K0Elem() : den_(poly_constant(1)) {}

  static K0Elem zero(long p0 = 3);
  static K0Elem one(long p0 = 3);
  static K0Elem constant(const mpq_class& c, long p0 = 3);
  static K0Elem variable(int v, long p0 = 3);
  static K0Elem variable_pow(int v, FracExp e, long p0 = 3);
  /// Throws DivisionByZeroError when den is zero.
  static K0Elem fraction(Poly num, Poly den, long p0 = 3);

  long prime() const { return p0_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Cross-multiplication equality: num*other.den == other.num*den.
  bool equals(const K0Elem& other) const;

  K0Elem operator+(const K0Elem& other) const;
  K0Elem operator-(const K0Elem& other) const;
  K0Elem operator*(const K0Elem& other) const;
  K0Elem operator-() const;

  /// Throws DivisionByZeroError on zero.
  K0Elem invert() const;
  K0Elem operator/(const K0Elem& other) const;

  /// Integer powers; negative k inverts first.
  K0Elem pow(std::int64_t k) const;

  /// The (coeff, monomial) pair such that *this == coeff * monomial, when
  /// the normal form is a single monomial (decided exactly, without GCDs).
  std::optional<std::pair<mpq_class, Monomial>> as_monomial() const;

  std::string to_string() const;

 private:
  K0Elem(Poly num, Poly den, long p0);
  void normalize();
  void require_same_context(const K0Elem& other) const;

  long p0_ = 3;
  Poly num_;
  Poly den_;
};

/// Lemma-licensed classifier for p0-high elements of the base field: true
/// iff the normal form is a single monomial with coefficient +1 or -1.
/// Throws ZeroElementError on zero.
bool is_p0_high_form(const K0Elem& e);

/// Ground-truth root oracle: some x with x^p == e, within the field extended
/// by deeper p-th roots of variables when p is the tower prime. Monomial
/// parts take exponent division; polynomial parts take leading-coefficient
/// recursion. Gives up (returns nullopt) when the candidate root stops
/// shrinking, so it is exact-positive and desk-scale-negative.
/// Throws ZeroElementError on zero.
std::optional<K0Elem> p_root_oracle(const K0Elem& e, long p);

/// Seeded generator of small random elements over variables 0..num_vars-1.
K0Elem random_k0_elem(std::mt19937_64& rng, int num_vars, long p0,
                      int max_terms, int max_depth);

}  // namespace qfw

#endif  // QFW_K0_HPP

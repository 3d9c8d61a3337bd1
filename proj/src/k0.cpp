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

#include "qfw/k0.hpp"

#include <algorithm>

#include "qfw/error.hpp"

namespace qfw {

// Defined in graph.cpp; redeclared here to keep this module free of the
// graph header.
std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t bound);

namespace {

constexpr int kMaxExpDepth = 60;

__int128 int128_pow(long base, int exp) {
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

FracExp reduced_frac_exp(std::int64_t num, int depth, long p) {
  if (depth < 0) throw Error("frac exp: negative depth");
  if (depth > kMaxExpDepth) throw Error("frac exp: tower too deep");
  if (num == 0) return FracExp{0, 0};
  while (depth > 0 && num % p == 0) {
    num /= p;
    --depth;
  }
  return FracExp{num, depth};
}

FracExp add(FracExp a, FracExp b, long p) {
  const int depth = std::max(a.depth, b.depth);
  if (depth > kMaxExpDepth) throw Error("frac exp: tower too deep");
  const __int128 lifted = a.num * int128_pow(p, depth - a.depth) +
                          b.num * int128_pow(p, depth - b.depth);
  if (lifted > INT64_MAX || lifted < INT64_MIN)
    throw Error("frac exp: numerator overflow");
  return reduced_frac_exp(static_cast<std::int64_t>(lifted), depth, p);
}

FracExp negate(FracExp a) { return FracExp{-a.num, a.depth}; }

FracExp scale(FracExp a, std::int64_t k, long p) {
  const __int128 n = static_cast<__int128>(a.num) * k;
  if (n > INT64_MAX || n < INT64_MIN)
    throw Error("frac exp: numerator overflow");
  return reduced_frac_exp(static_cast<std::int64_t>(n), a.depth, p);
}

std::optional<FracExp> divide_by_prime(FracExp a, long divisor, long p) {
  if (divisor == p) return reduced_frac_exp(a.num, a.depth + 1, p);
  if (a.num % divisor == 0) return FracExp{a.num / divisor, a.depth};
  return std::nullopt;
}

int compare(FracExp a, FracExp b, long p) {
  const int depth = std::max(a.depth, b.depth);
  const __int128 va = a.num * int128_pow(p, depth - a.depth);
  const __int128 vb = b.num * int128_pow(p, depth - b.depth);
  if (va < vb) return -1;
  if (va > vb) return 1;
  return 0;
}

std::string frac_exp_to_string(FracExp e, long p) {
  if (e.depth == 0) return std::to_string(e.num);
  return std::to_string(e.num) + "/" + std::to_string(p) + "^" +
         std::to_string(e.depth);
}

Monomial monomial_mul(const Monomial& a, const Monomial& b, long p) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      out.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() ||
               a.factors[i].first > b.factors[j].first) {
      out.factors.push_back(b.factors[j++]);
    } else {
      const FracExp e = add(a.factors[i].second, b.factors[j].second, p);
      if (!e.is_zero()) out.factors.emplace_back(a.factors[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial monomial_inverse(const Monomial& a) {
  Monomial out = a;
  for (auto& [v, e] : out.factors) e = negate(e);
  return out;
}

Monomial monomial_pow(const Monomial& a, std::int64_t k, long p) {
  if (k == 0) return Monomial{};
  Monomial out;
  for (const auto& [v, e] : a.factors) {
    const FracExp s = scale(e, k, p);
    if (!s.is_zero()) out.factors.emplace_back(v, s);
  }
  return out;
}

std::optional<Monomial> monomial_prime_root(const Monomial& a, long divisor,
                                            long p) {
  Monomial out;
  for (const auto& [v, e] : a.factors) {
    auto r = divide_by_prime(e, divisor, p);
    if (!r) return std::nullopt;
    out.factors.emplace_back(v, *r);
  }
  return out;
}

int compare(const Monomial& a, const Monomial& b, long p) {
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    int var;
    FracExp ea{0, 0}, eb{0, 0};
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      var = a.factors[i].first;
      ea = a.factors[i].second;
    } else if (i == a.factors.size() ||
               a.factors[i].first > b.factors[j].first) {
      var = b.factors[j].first;
      eb = b.factors[j].second;
    } else {
      var = a.factors[i].first;
      ea = a.factors[i].second;
      eb = b.factors[j].second;
    }
    const int c = compare(ea, eb, p);
    if (c != 0) return c;
    if (i < a.factors.size() && a.factors[i].first == var) ++i;
    if (j < b.factors.size() && b.factors[j].first == var) ++j;
  }
  return 0;
}

Poly poly_zero() { return Poly{}; }

Poly poly_constant(const mpq_class& c) {
  Poly out;
  if (c != 0) out.terms.push_back(Term{Monomial{}, c});
  return out;
}

Poly poly_term(Monomial m, mpq_class c) {
  Poly out;
  if (c != 0) out.terms.push_back(Term{std::move(m), std::move(c)});
  return out;
}

bool poly_equal(const Poly& a, const Poly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].monomial == b.terms[i].monomial)) return false;
    if (a.terms[i].coeff != b.terms[i].coeff) return false;
  }
  return true;
}

Poly poly_add(const Poly& a, const Poly& b, long p) {
  Poly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    int c;
    if (i == a.terms.size()) {
      c = -1;
    } else if (j == b.terms.size()) {
      c = 1;
    } else {
      c = compare(a.terms[i].monomial, b.terms[j].monomial, p);
    }
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      mpq_class s = a.terms[i].coeff + b.terms[j].coeff;
      if (s != 0) out.terms.push_back(Term{a.terms[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly poly_negate(const Poly& a) {
  Poly out = a;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, long p) {
  return poly_add(a, poly_negate(b), p);
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  std::vector<Term> products;
  products.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      products.push_back(Term{monomial_mul(ta.monomial, tb.monomial, p),
                              ta.coeff * tb.coeff});
  std::sort(products.begin(), products.end(),
            [p](const Term& x, const Term& y) {
              return compare(x.monomial, y.monomial, p) > 0;
            });
  Poly out;
  for (auto& t : products) {
    if (!out.terms.empty() &&
        out.terms.back().monomial == t.monomial) {
      out.terms.back().coeff += t.coeff;
      if (out.terms.back().coeff == 0) out.terms.pop_back();
    } else if (t.coeff != 0) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Poly poly_pow(const Poly& a, std::int64_t k, long p) {
  if (k < 0) throw Error("poly_pow: negative exponent");
  Poly result = poly_constant(1);
  Poly base = a;
  while (k > 0) {
    if (k & 1) result = poly_mul(result, base, p);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base, p);
  }
  return result;
}

std::string poly_to_string(const Poly& a, long p) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& t : a.terms) {
    if (!first_term) out += " + ";
    first_term = false;
    out += t.coeff.get_str();
    for (const auto& [v, e] : t.monomial.factors) {
      out += "*v" + std::to_string(v);
      if (!(e.num == 1 && e.depth == 0))
        out += "^(" + frac_exp_to_string(e, p) + ")";
    }
  }
  return out;
}

std::optional<mpq_class> rational_prime_root(const mpq_class& c, long p) {
  if (c == 0) return mpq_class(0);
  if (c < 0) {
    auto r = rational_prime_root(mpq_class(-c), p);
    if (!r) return std::nullopt;
    return mpq_class(-*r);
  }
  mpz_class num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), c.get_num_mpz_t(),
               static_cast<unsigned long>(p)) == 0)
    return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), c.get_den_mpz_t(),
               static_cast<unsigned long>(p)) == 0)
    return std::nullopt;
  return mpq_class(num_root) / mpq_class(den_root);
}

K0Elem::K0Elem(Poly num, Poly den, long p0)
    : p0_(p0), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void K0Elem::normalize() {
  if (den_.is_zero())
    throw DivisionByZeroError("K0 element with zero denominator");
  if (num_.is_zero()) {
    den_ = poly_constant(1);
    return;
  }
  const mpq_class lead = den_.leading().coeff;
  if (lead == 1) return;
  for (auto& t : num_.terms) t.coeff /= lead;
  for (auto& t : den_.terms) t.coeff /= lead;
}

void K0Elem::require_same_context(const K0Elem& other) const {
  if (p0_ != other.p0_)
    throw Error("K0 elements from different prime contexts");
}

K0Elem K0Elem::zero(long p0) { return K0Elem(poly_zero(), poly_constant(1), p0); }

K0Elem K0Elem::one(long p0) {
  return K0Elem(poly_constant(1), poly_constant(1), p0);
}

K0Elem K0Elem::constant(const mpq_class& c, long p0) {
  return K0Elem(poly_constant(c), poly_constant(1), p0);
}

K0Elem K0Elem::variable(int v, long p0) {
  return variable_pow(v, FracExp{1, 0}, p0);
}

K0Elem K0Elem::variable_pow(int v, FracExp e, long p0) {
  if (v < 0) throw OutOfRangeError("variable index must be nonnegative");
  e = reduced_frac_exp(e.num, e.depth, p0);
  Monomial m;
  if (!e.is_zero()) m.factors.emplace_back(v, e);
  return K0Elem(poly_term(std::move(m), 1), poly_constant(1), p0);
}

K0Elem K0Elem::fraction(Poly num, Poly den, long p0) {
  return K0Elem(std::move(num), std::move(den), p0);
}

bool K0Elem::equals(const K0Elem& other) const {
  require_same_context(other);
  return poly_equal(poly_mul(num_, other.den_, p0_),
                    poly_mul(other.num_, den_, p0_));
}

K0Elem K0Elem::operator+(const K0Elem& other) const {
  require_same_context(other);
  return K0Elem(poly_add(poly_mul(num_, other.den_, p0_),
                         poly_mul(other.num_, den_, p0_), p0_),
                poly_mul(den_, other.den_, p0_), p0_);
}

K0Elem K0Elem::operator-(const K0Elem& other) const {
  return *this + (-other);
}

K0Elem K0Elem::operator*(const K0Elem& other) const {
  require_same_context(other);
  return K0Elem(poly_mul(num_, other.num_, p0_),
                poly_mul(den_, other.den_, p0_), p0_);
}

K0Elem K0Elem::operator-() const {
  return K0Elem(poly_negate(num_), den_, p0_);
}

K0Elem K0Elem::invert() const {
  if (is_zero()) throw DivisionByZeroError("inverting zero K0 element");
  return K0Elem(den_, num_, p0_);
}

K0Elem K0Elem::operator/(const K0Elem& other) const {
  return *this * other.invert();
}

K0Elem K0Elem::pow(std::int64_t k) const {
  if (k < 0) return invert().pow(-k);
  return K0Elem(poly_pow(num_, k, p0_), poly_pow(den_, k, p0_), p0_);
}

std::optional<std::pair<mpq_class, Monomial>> K0Elem::as_monomial() const {
  if (is_zero()) return std::nullopt;
  const Term& ln = num_.leading();
  const Term& ld = den_.leading();
  const mpq_class c = ln.coeff / ld.coeff;
  const Monomial m =
      monomial_mul(ln.monomial, monomial_inverse(ld.monomial), p0_);
  // *this == c*m  iff  num == c*m*den, checked term by term (multiplying a
  // canonical polynomial by one monomial keeps it canonical).
  if (num_.terms.size() != den_.terms.size()) return std::nullopt;
  for (std::size_t i = 0; i < den_.terms.size(); ++i) {
    if (num_.terms[i].coeff != c * den_.terms[i].coeff) return std::nullopt;
    if (!(num_.terms[i].monomial ==
          monomial_mul(m, den_.terms[i].monomial, p0_)))
      return std::nullopt;
  }
  return std::make_pair(c, m);
}

std::string K0Elem::to_string() const {
  const bool unit_den = den_.terms.size() == 1 &&
                        den_.leading().monomial.is_empty() &&
                        den_.leading().coeff == 1;
  if (unit_den) return poly_to_string(num_, p0_);
  return "(" + poly_to_string(num_, p0_) + ")/(" + poly_to_string(den_, p0_) +
         ")";
}

bool is_p0_high_form(const K0Elem& e) {
  if (e.is_zero())
    throw ZeroElementError("is_p0_high_form: zero element");
  auto m = e.as_monomial();
  return m.has_value() && (m->first == 1 || m->first == -1);
}

namespace {

// p-th root of a canonical polynomial by leading-term recursion: the root's
// terms are recovered greatest-first; each residual's leading term must be
// divisible by p * t1^(p-1). Gives up once candidate terms stop strictly
// decreasing or after a fixed number of terms.
std::optional<Poly> poly_prime_root(const Poly& f, long p, long p0) {
  if (f.is_zero()) return poly_zero();
  const Term& lead = f.leading();
  auto rc = rational_prime_root(lead.coeff, p);
  if (!rc) return std::nullopt;
  auto rm = monomial_prime_root(lead.monomial, p, p0);
  if (!rm) return std::nullopt;
  Poly root = poly_term(*rm, *rc);
  if (f.terms.size() == 1) return root;
  // Residual leading terms divide by p * t1^(p-1).
  const Monomial d_monomial = monomial_pow(*rm, p - 1, p0);
  mpq_class dc(p);
  for (long i = 0; i < p - 1; ++i) dc *= *rc;
  Monomial prev = *rm;
  for (int iter = 0; iter < 256; ++iter) {
    const Poly diff = poly_sub(f, poly_pow(root, p, p0), p0);
    if (diff.is_zero()) return root;
    const Term& lt = diff.leading();
    const Monomial tm =
        monomial_mul(lt.monomial, monomial_inverse(d_monomial), p0);
    if (compare(tm, prev, p0) >= 0) return std::nullopt;
    root.terms.push_back(Term{tm, lt.coeff / dc});
    prev = tm;
  }
  return std::nullopt;
}

}  // namespace

std::optional<K0Elem> p_root_oracle(const K0Elem& e, long p) {
  if (e.is_zero()) throw ZeroElementError("p_root_oracle: zero element");
  if (p < 3 || p % 2 == 0) throw Error("p_root_oracle: p must be an odd prime");
  // x = root(num * den^(p-1)) / den, since num/den = num*den^(p-1) / den^p.
  const Poly f =
      poly_mul(e.num(), poly_pow(e.den(), p - 1, e.prime()), e.prime());
  auto root = poly_prime_root(f, p, e.prime());
  if (!root) return std::nullopt;
  return K0Elem::fraction(std::move(*root), e.den(), e.prime());
}

K0Elem random_k0_elem(std::mt19937_64& rng, int num_vars, long p0,
                      int max_terms, int max_depth) {
  if (num_vars <= 0) throw InvalidSizeError("random_k0_elem: need variables");
  const auto rand_coeff = [&]() {
    const std::int64_t c =
        static_cast<std::int64_t>(random_below(rng, 8)) - 4;
    return c == 0 ? std::int64_t{1} : c;
  };
  const auto rand_poly = [&](int terms) {
    Poly out = poly_zero();
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (int v = 0; v < num_vars; ++v) {
        if (random_below(rng, 2) == 0) continue;
        const std::int64_t en =
            static_cast<std::int64_t>(random_below(rng, 6)) - 2;
        if (en == 0) continue;
        const int depth =
            static_cast<int>(random_below(rng, static_cast<std::uint64_t>(
                                                   max_depth + 1)));
        m.factors.emplace_back(v, reduced_frac_exp(en, depth, p0));
      }
      out = poly_add(out, poly_term(std::move(m), rand_coeff()), p0);
    }
    return out;
  };
  const Poly num = rand_poly(
      1 + static_cast<int>(random_below(rng, static_cast<std::uint64_t>(
                                                 max_terms))));
  Poly den = poly_zero();
  while (den.is_zero())
    den = rand_poly(1 + static_cast<int>(random_below(rng, 2)));
  return K0Elem::fraction(num, den, p0);
}

}  // namespace qfw

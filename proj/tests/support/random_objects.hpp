#pragma once

#include <array>
#include <random>
#include <vector>

#include "rtorsion/algebra/matrix.hpp"
#include "rtorsion/group/free_word.hpp"
#include "rtorsion/topology/mapping_torus.hpp"
#include "rtorsion/torsion/turaev.hpp"

namespace rtorsion::testing {

using algebra::Domain;
using algebra::ExactMatrix;
using algebra::LaurentPolynomial;
using group::FreeWord;
using group::Letter;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Unreduced letter sequence of the given length, reduced on construction.
inline FreeWord random_word(std::mt19937_64& rng, std::size_t generators, std::size_t length) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i)
    letters.push_back({static_cast<std::uint32_t>(uniform(rng, 0, static_cast<long>(generators) - 1)),
                       uniform(rng, 0, 1) ? 1 : -1});
  return FreeWord(letters);
}

inline mpq_class random_scalar(std::mt19937_64& rng, const Domain& d, bool nonzero = false) {
  for (;;) {
    mpq_class c(uniform(rng, -5, 5));
    if (d.kind() == Domain::Kind::rationals && uniform(rng, 0, 2) == 0) c /= uniform(rng, 1, 4);
    c = d.reduce(c);
    if (!nonzero || c != 0) return c;
  }
}

/// Laurent polynomial with exponents in [low, low + span].
inline LaurentPolynomial random_laurent(std::mt19937_64& rng, const Domain& d, long span, double density = 0.7) {
  const long low = uniform(rng, -2, 2);
  std::bernoulli_distribution keep(density);
  LaurentPolynomial::Terms terms;
  for (long e = low; e <= low + span; ++e)
    if (keep(rng)) terms[e] = random_scalar(rng, d);
  return LaurentPolynomial(d, terms);
}

inline ExactMatrix random_laurent_matrix(std::mt19937_64& rng, const Domain& d, std::size_t n, long span) {
  ExactMatrix m(d, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_laurent(rng, d, span);
  return m;
}

/// A random invertible matrix together with its inverse, built from
/// elementary row operations and a diagonal of units. With `laurent`, the
/// off-diagonal entries are monomials c·t^e and the diagonal may carry ±t^e.
struct InvertiblePair {
  ExactMatrix m;
  ExactMatrix inv;
};

inline InvertiblePair random_invertible(std::mt19937_64& rng, const Domain& d, std::size_t n, bool laurent,
                                        std::size_t steps = 6) {
  InvertiblePair out{ExactMatrix::identity(d, n), ExactMatrix::identity(d, n)};
  if (n == 0) return out;
  for (std::size_t s = 0; s < steps; ++s) {
    ExactMatrix e = ExactMatrix::identity(d, n), e_inv = ExactMatrix::identity(d, n);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (i != j) {
      long exp = laurent ? uniform(rng, -1, 1) : 0;
      mpq_class c = random_scalar(rng, d, true);
      e(i, j) = LaurentPolynomial::monomial(d, c, exp);
      e_inv(i, j) = -e(i, j);
    } else {
      mpq_class c = d.is_field() ? random_scalar(rng, d, true) : mpq_class(uniform(rng, 0, 1) ? 1 : -1);
      long exp = laurent ? uniform(rng, -1, 1) : 0;
      e(i, i) = LaurentPolynomial::monomial(d, c, exp);
      e_inv(i, i) = LaurentPolynomial::monomial(d, d.inverse(c), -exp);
    }
    out.m = e * out.m;
    out.inv = out.inv * e_inv;
  }
  return out;
}

/// Random automorphism of the free group of rank n as a composite of Nielsen
/// moves: x_i -> x_i x_j^±1, x_i -> x_j^±1 x_i, x_i -> x_i^-1 and swaps.
inline std::vector<FreeWord> random_automorphism(std::mt19937_64& rng, std::size_t n, std::size_t moves) {
  std::vector<FreeWord> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(FreeWord::generator(static_cast<std::uint32_t>(i)));
  for (std::size_t s = 0; s < moves; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const FreeWord xj = uniform(rng, 0, 1) ? images[j] : images[j].inverse();
    switch (uniform(rng, 0, 3)) {
      case 0: images[i] = images[i] * xj; break;
      case 1: images[i] = xj * images[i]; break;
      case 2: images[i] = images[i].inverse(); break;
      default: std::swap(images[i], images[j]); break;
    }
  }
  return images;
}

inline topology::MonodromyData random_monodromy(std::mt19937_64& rng, std::size_t n, std::size_t moves) {
  static const char* names[] = {"a", "b", "c", "d", "e"};
  std::vector<std::string> gens(names, names + n);
  return topology::MonodromyData(gens, random_automorphism(rng, n, moves));
}

/// Random acyclic complex with ∂_i of rank r[i] (i = 1, 2, 3): a split
/// complex whose nonzero blocks are diagonal with nonzero entries, with every
/// chain group put through a random change of basis.
inline torsion::BasedChainComplex random_acyclic_complex(std::mt19937_64& rng, const Domain& d,
                                                         std::array<std::size_t, 4> r, bool laurent) {
  // n_i = r_{i+1} + r_i with r_0 = r_4 = 0.
  std::array<std::size_t, 4> n{};
  for (std::size_t i = 0; i <= 3; ++i) n[i] = (i + 1 <= 3 ? r[i + 1] : 0) + (i >= 1 ? r[i] : 0);
  std::array<InvertiblePair, 4> p;
  for (std::size_t i = 0; i <= 3; ++i) p[i] = random_invertible(rng, d, n[i], laurent);
  std::array<ExactMatrix, 4> b;
  for (std::size_t i = 1; i <= 3; ++i) {
    ExactMatrix split(d, n[i - 1], n[i]);
    const std::size_t offset = i + 1 <= 3 ? r[i + 1] : 0;
    for (std::size_t k = 0; k < r[i]; ++k) {
      LaurentPolynomial entry(d);
      while (entry.is_zero())
        entry = laurent ? random_laurent(rng, d, 1) : LaurentPolynomial::constant(d, random_scalar(rng, d, true));
      split(k, offset + k) = entry;
    }
    b[i] = p[i - 1].inv * split * p[i].m;
  }
  return torsion::BasedChainComplex({n[3], n[2], n[1], n[0]}, b[3], b[2], b[1]);
}

}  // namespace rtorsion::testing

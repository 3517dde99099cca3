#pragma once

#include <vector>

#include "hypercover/cover.hpp"
#include "hypercover/hypergraph.hpp"

namespace hypercover {

// Exponent vector of a monomial in x_1..x_n; identified with CoverVector.
using Monomial = std::vector<int>;

// A monomial ideal given by its minimal generators: no generator divides
// another, stored in canonical order. The zero ideal is unrepresentable
// (generator lists must be non-empty); the unit ideal is the single
// generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, std::vector<Monomial> generators);

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  // Divisibility membership: some generator divides q.
  bool contains(const Monomial& q) const;

  // other is a subideal of this one.
  bool contains_ideal(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal ideal_from_generators(int n, std::vector<Monomial> gens);

// (x_i : i in vars)
MonomialIdeal variable_prime(int n, const VertexSet& vars);

// (i : q), generated by g / gcd(g, q) over the generators of i.
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& q);

// Generated by pairwise least common multiples.
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);

// Generated by all k-fold products of generators. k >= 1.
MonomialIdeal power(const MonomialIdeal& i, int k);

// One squarefree degree-m generator per edge.
MonomialIdeal edge_ideal(const Hypergraph& h);

// The Alexander dual of the edge ideal, computed two independent ways (the
// intersection of the edge primes, and the minimal-vertex-cover monomials)
// and asserted equal; a mismatch throws ConsistencyError.
MonomialIdeal alexander_dual(const Hypergraph& h);

// power(alexander_dual(h), k); generator exponents stay <= k.
MonomialIdeal dual_power_ordinary(const Hypergraph& h, int k);

// The symbolic k-th power of the dual, computed two independent ways (the
// minimal k-covers with entries <= k, and the intersection of k-th powers of
// the edge primes) and asserted equal. Guarded: (k+1)^n enumeration points.
MonomialIdeal dual_power_symbolic(const Hypergraph& h, int k,
                                  const SearchLimits& limits = {});

}  // namespace hypercover

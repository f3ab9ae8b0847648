#pragma once

// Angle classes m/n standing for 2cos(2 pi m / n), the doubling map that
// f(x) = x^2 - 2 induces on them, enumeration by degree, and orbit digraphs.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "niven/poly.hpp"

namespace niven {

/// Canonical representative of +-m mod n: gcd(m, n) = 1 and 0 <= m <= n/2.
struct AngleClass {
  std::uint64_t m = 0;
  std::uint64_t n = 1;

  /// Canonical class of the fraction m/n (any m, n > 0).
  static AngleClass of(std::uint64_t m, std::uint64_t n);

  double value() const;
  /// "m/n".
  std::string to_string() const;

  bool operator==(const AngleClass&) const = default;
  /// Orders by (n, m).
  std::strong_ordering operator<=>(const AngleClass& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    return m <=> o.m;
  }
};

/// Class of 2m/n. Named to avoid the keyword.
AngleClass double_angle(AngleClass a);

/// Classes b with double_angle(b) = a; one or two of them, sorted.
std::vector<AngleClass> preimages(AngleClass a);

struct AlgebraicValue {
  AngleClass angle;
  /// Psi_n for n > 2, x - 2 for n = 1, x + 2 for n = 2.
  IntPoly min_poly;
  int degree = 1;
};

AlgebraicValue min_poly_of(AngleClass a);

/// Denominators n with phi(n)/2 dividing D (n > 2), together with n = 1, 2.
std::vector<std::uint64_t> qualifying_denominators(unsigned D);

/// Every class m/n whose value has degree dividing D, sorted by (n, m).
std::vector<AlgebraicValue> classify_by_degree(unsigned D);

/// sum_{n <= 8 D^2} phi(n).
mpz_class preper_bound(unsigned D);

/// Functional graph of the doubling map on a closed vertex set.
struct OrbitDigraph {
  /// Sorted by (n, m).
  std::vector<AngleClass> vertices;
  std::map<AngleClass, AngleClass> edges;

  AngleClass successor(AngleClass a) const { return edges.at(a); }
  bool contains(AngleClass a) const { return edges.count(a) != 0; }
  /// Weakly connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<AngleClass>> components() const;
};

/// Throws DomainError when the set is not closed under doubling.
OrbitDigraph build_digraph(const std::vector<AngleClass>& vertices);
OrbitDigraph build_digraph(const std::vector<AlgebraicValue>& values);

/// Every cycle, rotated to start at its smallest vertex, in edge order.
/// Cycles are sorted by their first vertex.
std::vector<std::vector<AngleClass>> periodic_cycles(const OrbitDigraph& g);

enum class AngleConvention { TwoPi, RPi };

/// "2cos(2π·m/n)" or "2cos(π·r)" with r = 2m/n reduced.
std::string angle_text(AngleClass a, AngleConvention conv);

/// Closed form for the values of degree at most 2 ("0", "-√2", "(-1+√5)/2"); empty otherwise.
std::string radical_label(AngleClass a);

/// Graphviz text, one digraph per weakly connected component. Vertices of
/// degree <= 2 carry their radical form, others the pair (angle, Psi_n).
/// `extra` adds a line to a vertex label when present.
std::string to_dot(const OrbitDigraph& g, AngleConvention conv,
                   const std::map<AngleClass, std::string>& extra = {});

}  // namespace niven

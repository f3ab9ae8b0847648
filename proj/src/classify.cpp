#include "niven/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "niven/cyclotomic.hpp"
#include "niven/numtheory.hpp"

namespace niven {

AngleClass AngleClass::of(std::uint64_t m, std::uint64_t n) {
  if (n == 0) throw DomainError("angle class with zero denominator");
  m %= n;
  const std::uint64_t g = std::gcd(m, n);
  m /= g;
  n /= g;
  if (2 * m > n) m = n - m;
  return AngleClass{m, n};
}

double AngleClass::value() const {
  return 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
}

std::string AngleClass::to_string() const { return std::to_string(m) + "/" + std::to_string(n); }

AngleClass double_angle(AngleClass a) { return AngleClass::of(2 * a.m, a.n); }

std::vector<AngleClass> preimages(AngleClass a) {
  std::vector<AngleClass> out{AngleClass::of(a.m, 2 * a.n), AngleClass::of(a.m + a.n, 2 * a.n)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AlgebraicValue min_poly_of(AngleClass a) {
  AlgebraicValue v;
  v.angle = a;
  if (a.n <= 2) {
    v.min_poly = a.n == 1 ? IntPoly{-2, 1} : IntPoly{2, 1};
    v.degree = 1;
  } else {
    v.min_poly = psi(a.n).poly;
    v.degree = v.min_poly.degree();
  }
  return v;
}

std::vector<std::uint64_t> qualifying_denominators(unsigned D) {
  if (D == 0) throw DomainError("degree D must be positive");
  const std::uint64_t limit = 8ull * D * D;
  std::vector<char> keep(limit + 1, 0);
#pragma omp parallel for schedule(static)
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (n <= 2) {
      keep[n] = 1;
      continue;
    }
    const std::uint64_t half = euler_phi(n) / 2;
    keep[n] = D % half == 0;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (keep[n]) out.push_back(n);
  return out;
}

std::vector<AlgebraicValue> classify_by_degree(unsigned D) {
  std::vector<AlgebraicValue> out;
  for (auto n : qualifying_denominators(D)) {
    const AlgebraicValue base = min_poly_of(AngleClass{n == 2 ? 1u : 0u, n});
    for (std::uint64_t m = 0; 2 * m <= n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      AlgebraicValue v = base;
      v.angle = AngleClass{m, n};
      out.push_back(std::move(v));
    }
  }
  return out;
}

mpz_class preper_bound(unsigned D) {
  if (D == 0) throw DomainError("degree D must be positive");
  return totient_summatory(8ull * D * D);
}

std::vector<std::vector<AngleClass>> OrbitDigraph::components() const {
  std::map<AngleClass, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) {
    const std::size_t ra = find(index.at(a)), rb = find(index.at(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<AngleClass>> groups;
  for (std::size_t i = 0; i < vertices.size(); ++i) groups[find(i)].push_back(vertices[i]);
  std::vector<std::vector<AngleClass>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

OrbitDigraph build_digraph(const std::vector<AngleClass>& vertices) {
  OrbitDigraph g;
  g.vertices = vertices;
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  for (const auto& a : g.vertices) {
    const AngleClass b = double_angle(a);
    if (!std::binary_search(g.vertices.begin(), g.vertices.end(), b))
      throw DomainError("build_digraph: vertex set not closed under doubling (" + a.to_string() + " -> " +
                        b.to_string() + ")");
    g.edges.emplace(a, b);
  }
  return g;
}

OrbitDigraph build_digraph(const std::vector<AlgebraicValue>& values) {
  std::vector<AngleClass> v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(x.angle);
  return build_digraph(v);
}

std::vector<std::vector<AngleClass>> periodic_cycles(const OrbitDigraph& g) {
  // 0 unvisited, 1 on the current walk, 2 finished
  std::map<AngleClass, int> state;
  std::vector<std::vector<AngleClass>> cycles;
  for (const auto& start : g.vertices) {
    if (state[start] != 0) continue;
    std::vector<AngleClass> walk;
    AngleClass cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      cur = g.successor(cur);
    }
    if (state[cur] == 1) {
      auto it = std::find(walk.begin(), walk.end(), cur);
      std::vector<AngleClass> cyc(it, walk.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      cycles.push_back(std::move(cyc));
    }
    for (const auto& a : walk) state[a] = 2;
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return cycles;
}

std::string angle_text(AngleClass a, AngleConvention conv) {
  auto frac = [](std::uint64_t p, std::uint64_t q) {
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
  };
  if (conv == AngleConvention::TwoPi) return "2cos(2π·" + frac(a.m, a.n) + ")";
  std::uint64_t p = 2 * a.m, q = a.n;
  const std::uint64_t g = std::gcd(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return "2cos(π·" + frac(p, q) + ")";
}

std::string radical_label(AngleClass a) {
  static const std::map<AngleClass, std::string> table = {
      {{0, 1}, "2"},          {{1, 2}, "-2"},          {{1, 3}, "-1"},         {{1, 4}, "0"},
      {{1, 6}, "1"},          {{1, 5}, "(-1+√5)/2"},   {{2, 5}, "(-1-√5)/2"},  {{1, 10}, "(1+√5)/2"},
      {{3, 10}, "(1-√5)/2"},  {{1, 8}, "√2"},          {{3, 8}, "-√2"},        {{1, 12}, "√3"},
      {{5, 12}, "-√3"},
  };
  auto it = table.find(a);
  return it == table.end() ? std::string() : it->second;
}

std::string to_dot(const OrbitDigraph& g, AngleConvention conv, const std::map<AngleClass, std::string>& extra) {
  auto id = [](AngleClass a) { return "a_" + std::to_string(a.m) + "_" + std::to_string(a.n); };
  std::ostringstream out;
  const auto comps = g.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c) out << "\n";
    out << "digraph component_" << c + 1 << " {\n";
    for (const auto& a : comps[c]) {
      std::string label = radical_label(a);
      if (label.empty())
        label = angle_text(a, conv) + "\\nΨ_" + std::to_string(a.n);
      else
        label += "\\n" + angle_text(a, conv);
      if (auto it = extra.find(a); it != extra.end()) label += "\\n" + it->second;
      out << "  " << id(a) << " [label=\"" << label << "\"];\n";
    }
    for (const auto& a : comps[c]) out << "  " << id(a) << " -> " << id(g.successor(a)) << ";\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace niven

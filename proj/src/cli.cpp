#include "niven/cli.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "niven/classify.hpp"
#include "niven/dynatomic.hpp"
#include "niven/factor.hpp"
#include "niven/numfield.hpp"
#include "niven/numtheory.hpp"

namespace niven::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::uint64_t seed = 0x5eed;
  int max_degree = 128;
  unsigned max_n = 12;
  unsigned max_iterate = 20;
  unsigned factor_cap_bits = 128;
  bool json = false;
  std::string angles = "2pi";
  std::string dot;
  std::string c = "-2";
  std::string poly;
  std::uint64_t index = 0;
  unsigned degree = 0;
  unsigned verify_n = 6;

  FactorConfig factor() const {
    FactorConfig f;
    f.max_degree = max_degree;
    f.seed = seed;
    return f;
  }
  FactorOptions integer_factor() const {
    FactorOptions o;
    o.cap = mpz_class(1) << factor_cap_bits;
    o.seed = seed;
    return o;
  }
  DynamicsLimits limits() const { return DynamicsLimits{max_iterate, max_n}; }
  AngleConvention convention() const { return angles == "rpi" ? AngleConvention::RPi : AngleConvention::TwoPi; }
};

// ---- JSON encoding ---------------------------------------------------------------

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json rat_json(const mpq_class& q) { return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

json ratpoly_json(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_json(c));
  return a;
}

json angle_json(AngleClass a) { return json{{"m", a.m}, {"n", a.n}}; }

json digraph_json(const OrbitDigraph& g, json& results) {
  json edges = json::array();
  for (const auto& v : g.vertices) edges.push_back(json{{"from", angle_json(v)}, {"to", angle_json(g.successor(v))}});
  results["edges"] = std::move(edges);
  json cycles = json::array();
  for (const auto& cyc : periodic_cycles(g)) {
    json c = json::array();
    for (const auto& a : cyc) c.push_back(angle_json(a));
    cycles.push_back(std::move(c));
  }
  results["cycles"] = std::move(cycles);
  json comps = json::array();
  for (const auto& comp : g.components()) {
    json c = json::array();
    for (const auto& a : comp) c.push_back(angle_json(a));
    comps.push_back(std::move(c));
  }
  results["components"] = std::move(comps);
  return results;
}

void emit(std::ostream& out, const Config& cfg, const std::string& command, json inputs, json results,
          const std::string& text) {
  if (cfg.json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["results"] = std::move(results);
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

void write_dot(const std::string& path, const std::string& dot) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open DOT output file " + path);
  f << dot;
}

// ---- text helpers ------------------------------------------------------------------

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string table_text(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], display_width(r[i]));
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line = " ";
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += " " + r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 1, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

std::string vertex_name(AngleClass a, AngleConvention conv) {
  std::string r = radical_label(a);
  return r.empty() ? angle_text(a, conv) : r;
}

std::string digraph_text(const OrbitDigraph& g, AngleConvention conv) {
  std::ostringstream out;
  const auto comps = g.components();
  const auto cycles = periodic_cycles(g);
  out << "digraphs: " << comps.size() << "\n";
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t len = 0;
    for (const auto& cyc : cycles)
      if (std::binary_search(comps[c].begin(), comps[c].end(), cyc.front())) len = cyc.size();
    out << "  digraph " << c + 1 << " (" << comps[c].size() << " vertices, cycle length " << len << ")\n";
    for (const auto& a : comps[c])
      out << "    " << vertex_name(a, conv) << " -> " << vertex_name(g.successor(a), conv) << "\n";
  }
  return out.str();
}

std::string factor_product_text(const std::vector<std::pair<IntPoly, long>>& parts) {
  std::string s;
  for (const auto& [p, e] : parts) {
    s += "(" + to_pretty(p) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

mpq_class parse_c(const std::string& text) {
  static const std::regex re(R"(\s*[+-]?\d+(/\d+)?\s*)");
  if (!std::regex_match(text, re)) throw DomainError("--c expects an integer or fraction P/Q, got \"" + text + "\"");
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw DomainError("malformed rational \"" + text + "\"");
  if (q.get_den() == 0) throw DomainError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rat_text(const mpq_class& q) { return q.get_str(); }

// ---- subcommands ---------------------------------------------------------------------

void cmd_psi(const Config& cfg, std::ostream& out, PsiTable& table) {
  const PsiPoly p = table.psi(cfg.index);
  json results{{"index", p.index},
               {"squared_form", p.squared_form},
               {"degree", p.poly.degree()},
               {"polynomial", poly_json(p.poly)},
               {"pretty", to_pretty(p.poly)}};
  std::ostringstream text;
  text << "Psi_" << p.index << (p.squared_form ? "^2" : "") << " = " << to_pretty(p.poly) << "\n"
       << "coefficients: " << to_coeff_string(p.poly) << "\n";
  emit(out, cfg, "psi", json{{"n", cfg.index}}, std::move(results), text.str());
}

void cmd_cyclotomic(const Config& cfg, std::ostream& out, PsiTable& table) {
  const IntPoly p = table.cyclotomic(cfg.index);
  json results{{"index", cfg.index}, {"degree", p.degree()}, {"polynomial", poly_json(p)}, {"pretty", to_pretty(p)}};
  std::ostringstream text;
  text << "Phi_" << cfg.index << " = " << to_pretty(p) << "\n"
       << "coefficients: " << to_coeff_string(p) << "\n";
  emit(out, cfg, "cyclotomic", json{{"n", cfg.index}}, std::move(results), text.str());
}

void cmd_iterate(const Config& cfg, std::ostream& out) {
  const mpq_class c = parse_c(cfg.c);
  const RatPoly p = iterate_f(cfg.degree, c, cfg.limits());
  json results{{"degree", p.degree()}, {"polynomial", ratpoly_json(p)}, {"pretty", to_pretty(p)}};
  std::ostringstream text;
  text << "f^(" << cfg.degree << ")(x) = " << to_pretty(p) << "  [c = " << rat_text(c) << "]\n"
       << "coefficients: " << to_coeff_string(p) << "\n";
  emit(out, cfg, "iterate", json{{"k", cfg.degree}, {"c", rat_json(c)}}, std::move(results), text.str());
}

json psi_factor_json(const PsiFactorization& f, PsiTable& table, std::string& text) {
  json arr = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& fac : f.factors(table)) {
    const long e = f.exponents.at(fac.index);
    arr.push_back(json{{"index", fac.index},
                       {"exponent", e},
                       {"multiplicity", fac.multiplicity},
                       {"degree", fac.degree},
                       {"polynomial", poly_json(fac.poly)},
                       {"pretty", to_pretty(fac.poly)}});
    std::string name = "Psi_" + std::to_string(fac.index);
    if (e != 1) name += "^" + std::to_string(e);
    rows.push_back({name, "degree " + std::to_string(fac.degree), to_pretty(fac.poly)});
  }
  text += table_text(rows);
  return arr;
}

void cmd_dynatomic(const Config& cfg, std::ostream& out, PsiTable& table) {
  const mpq_class c = parse_c(cfg.c);
  const RatPoly p = dynatomic_poly(cfg.degree, c, cfg.limits());
  json results{{"degree", p.degree()}, {"polynomial", ratpoly_json(p)}, {"pretty", to_pretty(p)}};
  std::string text = "Phi_{" + std::to_string(cfg.degree) + ",f}(x) = " + to_pretty(p) + "  [c = " + rat_text(c) +
                     "]\ncoefficients: " + to_coeff_string(p) + "\n";
  if (c == -2) {
    text += "closed form:\n";
    results["psi_factors"] = psi_factor_json(vh_factorization(cfg.degree, cfg.integer_factor()), table, text);
  }
  emit(out, cfg, "dynatomic", json{{"n", cfg.degree}, {"c", rat_json(c)}}, std::move(results), text);
}

void cmd_factor_iterate(const Config& cfg, std::ostream& out, PsiTable& table) {
  if (cfg.degree > cfg.max_iterate)
    throw CapExceeded("iterate count " + std::to_string(cfg.degree) + " exceeds the cap " +
                      std::to_string(cfg.max_iterate));
  const PsiFactorization f = factor_iterate_minus_x(cfg.degree, cfg.integer_factor());
  std::vector<std::pair<IntPoly, long>> parts;
  for (const auto& fac : f.factors(table)) parts.emplace_back(fac.poly, fac.multiplicity);
  std::string text = "f^(" + std::to_string(cfg.degree) + ")(x) - x = " + factor_product_text(parts) + "\n";
  json results;
  results["factors"] = psi_factor_json(f, table, text);
  results["degree"] = f.degree(table);
  emit(out, cfg, "factor-iterate", json{{"D", cfg.degree}}, std::move(results), text);
}

void cmd_factor(const Config& cfg, std::ostream& out) {
  const IntPoly p = parse_int_poly(cfg.poly);
  const IntFactorization fac = factor_over_integers(p, cfg.factor());
  json factors = json::array();
  std::vector<std::pair<IntPoly, long>> parts;
  std::vector<std::vector<std::string>> rows;
  for (const auto& [f, m] : fac.factors) {
    factors.push_back(json{{"polynomial", poly_json(f)}, {"pretty", to_pretty(f)}, {"multiplicity", m}, {"degree", f.degree()}});
    parts.emplace_back(f, static_cast<long>(m));
    rows.push_back({"degree " + std::to_string(f.degree()), "multiplicity " + std::to_string(m), to_pretty(f)});
  }
  const mpz_class scalar = fac.content * fac.unit;
  std::string text = to_pretty(p) + " = ";
  if (scalar != 1 || parts.empty()) text += scalar.get_str() + (parts.empty() ? "" : " * ");
  if (!parts.empty()) text += factor_product_text(parts);
  text += "\n" + table_text(rows);
  json results{{"unit", fac.unit}, {"content", fac.content.get_str()}, {"factors", std::move(factors)},
               {"irreducible", fac.content == 1 && fac.factors.size() == 1 && fac.factors[0].second == 1}};
  emit(out, cfg, "factor", json{{"poly", poly_json(p)}, {"seed", cfg.seed}}, std::move(results), text);
}

json value_json(AngleClass a) {
  const std::uint64_t g = std::gcd(2 * a.m, a.n);
  json v = angle_json(a);
  v["r"] = json{{"num", std::to_string(2 * a.m / g)}, {"den", std::to_string(a.n / g)}};
  return v;
}

void cmd_classify(const Config& cfg, std::ostream& out) {
  const AngleConvention conv = cfg.convention();
  const auto values = classify_by_degree(cfg.degree);
  const OrbitDigraph g = build_digraph(values);
  const mpz_class bound = preper_bound(cfg.degree);

  json vals = json::array();
  std::vector<std::vector<std::string>> rows{{"value", "angle", "degree", "min_poly"}};
  for (const auto& v : values) {
    json j = value_json(v.angle);
    const std::string label = radical_label(v.angle);
    j["degree"] = v.degree;
    j["min_poly"] = poly_json(v.min_poly);
    j["label"] = label.empty() ? json(nullptr) : json(label);
    vals.push_back(std::move(j));
    rows.push_back({label.empty() ? "-" : label, angle_text(v.angle, conv), std::to_string(v.degree), to_pretty(v.min_poly)});
  }
  json results{{"count", values.size()}, {"bound", bound.get_str()}, {"values", std::move(vals)}};
  digraph_json(g, results);

  std::string text = "values of 2cos(rπ) with degree dividing " + std::to_string(cfg.degree) + ": " +
                     std::to_string(values.size()) + " (bound " + bound.get_str() + ")\n" + table_text(rows) +
                     digraph_text(g, conv);
  if (!cfg.dot.empty()) write_dot(cfg.dot, to_dot(g, conv));
  emit(out, cfg, "classify", json{{"D", cfg.degree}, {"angles", cfg.angles}}, std::move(results), text);
}

void cmd_membership(const Config& cfg, std::ostream& out) {
  const AngleConvention conv = cfg.convention();
  const NumberField K(parse_int_poly(cfg.poly), cfg.factor());
  RootOptions opts;
  opts.factor = cfg.factor();
  const CosineValues cv = cosine_values_in_field(K, opts);

  json vals = json::array();
  std::map<AngleClass, std::string> extra;
  std::vector<std::vector<std::string>> rows{{"value", "angle", "element", "min_poly"}};
  for (const auto& [a, e] : cv.values) {
    const IntPoly mp = elem_minpoly(e);
    json j = value_json(a);
    json coeffs = json::array();
    for (const auto& c : e.coeffs()) coeffs.push_back(rat_json(c));
    j["element_coeffs"] = std::move(coeffs);
    j["element"] = to_pretty(e.value(), 'y');
    j["min_poly"] = poly_json(mp);
    vals.push_back(std::move(j));
    const std::string label = radical_label(a);
    const std::string elem = e.is_zero() ? "0" : to_pretty(e.value(), 'y');
    extra[a] = elem;
    rows.push_back({label.empty() ? "-" : label, angle_text(a, conv), elem, to_pretty(mp)});
  }
  const mpz_class bound = preper_bound(static_cast<unsigned>(K.degree()));
  json results{{"field", poly_json(K.modulus())},
               {"degree", K.degree()},
               {"count", cv.values.size()},
               {"bound", bound.get_str()},
               {"values", std::move(vals)}};
  digraph_json(cv.digraph, results);

  std::string text = "K = Q[y]/(" + to_pretty(K.modulus(), 'y') + "), degree " + std::to_string(K.degree()) + ": " +
                     std::to_string(cv.values.size()) + " values of 2cos(rπ) (bound " + bound.get_str() + ")\n" +
                     table_text(rows) + digraph_text(cv.digraph, conv);
  if (!cfg.dot.empty()) write_dot(cfg.dot, to_dot(cv.digraph, conv, extra));
  emit(out, cfg, "membership", json{{"poly", poly_json(K.modulus())}, {"angles", cfg.angles}}, std::move(results),
       text);
}

void cmd_bound(const Config& cfg, std::ostream& out) {
  const mpz_class b = preper_bound(cfg.degree);
  json results{{"limit", 8ull * cfg.degree * cfg.degree}, {"bound", b.get_str()}};
  emit(out, cfg, "bound", json{{"D", cfg.degree}}, std::move(results), b.get_str() + "\n");
}

int cmd_verify(const Config& cfg, std::ostream& out, PsiTable& table) {
  if (cfg.verify_n > cfg.max_n)
    throw CapExceeded("verify index " + std::to_string(cfg.verify_n) + " exceeds the cap " + std::to_string(cfg.max_n));
  const auto checks = verify(cfg.verify_n, table);
  bool ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    ok = ok && c.pass;
    arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    text << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) text << "  [" << c.detail << "]";
    text << "\n";
  }
  text << (ok ? "all identities hold\n" : "some identities failed\n");
  emit(out, cfg, "verify", json{{"max_n", cfg.verify_n}}, json{{"passed", ok}, {"checks", std::move(arr)}},
       text.str());
  return ok ? kOk : kVerifyFailed;
}

// ---- verification suite ----------------------------------------------------------------

IntPoly unpalindromize_check(const IntPoly& psi_poly) {
  // z^k Psi(z + 1/z) = sum_j c_j (z^2 + 1)^j z^(k - j)
  const int k = psi_poly.degree();
  const IntPoly z2p1{1, 0, 1};
  IntPoly acc, power{1};
  for (int j = 0; j <= k; ++j) {
    acc += (power * psi_poly[j]).shifted(k - j);
    power *= z2p1;
  }
  return acc;
}

bool fermat_divisors_ok(std::string& detail) {
  for (unsigned k = 2; k <= 4; ++k) {
    const mpz_class v = (mpz_class(1) << (1u << k)) + 1;
    const mpz_class mod = mpz_class(1) << (k + 2);
    for (const auto& [q, e] : factorize(v).factors)
      if (q % mod != 1) {
        detail = "k = " + std::to_string(k) + ", q = " + q.get_str();
        return false;
      }
  }
  return true;
}

bool primitive_divisors_ok(std::string& detail) {
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (unsigned k : {1u, 2u}) {
      unsigned long pk = 1, pk1 = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      pk1 = pk / p;
      for (int sign : {-1, 1}) {
        const mpz_class v = (mpz_class(1) << pk) + sign;
        const mpz_class w = (mpz_class(1) << pk1) + sign;
        for (const auto& [q, e] : factorize(v).factors) {
          if (w != 0 && w % q == 0) continue;
          if (q % (2 * pk) != 1) {
            detail = "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ", q = " + q.get_str();
            return false;
          }
        }
      }
    }
  return true;
}

bool three_adic_ok(std::string& detail) {
  auto val = [](unsigned long p, unsigned k, int sign) {
    unsigned long pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    return p_adic_valuation(3, (mpz_class(1) << pk) + sign);
  };
  for (unsigned k = 1; k <= 3; ++k)
    if (val(3, k, 1) != k + 1) {
      detail = "p = 3, k = " + std::to_string(k);
      return false;
    }
  for (unsigned long p : {5ul, 7ul, 11ul})
    for (unsigned k = 1; k <= 2; ++k)
      if (val(p, k, 1) != 1 || val(p, k, -1) != 0) {
        detail = "p = " + std::to_string(p) + ", k = " + std::to_string(k);
        return false;
      }
  for (unsigned k = 1; k <= 3; ++k)
    if (val(3, k, -1) != 0) {
      detail = "minus variant, p = 3, k = " + std::to_string(k);
      return false;
    }
  return true;
}

}  // namespace

std::vector<VerifyCheck> verify(unsigned max_n, PsiTable& table) {
  if (max_n == 0) throw DomainError("verify needs max_n >= 1");
  std::vector<VerifyCheck> out;
  const IntPoly x = IntPoly::x();

  {
    VerifyCheck c{"dynatomic Moebius product equals the Psi closed form, n = 1.." + std::to_string(max_n), true, ""};
    for (unsigned n = 1; n <= max_n && c.pass; ++n)
      if (!(dynatomic_poly_int(n, -2) == vh_factorization(n).materialize(table))) {
        c.pass = false;
        c.detail = "n = " + std::to_string(n);
      }
    out.push_back(std::move(c));
  }
  {
    VerifyCheck c{"telescoping: product of Phi_{d,f} over d | n and Psi form equal f^(n) - x, n = 1.." +
                      std::to_string(max_n),
                  true, ""};
    for (unsigned n = 1; n <= max_n && c.pass; ++n) {
      const IntPoly target = iterate_f_int(n, -2) - x;
      IntPoly prod{1};
      for (auto d : divisors(static_cast<std::uint64_t>(n))) prod *= dynatomic_poly_int(static_cast<unsigned>(d), -2);
      if (!(prod == target) || !(factor_iterate_minus_x(n).materialize(table) == target)) {
        c.pass = false;
        c.detail = "n = " + std::to_string(n);
      }
    }
    out.push_back(std::move(c));
  }
  {
    const std::uint64_t top = std::max<std::uint64_t>(12, 10ull * max_n);
    VerifyCheck c{"z^(phi(n)/2) Psi_n(z + 1/z) = Phi_n(z), n = 3.." + std::to_string(top), true, ""};
    for (std::uint64_t n = 3; n <= top && c.pass; ++n) {
      const IntPoly p = table.psi(n).poly;
      if (p.degree() != static_cast<int>(euler_phi(n) / 2) || !(unpalindromize_check(p) == table.cyclotomic(n))) {
        c.pass = false;
        c.detail = "n = " + std::to_string(n);
      }
    }
    out.push_back(std::move(c));
  }
  {
    const unsigned top = std::min(max_n, 6u);
    VerifyCheck c{"cycle lengths divide degrees and f^(D) fixes periodic points, D = 1.." + std::to_string(top), true,
                  ""};
    for (unsigned D = 1; D <= top && c.pass; ++D) {
      const OrbitDigraph g = build_digraph(classify_by_degree(D));
      for (const auto& cyc : periodic_cycles(g)) {
        for (const auto& a : cyc) {
          const std::uint64_t deg = a.n <= 2 ? 1 : euler_phi(a.n) / 2;
          AngleClass b = a;
          for (unsigned i = 0; i < D; ++i) b = double_angle(b);
          if (deg % cyc.size() != 0 || !(b == a)) {
            c.pass = false;
            c.detail = "D = " + std::to_string(D) + ", vertex " + a.to_string();
          }
        }
      }
    }
    out.push_back(std::move(c));
  }
  {
    const unsigned top = std::min(max_n, 8u);
    VerifyCheck c{"irreducible factors of Phi_{n,f} have degree divisible by n, n = 1.." + std::to_string(top), true,
                  ""};
    FactorConfig fc;
    fc.max_degree = 1 << 9;
    for (unsigned n = 1; n <= top && c.pass; ++n)
      for (const auto& [f, m] : factor_over_integers(dynatomic_poly_int(n, -2), fc).factors)
        if (f.degree() % n != 0 || m != 1) {
          c.pass = false;
          c.detail = "n = " + std::to_string(n) + ", factor degree " + std::to_string(f.degree());
        }
    out.push_back(std::move(c));
  }
  {
    VerifyCheck c{"prime divisors of 2^(2^k) + 1 are 1 mod 2^(k+2), k = 2..4", true, ""};
    c.pass = fermat_divisors_ok(c.detail);
    out.push_back(std::move(c));
  }
  {
    VerifyCheck c{"new prime divisors of 2^(p^k) -+ 1 are 1 mod 2p^k, p = 3,5,7, k = 1,2", true, ""};
    c.pass = primitive_divisors_ok(c.detail);
    out.push_back(std::move(c));
  }
  {
    VerifyCheck c{"3-adic valuations of 2^(p^k) -+ 1", true, ""};
    c.pass = three_adic_ok(c.detail);
    out.push_back(std::move(c));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, PsiTable& table) {
  Config cfg;
  CLI::App app{"Cosines at rational multiples of pi as preperiodic points of x^2 - 2", "niven"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Seed for randomised factoring steps");
  app.add_option("--max-degree", cfg.max_degree, "Degree cap for polynomial factoring")->check(CLI::Range(1, 1 << 16));
  app.add_option("--max-n", cfg.max_n, "Cap on dynatomic and verification indices")->check(CLI::Range(1, 64));
  app.add_option("--max-iterate", cfg.max_iterate, "Cap on the iterate count k (degree 2^k)")->check(CLI::Range(0, 30));
  app.add_option("--factor-cap", cfg.factor_cap_bits, "Bit size above which integers are not factored")
      ->check(CLI::Range(8, 4096));
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  CLI::App* psi_cmd = sub("psi", "Minimal polynomial Psi_N of 2cos(2 pi / N)");
  psi_cmd->add_option("N", cfg.index)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
  CLI::App* cyc_cmd = sub("cyclotomic", "Cyclotomic polynomial Phi_N");
  cyc_cmd->add_option("N", cfg.index)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 20));
  CLI::App* it_cmd = sub("iterate", "k-th iterate of x^2 + c");
  it_cmd->add_option("K", cfg.degree)->required()->check(CLI::Range(0, 64));
  it_cmd->add_option("--c", cfg.c, "Parameter c as P/Q (default -2)");
  CLI::App* dyn_cmd = sub("dynatomic", "Dynatomic polynomial Phi_{N,f} of x^2 + c");
  dyn_cmd->add_option("N", cfg.degree)->required()->check(CLI::Range(1, 64));
  dyn_cmd->add_option("--c", cfg.c, "Parameter c as P/Q (default -2)");
  CLI::App* fi_cmd = sub("factor-iterate", "Factorisation of f^(D)(x) - x into Psi polynomials");
  fi_cmd->add_option("D", cfg.degree)->required()->check(CLI::Range(1, 64));
  CLI::App* fac_cmd = sub("factor", "Factor an integer polynomial");
  fac_cmd->add_option("--poly", cfg.poly, "Ascending coefficients, e.g. \"2,-1,-4,0,1\"")->required();
  CLI::App* cls_cmd = sub("classify", "All values 2cos(r pi) of degree dividing D");
  cls_cmd->add_option("D", cfg.degree)->required()->check(CLI::Range(1, 64));
  cls_cmd->add_option("--dot", cfg.dot, "Write the orbit digraphs to this DOT file");
  cls_cmd->add_option("--angles", cfg.angles, "Angle display: 2pi (2 pi m/n) or rpi (r pi)")
      ->check(CLI::IsMember({"2pi", "rpi"}));
  CLI::App* mem_cmd = sub("membership", "Values 2cos(r pi) lying in Q[y]/(g(y))");
  mem_cmd->add_option("--poly", cfg.poly, "Ascending coefficients of g")->required();
  mem_cmd->add_option("--dot", cfg.dot, "Write the orbit digraphs to this DOT file");
  mem_cmd->add_option("--angles", cfg.angles, "Angle display: 2pi or rpi")->check(CLI::IsMember({"2pi", "rpi"}));
  CLI::App* bound_cmd = sub("bound", "Upper bound on the number of such values in degree D");
  bound_cmd->add_option("D", cfg.degree)->required()->check(CLI::Range(1, 1 << 15));
  CLI::App* ver_cmd = sub("verify", "Run the cross-module identity checks");
  ver_cmd->add_option("MAX_N", cfg.verify_n, "Largest index checked (default 6)")->check(CLI::Range(1, 64));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*psi_cmd) cmd_psi(cfg, out, table);
    else if (*cyc_cmd) cmd_cyclotomic(cfg, out, table);
    else if (*it_cmd) cmd_iterate(cfg, out);
    else if (*dyn_cmd) cmd_dynatomic(cfg, out, table);
    else if (*fi_cmd) cmd_factor_iterate(cfg, out, table);
    else if (*fac_cmd) cmd_factor(cfg, out);
    else if (*cls_cmd) cmd_classify(cfg, out);
    else if (*mem_cmd) cmd_membership(cfg, out);
    else if (*bound_cmd) cmd_bound(cfg, out);
    else if (*ver_cmd) return cmd_verify(cfg, out, table);
  } catch (const DomainError& e) {
    err << "niven: error: " << e.what() << "\n";
    return kDomain;
  } catch (const CapExceeded& e) {
    err << "niven: limit exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "niven: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace niven::cli

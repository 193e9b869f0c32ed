#include "tqft/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "tqft/annulus/twist.hpp"
#include "tqft/bracket/corpus.hpp"
#include "tqft/errors.hpp"
#include "tqft/genus1/torus.hpp"
#include "tqft/lattice/lattice.hpp"
#include "tqft/planar/gram.hpp"
#include "tqft/planar/oracle.hpp"
#include "tqft/recoupling/recoupling.hpp"
#include "tqft/ring/serialize.hpp"

namespace tqft::cli {

using nlohmann::json;
using ring::CycNum;
using ring::IntLaurent;

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long k = 3; k * k <= p; k += 2)
    if (p % k == 0) return false;
  return true;
}

void validate(const RunConfig& c) {
  if (c.primes.empty()) throw DomainError("config: no primes given");
  for (long p : c.primes)
    if (!is_odd_prime(p)) throw DomainError("config: " + std::to_string(p) + " is not an odd prime");
  if (c.caps.crossings == 0 || c.caps.cable_width == 0 || c.cap_iter < 1)
    throw DomainError("config: caps must be positive");
}

bool VerifyResult::all_pass() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.pass; });
}

json to_json(const Certificate& c) { return {{"id", c.id}, {"claim", c.claim}, {"pass", c.pass}, {"data", c.data}}; }

json to_json(const VerifyResult& r) {
  json a = json::array();
  for (const auto& c : r.certificates) a.push_back(to_json(c));
  return a;
}

namespace {

using Check = std::function<bool(json&)>;

struct Runner {
  std::vector<Certificate> out;

  void run(const std::string& id, const std::string& claim, const Check& f) {
    Certificate c{id, claim, false, json::object()};
    try {
      c.pass = f(c.data);
    } catch (const RefutationError& e) {
      c.data["error"] = e.what();
    } catch (const ResourceError& e) {
      c.data["error"] = e.what();
    } catch (const DomainError& e) {
      c.data["error"] = e.what();
    }
    out.push_back(std::move(c));
  }
};

std::string tag(const std::string& base, long p) { return base + ".p" + (p < 10 ? "0" : "") + std::to_string(p); }

mpq_class rank_poly(unsigned g, long k) {
  const mpz_class K = k;
  if (g == 3) {
    const std::vector<long> c{0, 3, 32, 120, 200, 192, 128};
    mpz_class s = 0, pw = 1;
    for (long x : c) {
      s += x * pw;
      pw *= K;
    }
    mpq_class r(s, 45);
    r.canonicalize();
    return r;
  }
  const std::vector<long> c{0, 45, 864, 6892, 30184, 83760, 172512, 304896, 458112, 542720, 487424, 294912, 98304};
  mpz_class s = 0, pw = 1;
  for (long x : c) {
    s += x * pw;
    pw *= K;
  }
  mpq_class r(s, 14175);
  r.canonicalize();
  return r;
}

void polynomial_claims(Runner& r) {
  r.run("01.poly.values_at_minus_one", "S_{1,i,n}(-1) is (-1)^n for i = n and 0 otherwise, n <= 25", [](json& d) {
    for (unsigned n = 1; n <= 25; ++n)
      for (unsigned i = 1; i <= n; ++i) {
        const mpz_class expect = i == n ? (n % 2 == 0 ? 1 : -1) : 0;
        if (annulus::S_poly(1, i, n).evaluate(-1) != expect) return false;
      }
    d["n_max"] = 25;
    return true;
  });
  r.run("01.poly.recursion", "S_{m,i,n} = i^2 S_{m-2,i,n} + 2i(2i+1) S_{m-2,i+1,n} for m in {3,5}, n <= 20", [](json& d) {
    for (unsigned m : {3u, 5u})
      for (unsigned n = 1; n <= 20; ++n)
        for (unsigned i = 1; i <= n; ++i) {
          IntLaurent rhs = annulus::S_poly(m - 2, i, n) * IntLaurent(static_cast<long>(i * i));
          if (i + 1 <= n) rhs += annulus::S_poly(m - 2, i + 1, n) * IntLaurent(static_cast<long>(2 * i * (2 * i + 1)));
          if (annulus::S_poly(m, i, n) != rhs) return false;
        }
    d["n_max"] = 20;
    return true;
  });
  r.run("01.poly.divisibility", "(1+A)^{n-i} divides S_{1,i,n} for n <= 30", [](json& d) {
    for (unsigned n = 1; n <= 30; ++n)
      for (unsigned i = 1; i <= n; ++i)
        if (!ring::divide_by_one_plus_A(annulus::S_poly(1, i, n), n - i)) return false;
    d["n_max"] = 30;
    return true;
  });
  r.run("02.twist.v_basis", "the twist preserves span{v^j} over Z[A,A^-1] and conjugates to diag(mu_i), n <= 12",
        [](json& d) {
          for (unsigned n = 1; n <= 12; ++n)
            if (!annulus::twist_conjugates_to_mu(annulus::twist_matrix_v(n))) return false;
          d["n_max"] = 12;
          return true;
        });
  r.run("02.twist.vtilde_squared", "t^2 preserves span{vt^j} over Z[q,q^-1] and conjugates to diag(mu_i^2), n <= 8",
        [](json& d) {
          for (unsigned n = 1; n <= 8; ++n)
            if (!annulus::twist_sq_conjugates_to_mu_sq(annulus::twist_matrix_vtilde_sq(n))) return false;
          d["n_max"] = 8;
          return true;
        });
}

std::vector<lattice::Vector> coords_of(const std::vector<genus1::TorusVector>& b) {
  std::vector<lattice::Vector> out;
  for (const auto& x : b) out.push_back(x.coords);
  return out;
}

lattice::OLattice basis_lattice(long p, const std::string& name) {
  return lattice::OLattice::span(ring::CycField::get(p), static_cast<size_t>((p - 1) / 2),
                                 coords_of(genus1::basis(p, name)));
}

void genus1_claims(Runner& r, long p) {
  const long d = (p - 1) / 2;
  r.run(tag("03.genus1.e_det", p), "the e-basis Gram determinant is associate to (1-q)^{d(d-1)}", [&](json& j) {
    auto c = genus1::verify_unimodular(genus1::gram(genus1::basis_e(p)));
    j = genus1::to_json(c, p, "e");
    return c.associate_exponent && *c.associate_exponent == d * (d - 1);
  });
  for (const char* b : {"omega", "v"})
    r.run(tag(std::string("03.genus1.") + b + "_unit", p), std::string("the ") + b + "-basis Gram determinant is a unit",
          [&](json& j) {
            auto c = genus1::verify_unimodular(genus1::gram(genus1::basis(p, b)));
            j = genus1::to_json(c, p, b);
            return c.unit;
          });
  r.run(tag("03.genus1.det_W", p), "det W is associate to (1-q)^{-d(d-1)/2}", [&](json& j) {
    auto c = genus1::det_W_check(p);
    j = {{"det", ring::to_json(c.det)}, {"exponent", *c.exponent}, {"expected", c.expected_exponent}};
    return true;
  });
  r.run(tag("04.basis.omega_product", p), "omega equals its product form", [&](json& j) {
    genus1::check_omega(p);
    j["d"] = d;
    return true;
  });
  r.run(tag("04.basis.v_omega_change", p), "v and omega change-of-basis matrices are integral both ways", [&](json& j) {
    auto c = genus1::v_in_omega_span(p);
    j["size"] = c.size();
    return true;
  });
  r.run(tag("04.basis.lattice_equal", p), "the omega lattice equals the v lattice", [&](json& j) {
    const auto w = basis_lattice(p, "omega");
    const auto v = basis_lattice(p, "v");
    j = {{"z_rank", v.z_rank()}, {"den", v.den().get_str()}};
    return lattice::lattice_equal(w, v);
  });
  r.run(tag("04.basis.s_matrix_v", p), "S-matrix entries in the v-basis are integral", [&](json& j) {
    const auto s = genus1::s_matrix(p, "v");
    json rows = json::array();
    for (const auto& row : s) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(ring::to_json(x));
      rows.push_back(jr);
    }
    j["S"] = rows;
    return ring::all_integral(s);
  });
}

void stabilize_claim(Runner& r, long p, int cap) {
  r.run(tag("05.stabilize", p), "saturating {e_i} under t and S stabilizes within 5 steps at the v lattice", [&](json& j) {
    auto res = lattice::saturate(coords_of(genus1::basis_e(p)), {genus1::twist_matrix_e(p), genus1::s_matrix_e(p)}, p,
                                 cap);
    j = {{"iterations", res.iterations}, {"stabilized", res.stabilized}, {"z_ranks", res.z_ranks}};
    return res.stabilized && res.iterations <= 5 && lattice::lattice_equal(res.lattice, basis_lattice(p, "v"));
  });
}

void genus2_claims(Runner& r, long p) {
  const long d = (p - 1) / 2;
  const long rank = d * (d + 1) * (2 * d + 1) / 6;
  r.run(tag("06.genus2.counts", p), "the graph basis has d(d+1)(2d+1)/6 elements and N = (d-1)r", [&](json& j) {
    const auto a = planar::arrangement_set_genus2(p);
    long n = 0;
    for (const auto& x : a) n += x.curve_count();
    const long g = static_cast<long>(planar::graph_basis_genus2(p).size());
    j = {{"r", rank}, {"graph_basis", g}, {"arrangements", a.size()}, {"N", n}};
    return g == rank && static_cast<long>(a.size()) == rank && n == (d - 1) * rank;
  });
  r.run(tag("06.genus2.triangular", p), "the uncolored expansion matrix is unit triangular", [&](json& j) {
    const auto m = planar::expansion_matrix_genus2(p, planar::CurveColor::Z);
    for (size_t a = 0; a < m.size(); ++a) {
      if (m[a][a] != CycNum(m[a][a].field(), 1)) return false;
      for (size_t c = a + 1; c < m.size(); ++c)
        if (!m[a][c].is_zero()) return false;
    }
    j["size"] = m.size();
    return true;
  });
  r.run(tag("06.genus2.Av_unit", p), "the Gram determinant of the v-colored arrangements is a unit", [&](json& j) {
    const auto rep = planar::gram_genus2(p, "Av");
    j = planar::to_json(rep);
    return rep.unimodular;
  });
}

void genus3_claims(Runner& r) {
  r.run("07.genus3.counts", "15 arrangements with 22 curves", [](json& j) {
    const auto a = planar::arrangement_set_genus3();
    long n = 0;
    for (const auto& x : a) n += x.curve_count();
    j = {{"arrangements", a.size()}, {"curves", n}};
    return a.size() == 15 && n == 22;
  });
  for (auto color : {planar::CurveColor::V, planar::CurveColor::Omega})
    r.run("07.genus3." + planar::to_string(color), "the O+-valued Gram determinant has (1-q)-valuation 1",
          [&](json& j) {
            const auto rep = planar::genus3_p5_report(color);
            j = planar::to_json(rep);
            return rep.valuation == 1 && rep.entries_in_plus;
          });
  r.run("07.genus3.parity", "odd valuation with (d-1)gr = 45 odd, so the form is not unimodular", [](json& j) {
    const auto w = planar::non_unimodular_witness(planar::genus3_p5_report(planar::CurveColor::V));
    j = planar::to_json(w);
    return w.not_unimodular && w.predicted == 45;
  });
}

void rank_claims(Runner& r) {
  r.run("08.rank.small", "admissible coloring counts 15 (g=3,p=5) and 175 (g=5,p=5)", [](json& j) {
    const auto a = recoupling::count_admissible(3, 5, recoupling::Constraint::Even);
    const auto b = recoupling::count_admissible(5, 5, recoupling::Constraint::Even);
    j = {{"g3", a.get_str()}, {"g5", b.get_str()}};
    return a == 15 && b == 175;
  });
  r.run("08.rank.polynomials", "rank polynomials in k agree with enumeration for p = 4k+1, k <= 3", [](json& j) {
    for (unsigned g : {3u, 5u})
      for (long k = 1; k <= 3; ++k) {
        const long p = 4 * k + 1;
        const auto n = recoupling::count_admissible(g, p, recoupling::Constraint::Even);
        j[std::to_string(g) + "," + std::to_string(p)] = n.get_str();
        if (mpq_class(n) != rank_poly(g, k)) return false;
      }
    return true;
  });
  r.run("08.rank.verlinde", "floating sine formula within 1e-6 of the exact count (labeled float check)", [](json& j) {
    double worst = 0;
    for (unsigned g : {2u, 3u, 5u})
      for (long p : {5L, 7L, 11L, 13L}) {
        const double exact = recoupling::count_admissible(g, p, recoupling::Constraint::Even).get_d();
        worst = std::max(worst, std::fabs(recoupling::verlinde_float(g, p) - exact) / exact);
      }
    j["max_relative_error_float"] = worst;
    return worst < 1e-6;
  });
}

void divisibility_claims(Runner& r, const std::vector<bracket::NamedDiagram>& corpus, const RunConfig& cfg) {
  for (const auto& nd : corpus) {
    r.run("09.divisibility." + nd.name, "(1+A)^mu divides <L(z+2)> and <L(z+[2])>; derivative test matches roots",
          [&](json& j) {
            const auto a = bracket::divisibility_certificate(nd.diagram, false, cfg.caps);
            const auto b = bracket::divisibility_certificate(nd.diagram, true, cfg.caps);
            j = {{"mu", a.mu}, {"quotient", ring::to_json(a.quotient)}, {"quotient_qint", ring::to_json(b.quotient)}};
            for (long p : cfg.primes) {
              if (a.mu >= static_cast<unsigned>(p)) continue;
              if (bracket::derivative_congruences(a.value, a.mu, p) != bracket::divisible_at_root(a.value, a.mu, p))
                return false;
            }
            return true;
          });
  }
}

void oracle_claims(Runner& r, const std::vector<bracket::NamedDiagram>& corpus, const RunConfig& cfg) {
  const long p = 5;
  auto hopf = std::find_if(corpus.begin(), corpus.end(), [](const auto& nd) { return nd.name == "hopf"; });
  if (hopf != corpus.end())
    r.run("10.oracle.hopf", "closed-form e-basis Hopf pairings equal the cabled bracket at p = 5, 7", [&](json& j) {
      long n = 0;
      for (long q : {5L, 7L}) {
        const auto e = genus1::basis_e(q);
        for (unsigned a = 0; a < e.size(); ++a)
          for (unsigned b = 0; b < e.size(); ++b) {
            auto dg = hopf->diagram;
            dg.colors = {bracket::Color{bracket::ColorKind::E, a, false}, bracket::Color{bracket::ColorKind::E, b, false}};
            if (bracket::bracket_colored_at_root(dg, q, cfg.caps) != genus1::hopf_pairing(e[a], e[b])) return false;
            ++n;
          }
      }
      j["compared"] = n;
      return true;
    });
  r.run("10.oracle.genus1", "(e_i, e_j) = D delta_ij from the pairing diagram at p = 5", [&](json& j) {
    const auto e = genus1::basis_e(p);
    for (unsigned a = 0; a < e.size(); ++a)
      for (unsigned b = 0; b < e.size(); ++b) {
        const auto dg = planar::pairing_diagram_genus1(bracket::Color{bracket::ColorKind::E, a, false},
                                                       bracket::Color{bracket::ColorKind::E, b, false});
        if (planar::oracle_pairing(dg, p, cfg.caps) != genus1::hermitian_pairing(e[a], e[b])) return false;
      }
    j["compared"] = e.size() * e.size();
    return true;
  });
  r.run("10.oracle.genus2", "genus-2 Gram entries (z, v, omega colors) equal the diagram oracle at p = 5", [&](json& j) {
    const auto arr = planar::arrangement_set_genus2(p);
    long n = 0;
    for (auto color : {planar::CurveColor::Z, planar::CurveColor::V, planar::CurveColor::Omega}) {
      const auto g = planar::gram_from_expansion(planar::expansion_matrix_genus2(p, color), planar::graph_norms_genus2(p));
      for (size_t a = 0; a < arr.size(); ++a)
        for (size_t b = 0; b < arr.size(); ++b, ++n) {
          const auto dg = planar::pairing_diagram_genus2(arr[a], arr[b], planar::to_bracket_color(color));
          if (planar::oracle_pairing(dg, p, cfg.caps) != g[a][b]) return false;
        }
    }
    j["compared"] = n;
    return true;
  });
  r.run("10.oracle.genus3", "genus-3 Gram entries (z, v colors) equal the diagram oracle at p = 5", [&](json& j) {
    const auto arr = planar::arrangement_set_genus3();
    long n = 0;
    for (auto color : {planar::CurveColor::Z, planar::CurveColor::V}) {
      const auto g = planar::gram_from_expansion(planar::expansion_matrix_genus3(color), planar::graph_norms_genus3());
      for (size_t a = 0; a < arr.size(); ++a)
        for (size_t b = 0; b < arr.size(); ++b, ++n) {
          const auto dg = planar::pairing_diagram_genus3(arr[a], arr[b], planar::to_bracket_color(color));
          if (planar::oracle_pairing(dg, p, cfg.caps) != g[a][b]) return false;
        }
    }
    j["compared"] = n;
    return true;
  });
}

}  // namespace

VerifyResult verify_all(const RunConfig& config) {
  validate(config);
  const auto corpus = bracket::load_corpus(config.corpus);
  Runner r;
  polynomial_claims(r);
  for (long p : config.primes) {
    genus1_claims(r, p);
    if (p == 5 || p == 7) stabilize_claim(r, p, config.cap_iter);
    if (p >= 5) genus2_claims(r, p);
  }
  genus3_claims(r);
  rank_claims(r);
  divisibility_claims(r, corpus, config);
  oracle_claims(r, corpus, config);
  std::stable_sort(r.out.begin(), r.out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return VerifyResult{std::move(r.out)};
}

}  // namespace tqft::cli

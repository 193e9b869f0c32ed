#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tqft/bracket/corpus.hpp"
#include "tqft/cli/verify.hpp"
#include "tqft/errors.hpp"
#include "tqft/genus1/torus.hpp"
#include "tqft/lattice/lattice.hpp"
#include "tqft/planar/gram.hpp"
#include "tqft/recoupling/recoupling.hpp"
#include "tqft/ring/serialize.hpp"

using nlohmann::json;
using namespace tqft;

namespace {

struct Options {
  long p = 5;
  std::vector<long> primes{5, 7};
  std::string basis;
  std::string color = "v";
  std::string seed = "e";
  std::string ops = "t,s";
  std::string emit = "json";
  std::string corpus = TQFT_DEFAULT_CORPUS;
  unsigned genus = 2;
  unsigned cap_crossings = 20;
  int cap_iter = 32;
};

void check_prime(long p, long min) {
  if (!cli::is_odd_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p < min) throw DomainError("p must be at least " + std::to_string(min));
}

void emit(const json& j, const Options& o) {
  if (o.emit == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) emit(x, o);
    return;
  }
  for (const auto& [k, v] : j.items()) std::cout << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  std::cout << "\n";
}

json stable_lattice_json(const lattice::OLattice& l) {
  json rows = json::array();
  for (const auto& r : l.zbasis()) {
    json jr = json::array();
    for (const auto& x : r) jr.push_back(x.get_str());
    rows.push_back(jr);
  }
  return {{"den", l.den().get_str()}, {"hnf", rows}};
}

int run_stabilize(const Options& o) {
  check_prime(o.p, 3);
  std::vector<ring::Matrix> ops;
  std::stringstream ss(o.ops);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok == "t") ops.push_back(genus1::twist_matrix_e(o.p));
    else if (tok == "s") ops.push_back(genus1::s_matrix_e(o.p));
    else throw DomainError("unknown op: " + tok);
  }
  std::vector<lattice::Vector> seed;
  if (o.seed == "omega")
    seed = {genus1::omega(o.p).coords};
  else
    for (const auto& b : genus1::basis(o.p, o.seed)) seed.push_back(b.coords);
  auto res = lattice::saturate(seed, ops, o.p, o.cap_iter);
  std::vector<lattice::Vector> vb;
  for (const auto& b : genus1::basis_v(o.p)) vb.push_back(b.coords);
  const auto v = lattice::OLattice::span(res.lattice.field(), vb.front().size(), vb);
  json j{{"p", o.p},
         {"seed", o.seed},
         {"ops", o.ops},
         {"iterations", res.iterations},
         {"stabilized", res.stabilized},
         {"z_ranks", res.z_ranks},
         {"equals_v_lattice", lattice::lattice_equal(res.lattice, v)},
         {"lattice", stable_lattice_json(res.lattice)}};
  if (!res.stabilized) j["report"] = "cap of " + std::to_string(o.cap_iter) + " iterations reached without stabilization";
  emit(j, o);
  return 0;
}

int run_bracket(const Options& o) {
  bracket::Caps caps;
  caps.crossings = o.cap_crossings;
  json out = json::array();
  for (const auto& nd : bracket::load_corpus(o.corpus)) {
    const auto c = bracket::divisibility_certificate(nd.diagram, false, caps);
    const auto cq = bracket::divisibility_certificate(nd.diagram, true, caps);
    out.push_back({{"name", nd.name},
                   {"components", c.mu},
                   {"bracket", ring::to_json(bracket::kauffman_bracket(nd.diagram, caps))},
                   {"z_plus_2", ring::to_json(c.value)},
                   {"z_plus_2_over_1_plus_A_mu", ring::to_json(c.quotient)},
                   {"z_plus_qint2_over_1_plus_A_mu", ring::to_json(cq.quotient)}});
  }
  emit(out, o);
  return 0;
}

int run_verify_all(const Options& o) {
  cli::RunConfig cfg;
  cfg.primes = o.primes;
  cfg.corpus = o.corpus;
  cfg.caps.crossings = o.cap_crossings;
  cfg.cap_iter = o.cap_iter;
  const auto res = cli::verify_all(cfg);
  const json bundle = cli::to_json(res);
  if (const char* dir = std::getenv("TQFT_OUT_DIR")) {
    const std::string path = std::string(dir) + "/verify-all.json";
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    f << bundle.dump(2) << "\n";
  }
  if (o.emit == "json") {
    std::cout << bundle.dump(2) << "\n";
  } else {
    for (const auto& c : res.certificates) std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.id << "  " << c.claim << "\n";
    std::cout << res.certificates.size() << " certificates\n";
  }
  for (const auto& c : res.certificates)
    if (!c.pass) std::cerr << "failing claim: " << c.id << "\n";
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of integral TQFT bases"};
  app.require_subcommand(1);
  Options o;
  auto add_emit = [&](CLI::App* s) {
    s->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* g1 = app.add_subcommand("genus1", "Genus-1 Gram certificate");
  g1->add_option("--p", o.p, "Odd prime")->required();
  g1->add_option("--basis", o.basis, "e, omega or v")->required()->check(CLI::IsMember({"e", "omega", "v"}));
  add_emit(g1);

  auto* g2 = app.add_subcommand("genus2", "Genus-2 Gram report");
  g2->add_option("--p", o.p, "Odd prime >= 5")->required();
  g2->add_option("--basis", o.basis, "A, Av or G")->required()->check(CLI::IsMember({"A", "Av", "G"}));
  add_emit(g2);

  auto* g3 = app.add_subcommand("genus3p5", "Genus-3 report at p = 5");
  g3->add_option("--color", o.color, "z, v or omega")->check(CLI::IsMember({"z", "v", "omega"}));
  add_emit(g3);

  auto* rk = app.add_subcommand("rank", "Exact rank by coloring enumeration");
  rk->add_option("--p", o.p, "Odd number >= 3")->required();
  rk->add_option("--genus", o.genus, "Genus >= 1")->required();
  add_emit(rk);

  auto* br = app.add_subcommand("bracket", "Brackets and divisibility for a corpus");
  br->add_option("--corpus", o.corpus, "Corpus JSON file");
  br->add_option("--cap-crossings", o.cap_crossings, "Crossing cap")->check(CLI::PositiveNumber);
  add_emit(br);

  auto* st = app.add_subcommand("stabilize", "Saturate a seed lattice under mapping classes");
  st->add_option("--p", o.p, "Odd prime")->required();
  st->add_option("--seed", o.seed, "e, omega or v")->check(CLI::IsMember({"e", "omega", "v"}));
  st->add_option("--ops", o.ops, "Comma list of t and s");
  st->add_option("--cap-iter", o.cap_iter, "Iteration cap")->check(CLI::PositiveNumber);
  add_emit(st);

  auto* va = app.add_subcommand("verify-all", "Run every certificate");
  va->add_option("--p", o.primes, "Odd primes")->delimiter(',');
  va->add_option("--corpus", o.corpus, "Corpus JSON file");
  va->add_option("--cap-crossings", o.cap_crossings, "Crossing cap")->check(CLI::PositiveNumber);
  va->add_option("--cap-iter", o.cap_iter, "Iteration cap")->check(CLI::PositiveNumber);
  add_emit(va);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g1) {
      check_prime(o.p, 3);
      auto c = genus1::verify_unimodular(genus1::gram(genus1::basis(o.p, o.basis)));
      json j = genus1::to_json(c, o.p, o.basis);
      if (o.basis == "omega") j["det_W_exponent"] = *genus1::det_W_check(o.p).exponent;
      emit(j, o);
    } else if (*g2) {
      check_prime(o.p, 5);
      emit(planar::to_json(planar::gram_genus2(o.p, o.basis)), o);
    } else if (*g3) {
      const auto rep = planar::genus3_p5_report(planar::curve_color_from_string(o.color));
      json j = planar::to_json(rep);
      j["parity"] = planar::to_json(planar::non_unimodular_witness(rep));
      emit(j, o);
    } else if (*rk) {
      if (o.p < 3 || o.p % 2 == 0) throw DomainError("p must be odd and at least 3");
      if (o.genus < 1) throw DomainError("genus must be at least 1");
      const auto n = recoupling::count_admissible(o.genus, o.p, recoupling::Constraint::Even);
      emit({{"p", o.p},
            {"genus", o.genus},
            {"rank", n.get_str()},
            {"verlinde_float", recoupling::verlinde_float(o.genus, o.p)}},
           o);
    } else if (*br) {
      return run_bracket(o);
    } else if (*st) {
      return run_stabilize(o);
    } else if (*va) {
      return run_verify_all(o);
    }
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const RefutationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}

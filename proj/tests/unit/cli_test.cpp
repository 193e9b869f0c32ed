#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "tqft/cli/verify.hpp"
#include "tqft/errors.hpp"

using namespace tqft;

namespace {
cli::RunConfig default_config() {
  cli::RunConfig c;
  c.corpus = std::string(TQFT_CORPUS_DIR) + "/links.json";
  return c;
}
}  // namespace

TEST_CASE("config validation") {
  auto c = default_config();
  CHECK_NOTHROW(cli::validate(c));
  c.primes = {5, 9};
  CHECK_THROWS_AS(cli::validate(c), DomainError);
  c.primes = {2};
  CHECK_THROWS_AS(cli::validate(c), DomainError);
  c = default_config();
  c.cap_iter = 0;
  CHECK_THROWS_AS(cli::validate(c), DomainError);
  CHECK(cli::is_odd_prime(13));
  CHECK_FALSE(cli::is_odd_prime(15));
}

TEST_CASE("corrupted corpus fails before any certificate") {
  const std::string path = "/tmp/tqft_corrupt_corpus.json";
  {
    std::ofstream f(path);
    f << "[{\"name\": \"x\", \"pd\": [[1,2,";
  }
  auto c = default_config();
  c.corpus = path;
  CHECK_THROWS_AS(cli::verify_all(c), IoError);
  std::remove(path.c_str());
  c.corpus = "/nonexistent/links.json";
  CHECK_THROWS_AS(cli::verify_all(c), IoError);
}

TEST_CASE("verify-all passes and is deterministic") {
  const auto a = cli::verify_all(default_config());
  CHECK(a.all_pass());
  CHECK(a.certificates.size() >= 20);
  for (const auto& cert : a.certificates) {
    CAPTURE(cert.id);
    CHECK(cert.pass);
    CHECK_FALSE(cert.claim.empty());
  }
  const auto b = cli::verify_all(default_config());
  CHECK(cli::to_json(a).dump() == cli::to_json(b).dump());
}

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tqft/bracket/evaluate.hpp"

namespace tqft::cli {

struct RunConfig {
  std::vector<long> primes{5, 7};
  std::string corpus;
  bracket::Caps caps;
  int cap_iter = 32;
};

/// Odd primes >= 3, positive caps; DomainError otherwise.
void validate(const RunConfig& c);
bool is_odd_prime(long p);

struct Certificate {
  std::string id;
  std::string claim;
  bool pass = false;
  nlohmann::json data;
};

struct VerifyResult {
  std::vector<Certificate> certificates;  // sorted by id
  bool all_pass() const;
};

/// Runs every claim. The corpus is loaded first, so an unreadable corpus throws
/// IoError before any certificate is produced.
VerifyResult verify_all(const RunConfig& config);

nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const VerifyResult& r);

}  // namespace tqft::cli

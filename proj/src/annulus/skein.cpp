#include "tqft/annulus/skein.hpp"

#include <mutex>

#include "tqft/ring/serialize.hpp"

namespace tqft::annulus {

using ring::CycNum;
using ring::IntLaurent;
using ring::LocLaurent;

std::vector<mpz_class> z_power_in_e(unsigned k) {
  static std::mutex mu;
  static std::vector<std::vector<mpz_class>> cache{{1}};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    const auto& prev = cache.back();
    std::vector<mpz_class> next(prev.size() + 1);
    // z e_j = e_{j+1} + e_{j-1}
    for (size_t j = 0; j < prev.size(); ++j) {
      next[j + 1] += prev[j];
      if (j > 0) next[j - 1] += prev[j];
    }
    cache.push_back(std::move(next));
  }
  return cache[k];
}

std::vector<mpz_class> e_poly(unsigned i) {
  std::vector<mpz_class> prev{1}, cur{0, 1};
  if (i == 0) return prev;
  for (unsigned s = 1; s < i; ++s) {
    std::vector<mpz_class> next(cur.size() + 1);
    for (size_t k = 0; k < cur.size(); ++k) next[k + 1] += cur[k];
    for (size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

GenericSkein v_generic() {
  return GenericSkein({LocLaurent(IntLaurent(2), 1), LocLaurent(IntLaurent(1), 1)});
}

RootSkein v_at_root(const ring::FieldPtr& f) {
  const CycNum inv = ring::CycNum::from_laurent(f, IntLaurent{{0, 1}, {1, 1}}).inverse();
  return RootSkein({inv * CycNum(f, 2), inv});
}

std::vector<LocLaurent> v_coeffs(const GenericSkein& s) {
  const auto& a = s.z_coeffs();
  std::vector<LocLaurent> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    mpz_class pw = 1;  // (-2)^{k-j}, j running down from k
    for (size_t j = k + 1; j-- > 0;) {
      out[j] += scale(a[k], ring::binomial(static_cast<long>(k), static_cast<long>(j)) * pw);
      pw *= -2;
    }
  }
  const IntLaurent one_plus_a{{0, 1}, {1, 1}};
  for (size_t j = 0; j < out.size(); ++j) out[j] *= LocLaurent(one_plus_a.pow(static_cast<unsigned>(j)));
  return out;
}

GenericSkein from_v_coeffs(const std::vector<LocLaurent>& v) {
  GenericSkein out;
  const GenericSkein vv = v_generic();
  GenericSkein pw({LocLaurent(1)});
  for (const auto& c : v) {
    out += pw * c;
    pw = pw * vv;
  }
  return out;
}

namespace {

template <typename Coeff>
nlohmann::json entries(const std::vector<Coeff>& c, const std::string& basis) {
  nlohmann::json arr = nlohmann::json::array();
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    arr.push_back({{"basis", basis}, {"index", k}, {"coeff", ring::to_json(c[k])}});
  }
  return arr;
}

}  // namespace

nlohmann::json to_json(const GenericSkein& s, const std::string& basis) {
  if (basis == "z") return entries(s.z_coeffs(), basis);
  if (basis == "e") return entries(s.e_coeffs(), basis);
  if (basis == "v") return entries(v_coeffs(s), basis);
  throw std::invalid_argument("unknown basis tag: " + basis);
}

nlohmann::json to_json(const RootSkein& s, const std::string& basis) {
  if (basis == "z") return entries(s.z_coeffs(), basis);
  if (basis == "e") return entries(s.e_coeffs(), basis);
  throw std::invalid_argument("unknown basis tag: " + basis);
}

}  // namespace tqft::annulus

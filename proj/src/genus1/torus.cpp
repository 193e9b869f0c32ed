#include "tqft/genus1/torus.hpp"

#include "tqft/annulus/twist.hpp"
#include "tqft/errors.hpp"
#include "tqft/ring/serialize.hpp"

namespace tqft::genus1 {

using annulus::RootSkein;
using ring::IntLaurent;

namespace {

long half(long p) { return (p - 1) / 2; }

CycNum loop_value(const FieldPtr& f, long i) { return CycNum(f, i % 2 == 0 ? 1 : -1) * ring::qint(f, i + 1); }

CycNum lambda(const FieldPtr& f, long i) { return -(ring::q(f).pow(i + 1) + ring::q(f).pow(-i - 1)); }

}  // namespace

TQFTParams params(long p) {
  auto f = ring::CycField::get(p);
  TQFTParams t;
  t.p = p;
  t.d = half(p);
  t.A = ring::A(f);
  t.q = ring::q(f);
  t.kappa = ring::kappa(f);
  t.D = ring::surgery_D(f);
  t.eta = t.D.inverse();
  return t;
}

TorusVector reduce(const RootSkein& s) {
  if (s.is_zero()) throw DomainError("reduce: zero skein carries no field; use basis_vector");
  const FieldPtr f = s.z_coeffs().front().field() ? s.z_coeffs().front().field() : s.z_coeffs().back().field();
  const long d = half(f->p());
  auto g = annulus::e_poly(static_cast<unsigned>(d));
  auto g1 = annulus::e_poly(static_cast<unsigned>(d - 1));
  for (size_t k = 0; k < g1.size(); ++k) g[k] -= g1[k];
  std::vector<CycNum> c = s.z_coeffs();
  for (auto& x : c)
    if (!x.field()) x = CycNum(f, 0);
  for (long k = static_cast<long>(c.size()) - 1; k >= d; --k) {
    const CycNum lead = c[k];
    if (lead.is_zero()) continue;
    for (long m = 0; m <= d; ++m)
      if (g[m] != 0) c[k - d + m] -= lead * CycNum(f, g[m]);
  }
  c.resize(static_cast<size_t>(d), CycNum(f, 0));
  auto e = RootSkein(c).e_coeffs();
  TorusVector out{f, std::vector<CycNum>(static_cast<size_t>(d), CycNum(f, 0))};
  for (size_t i = 0; i < e.size(); ++i) out.coords[i] = e[i].field() ? e[i] : CycNum(f, 0);
  return out;
}

TorusVector basis_vector(const FieldPtr& f, long i) {
  TorusVector v{f, std::vector<CycNum>(static_cast<size_t>(half(f->p())), CycNum(f, 0))};
  v.coords.at(static_cast<size_t>(i)) = CycNum(f, 1);
  return v;
}

TorusVector omega(long p) {
  auto f = ring::CycField::get(p);
  const CycNum eta = ring::surgery_D(f).inverse();
  TorusVector v{f, {}};
  for (long i = 0; i < half(p); ++i) v.coords.push_back(eta * loop_value(f, i));
  return v;
}

TorusVector omega_product(long p) {
  auto f = ring::CycField::get(p);
  RootSkein s({ring::surgery_D(f)});
  const CycNum l0 = lambda(f, 0);
  for (long i = 1; i < half(p); ++i) {
    const CycNum inv = (l0 - lambda(f, i)).inverse();
    s = s * RootSkein({-lambda(f, i) * inv, inv});
  }
  return reduce(s);
}

void check_omega(long p) {
  if (omega(p) != omega_product(p)) throw RefutationError("omega definitions disagree at p=" + std::to_string(p));
}

CycNum mu_at_root(const FieldPtr& f, long i) {
  return CycNum::from_laurent(f, annulus::mu(static_cast<unsigned>(i)));
}

TorusVector twist(const TorusVector& x, long j) {
  TorusVector out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] *= mu_at_root(x.field, static_cast<long>(i)).pow(j);
  return out;
}

CycNum hermitian_pairing(const TorusVector& x, const TorusVector& y) {
  CycNum s(x.field, 0);
  for (size_t i = 0; i < x.coords.size(); ++i) s += x.coords[i] * y.coords[i].conj();
  return ring::surgery_D(x.field) * s;
}

CycNum hopf_pairing(const TorusVector& x, const TorusVector& y) {
  const FieldPtr& f = x.field;
  CycNum s(f, 0);
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].is_zero()) continue;
    for (size_t j = 0; j < y.coords.size(); ++j)
      s += x.coords[i] * y.coords[j] * CycNum(f, (i + j) % 2 == 0 ? 1 : -1) *
           ring::qint(f, static_cast<long>((i + 1) * (j + 1)));
  }
  return s;
}

Matrix coordinates(const std::vector<TorusVector>& basis) {
  Matrix m;
  for (const auto& b : basis) m.push_back(b.coords);
  return m;
}

Matrix gram(const std::vector<TorusVector>& basis) {
  Matrix g;
  for (const auto& x : basis) {
    std::vector<CycNum> row;
    for (const auto& y : basis) row.push_back(hermitian_pairing(x, y));
    g.push_back(std::move(row));
  }
  return g;
}

GramCertificate verify_unimodular(const Matrix& g) {
  GramCertificate c;
  c.det = ring::determinant(g);
  if (c.det.is_zero()) throw DomainError("degenerate Gram matrix");
  c.integral = ring::all_integral(g) && c.det.is_integral();
  c.unit = c.integral && ring::is_unit(c.det);
  c.associate_exponent = ring::associate_exponent(c.det);
  return c;
}

nlohmann::json to_json(const GramCertificate& c, long p, const std::string& basis) {
  nlohmann::json j{{"p", p},
                   {"basis", basis},
                   {"det", ring::to_json(c.det)},
                   {"integral", c.integral},
                   {"unit", c.unit}};
  j["associate_exponent"] = c.associate_exponent ? nlohmann::json(*c.associate_exponent) : nlohmann::json();
  return j;
}

std::vector<TorusVector> basis_e(long p) {
  auto f = ring::CycField::get(p);
  std::vector<TorusVector> b;
  for (long i = 0; i < half(p); ++i) b.push_back(basis_vector(f, i));
  return b;
}

std::vector<TorusVector> basis_omega(long p) {
  const TorusVector w = omega(p);
  std::vector<TorusVector> b;
  for (long j = 0; j < half(p); ++j) b.push_back(twist(w, j));
  return b;
}

std::vector<TorusVector> basis_v(long p) {
  auto f = ring::CycField::get(p);
  const RootSkein v = annulus::v_at_root(f);
  RootSkein pw({CycNum(f, 1)});
  std::vector<TorusVector> b;
  for (long j = 0; j < half(p); ++j) {
    b.push_back(reduce(pw));
    pw = pw * v;
  }
  return b;
}

std::vector<TorusVector> basis(long p, const std::string& name) {
  if (name == "e") return basis_e(p);
  if (name == "omega") return basis_omega(p);
  if (name == "v") return basis_v(p);
  throw DomainError("unknown genus-1 basis: " + name);
}

DetWCertificate det_W_check(long p) {
  const long d = half(p);
  DetWCertificate c;
  c.det = ring::determinant(coordinates(basis_omega(p)));
  c.expected_exponent = -d * (d - 1) / 2;
  c.exponent = ring::associate_exponent(c.det);
  if (!c.exponent || *c.exponent != c.expected_exponent)
    throw RefutationError("det W is not associate to (1-q)^" + std::to_string(c.expected_exponent) +
                          " at p=" + std::to_string(p));
  return c;
}

Matrix v_in_omega_span(long p) {
  const Matrix v = coordinates(basis_v(p));
  auto winv = ring::inverse(coordinates(basis_omega(p)));
  if (!winv) throw RefutationError("omega basis is singular at p=" + std::to_string(p));
  Matrix c = v * *winv;
  auto cinv = ring::inverse(c);
  if (!ring::all_integral(c) || !cinv || !ring::all_integral(*cinv))
    throw RefutationError("v and omega bases span different lattices at p=" + std::to_string(p));
  return c;
}

// operator convention: row i holds the image of basis element i
Matrix s_matrix(long p, const std::string& basis_name) {
  auto f = ring::CycField::get(p);
  const CycNum eta = ring::surgery_D(f).inverse();
  const auto e = basis_e(p);
  Matrix se;
  for (const auto& x : e) {
    std::vector<CycNum> row;
    for (const auto& y : e) row.push_back(eta * hopf_pairing(x, y));
    se.push_back(std::move(row));
  }
  if (basis_name == "e") return se;
  const Matrix b = coordinates(basis(p, basis_name));
  auto binv = ring::inverse(b);
  if (!binv) throw RefutationError("basis " + basis_name + " is singular at p=" + std::to_string(p));
  Matrix s = b * se * *binv;
  if (basis_name == "v" && !ring::all_integral(s))
    throw RefutationError("S-matrix in the v-basis has a non-integral entry at p=" + std::to_string(p));
  return s;
}

Matrix twist_matrix_e(long p) {
  auto f = ring::CycField::get(p);
  Matrix t = ring::zero_matrix(f, half(p), half(p));
  for (long i = 0; i < half(p); ++i) t[i][i] = mu_at_root(f, i);
  return t;
}

Matrix s_matrix_e(long p) { return s_matrix(p, "e"); }

CycNum v_pairing_closed_form(long p, long i, long j) {
  auto f = ring::CycField::get(p);
  const CycNum one_plus_a = CycNum::from_laurent(f, IntLaurent{{0, 1}, {1, 1}});
  return ring::surgery_D(f) * CycNum(f, mpq_class(ring::binomial(2 * i + 2 * j + 2, i + j), i + j + 1)) /
         one_plus_a.pow(i + j);
}

}  // namespace tqft::genus1

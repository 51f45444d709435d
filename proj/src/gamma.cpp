#include "subdirac/gamma.hpp"

#include <map>
#include <mutex>

namespace subdirac {

namespace {

using S = Scalar;

S ex(long re, long im = 0) { return S::exact(re, im); }

Mat2 pauli(int k) {
  switch (k) {
    case 1: return Mat2{ex(0), ex(1), ex(1), ex(0)};
    case 2: return Mat2{ex(0), ex(0, -1), ex(0, 1), ex(0)};
    case 3: return Mat2{ex(1), ex(0), ex(0), ex(-1)};
    default: return Mat2::identity();
  }
}

Mat4 blocks(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m.set(i, j, a(i, j));
      m.set(i, j + 2, b(i, j));
      m.set(i + 2, j, c(i, j));
      m.set(i + 2, j + 2, d(i, j));
    }
  }
  return m;
}

std::array<Mat4, 4> spinor_gammas() {
  const Mat2 one = Mat2::identity();
  const Mat2 zero;
  std::array<Mat4, 4> g;
  g[0] = blocks(zero, one, one, zero);
  for (int k = 1; k <= 3; ++k) g[k] = blocks(zero, -pauli(k), pauli(k), zero);
  return g;
}

std::array<Mat4, 4> standard_gammas() {
  const Mat2 one = Mat2::identity();
  const Mat2 zero;
  std::array<Mat4, 4> g;
  g[0] = blocks(one, zero, zero, -one);
  for (int k = 1; k <= 3; ++k) g[k] = blocks(zero, pauli(k), -pauli(k), zero);
  return g;
}

std::array<Mat4, 4> majorana_gammas() {
  const Mat2 zero;
  const S i = ex(0, 1);
  std::array<Mat4, 4> g;
  g[0] = blocks(zero, pauli(2), pauli(2), zero);
  g[1] = blocks(i * pauli(3), zero, zero, i * pauli(3));
  g[2] = blocks(zero, -pauli(2), pauli(2), zero);
  g[3] = blocks(-i * pauli(1), zero, zero, -i * pauli(1));
  return g;
}

Mat4 pinned_scaled(RepName to) {
  // Both map the spinor representation onto `to`.
  if (to == RepName::standard) {
    return Mat4{ex(1), ex(0), ex(1),  ex(0),   //
                ex(0), ex(1), ex(0),  ex(1),   //
                ex(1), ex(0), ex(-1), ex(0),   //
                ex(0), ex(1), ex(0),  ex(-1)};
  }
  return Mat4{ex(1),     ex(0, -1), ex(1),     ex(0, 1),   //
              ex(0, 1),  ex(1),     ex(0, -1), ex(1),      //
              ex(-1),    ex(0, -1), ex(1),     ex(0, -1),  //
              ex(0, 1),  ex(-1),    ex(0, 1),  ex(1)};
}

long pinned_norm_sq(RepName to) { return to == RepName::standard ? 2 : 4; }

}  // namespace

std::string to_string(RepName r) {
  switch (r) {
    case RepName::spinor: return "spinor";
    case RepName::standard: return "standard";
    case RepName::majorana: return "majorana";
  }
  return "?";
}

RepName rep_from_string(const std::string& name) {
  if (name == "spinor") return RepName::spinor;
  if (name == "standard") return RepName::standard;
  if (name == "majorana") return RepName::majorana;
  throw Error("unknown-rep", name);
}

Mat4 GammaRep::lowered(int mu) const {
  return metric_sign(mu) > 0 ? gamma[mu] : -gamma[mu];
}

GammaRep GammaRep::promoted() const {
  GammaRep r{name, {}, gamma5.promoted(), metric.promoted()};
  for (int mu = 0; mu < 4; ++mu) r.gamma[mu] = gamma[mu].promoted();
  return r;
}

Mat4 gamma5_of(const std::array<Mat4, 4>& g) {
  const Backend b = g[0].backend();
  return Scalar::exact(0, -1).to(b) * (g[0] * g[1] * g[2] * g[3]);
}

GammaRep build_rep(RepName name) {
  std::array<Mat4, 4> g;
  switch (name) {
    case RepName::spinor: g = spinor_gammas(); break;
    case RepName::standard: g = standard_gammas(); break;
    case RepName::majorana: g = majorana_gammas(); break;
  }
  return GammaRep{name, g, gamma5_of(g),
                  Mat4::diagonal({ex(1), ex(-1), ex(-1), ex(-1)})};
}

GammaRep build_rep(const std::string& name) { return build_rep(rep_from_string(name)); }

std::shared_ptr<const GammaRep> shared_rep(RepName name, Backend b) {
  static std::mutex mutex;
  static std::map<std::pair<RepName, Backend>, std::shared_ptr<const GammaRep>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{name, b}];
  if (!slot) {
    GammaRep rep = build_rep(name);
    slot = std::make_shared<const GammaRep>(b == Backend::exact ? rep : rep.promoted());
  }
  return slot;
}

std::vector<CliffordResidual> clifford_residual(const std::array<Mat4, 4>& g) {
  const Backend b = g[0].backend();
  const Mat4 one = Mat4::identity(b);
  std::vector<CliffordResidual> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const long g_munu = mu == nu ? 2L * metric_sign(mu) : 0L;
      out.push_back({mu, nu, anticommutator(g[mu], g[nu]) - Scalar::integer(g_munu, b) * one});
    }
  }
  return out;
}

std::vector<CliffordResidual> clifford_residual(const GammaRep& rep) {
  return clifford_residual(rep.gamma);
}

Mat4 sigma(const GammaRep& rep, int mu, int nu) {
  const Backend b = rep.backend();
  if (mu == nu) return Mat4(b);
  const Scalar half_i = Scalar::exact(mpq_class(0), mpq_class(1, 2)).to(b);
  return half_i * commutator(rep.lowered(mu), rep.lowered(nu));
}

Intertwiner::Intertwiner(RepName from, RepName to, Mat4 scaled, long norm_sq)
    : from_(from), to_(to), scaled_(std::move(scaled)), norm_sq_(norm_sq) {
  const GammaRep a = build_rep(from_);
  const GammaRep b = build_rep(to_);
  const Scalar k = Scalar::exact(norm_sq_);
  bool ok = norm_sq_ > 0 && exact_eq(scaled_ * scaled_.adjoint(), k * Mat4::identity());
  for (int mu = 0; ok && mu < 4; ++mu) {
    ok = exact_eq(scaled_ * a.gamma[mu] * scaled_.adjoint(), k * b.gamma[mu]);
  }
  if (!ok) throw Error("intertwiner-invalid", to_string(from_) + " -> " + to_string(to_));
}

bool Intertwiner::exact_unitary() const {
  return mpz_perfect_square_p(mpz_class(norm_sq_).get_mpz_t()) != 0;
}

Mat4 Intertwiner::unitary(Backend b) const {
  if (b == Backend::exact) {
    if (!exact_unitary()) throw Error("intertwiner-not-exact", "irrational normalisation");
    const long root = mpz_class(sqrt(mpz_class(norm_sq_))).get_si();
    return scaled_ * Scalar::rational(1, root);
  }
  return scaled_.promoted() * Scalar::floating(1.0 / std::sqrt(static_cast<double>(norm_sq_)));
}

Mat4 Intertwiner::conjugate(const Mat4& x) const {
  const Backend b = x.backend();
  const Mat4 t = scaled_.to(b);
  const Scalar inv_k = Scalar::rational(1, norm_sq_).to(b);
  return t * x * t.adjoint() * inv_k;
}

Mat4 Intertwiner::congruence(const Mat4& x) const {
  const Backend b = x.backend();
  const Mat4 t = scaled_.to(b);
  const Scalar inv_k = Scalar::rational(1, norm_sq_).to(b);
  return t * x * t.transpose() * inv_k;
}

Mat4 Intertwiner::transport_matrix(Backend b) const {
  if (b == Backend::exact && !exact_unitary()) return scaled_;
  return unitary(b);
}

Intertwiner Intertwiner::inverse() const {
  return Intertwiner(to_, from_, scaled_.adjoint(), norm_sq_);
}

namespace {

Intertwiner make_intertwiner(RepName from, RepName to) {
  if (from == to) return Intertwiner(from, to, Mat4::identity(), 1);
  if (from == RepName::spinor) return Intertwiner(from, to, pinned_scaled(to), pinned_norm_sq(to));
  if (to == RepName::spinor) return make_intertwiner(to, from).inverse();
  // standard <-> majorana through the spinor representation.
  const Intertwiner a = make_intertwiner(from, RepName::spinor);
  const Intertwiner b = make_intertwiner(RepName::spinor, to);
  return Intertwiner(from, to, b.scaled() * a.scaled(), a.norm_sq() * b.norm_sq());
}

}  // namespace

Intertwiner intertwiner(RepName from, RepName to) {
  static std::mutex mutex;
  static std::map<std::pair<RepName, RepName>, Intertwiner> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({from, to});
  if (it == cache.end()) it = cache.emplace(std::pair{from, to}, make_intertwiner(from, to)).first;
  return it->second;
}

Mat4 charge_conjugation_matrix(const GammaRep& rep) {
  const Backend b = rep.backend();
  const Mat4 c_spinor = Scalar::imag_unit(b) * shared_rep(RepName::spinor, b)->gamma[2];
  if (rep.name == RepName::spinor) return c_spinor;
  return intertwiner(RepName::spinor, rep.name).congruence(c_spinor);
}

}  // namespace subdirac

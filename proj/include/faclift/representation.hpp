#pragma once

// Complex representations of finite groups.
//
// A Representation stores one d x d complex matrix per group element and is
// validated exhaustively: rho(e) = I and rho(g)rho(h) = rho(gh) for all
// pairs. An IrrepSet is a complete set of irreducibles: sum of squared
// dimensions equals |G|, characters orthonormal, trivial representation
// first. Built-in closed forms cover cyclic and dihedral groups and direct
// products (tensor construction); anything else is loaded from a JSON table
// and validated the same way.

#include <Eigen/Dense>
#include <complex>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "faclift/group.hpp"
#include "faclift/group_algebra.hpp"

namespace faclift {

using Eigen::MatrixXcd;

namespace tol {
// Validation and rank thresholds used across the representation layer.
inline constexpr double kRepHom = 1e-9;       // homomorphism / identity defect
inline constexpr double kCharOrtho = 1e-9;    // character orthonormality
inline constexpr double kRankCut = 1e-9;      // singular value cutoff for ranks
}  // namespace tol

class Representation {
 public:
  Representation(GroupPtr group, std::vector<MatrixXcd> matrices)
      : group_(std::move(group)), mats_(std::move(matrices)) {
    const auto& G = *group_;
    if (static_cast<int>(mats_.size()) != G.order())
      fail(Errc::ParseError, "need one matrix per group element");
    dim_ = static_cast<int>(mats_[0].rows());
    for (const auto& m : mats_)
      if (m.rows() != dim_ || m.cols() != dim_)
        fail(Errc::NonSquare, "representation matrices must be square of equal size");
    validate_homomorphism();
    chars_.reserve(mats_.size());
    for (const auto& m : mats_) chars_.push_back(m.trace());
  }

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const MatrixXcd& matrix(int g) const { return mats_[g]; }
  cxd character(int g) const { return chars_[g]; }

  bool is_trivial() const {
    if (dim_ != 1) return false;
    for (const auto& c : chars_)
      if (std::abs(c - cxd(1.0)) > tol::kCharOrtho) return false;
    return true;
  }

  // (1/n) sum_g chi(g) conj(other chi(g)) — the standard character inner
  // product; 1 on itself for an irreducible, 0 across inequivalent ones.
  cxd character_inner(const Representation& o) const {
    cxd s = 0.0;
    for (int g = 0; g < group_->order(); ++g) s += chars_[g] * std::conj(o.chars_[g]);
    return s / static_cast<double>(group_->order());
  }

 private:
  void validate_homomorphism() const {
    const auto& G = *group_;
    if (!mats_[0].isApprox(MatrixXcd::Identity(dim_, dim_), tol::kRepHom))
      fail(Errc::NotHomomorphism, "rho(e) is not the identity");
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h) {
        double defect = (mats_[g] * mats_[h] - mats_[G.mul(g, h)]).cwiseAbs().maxCoeff();
        if (defect > tol::kRepHom)
          fail(Errc::NotHomomorphism, "rho(" + G.label(g) + ")rho(" + G.label(h) +
                                          ") != rho(" + G.label(G.mul(g, h)) + ")");
      }
  }

  GroupPtr group_;
  int dim_ = 0;
  std::vector<MatrixXcd> mats_;
  std::vector<cxd> chars_;
};

class IrrepSet {
 public:
  IrrepSet(GroupPtr group, std::vector<Representation> reps)
      : group_(std::move(group)), reps_(std::move(reps)) {
    const auto& G = *group_;
    for (const auto& r : reps_)
      if (r.group() != group_) fail(Errc::GroupMismatch, "representation over a different group");

    for (size_t i = 0; i < reps_.size(); ++i) {
      double norm = std::abs(reps_[i].character_inner(reps_[i]));
      if (std::abs(norm - 1.0) > tol::kCharOrtho)
        fail(Errc::NotIrreducible,
             "rep " + std::to_string(i) + " has character norm " + std::to_string(norm));
      for (size_t j = 0; j < i; ++j)
        if (std::abs(reps_[i].character_inner(reps_[j])) > tol::kCharOrtho)
          fail(Errc::DuplicateRep, "reps " + std::to_string(j) + " and " + std::to_string(i) +
                                       " have overlapping characters");
    }

    long long dim2 = 0;
    for (const auto& r : reps_) dim2 += static_cast<long long>(r.dim()) * r.dim();
    if (dim2 != G.order())
      fail(Errc::IncompleteSet, "sum of squared dimensions is " + std::to_string(dim2) +
                                    ", expected " + std::to_string(G.order()));

    size_t nu = G.conjugacy_classes().size();
    if (reps_.size() != nu)
      fail(Errc::IncompleteSet, "expected " + std::to_string(nu) + " irreps (conjugacy classes)");

    // Canonical ordering puts the trivial representation first.
    for (size_t i = 0; i < reps_.size(); ++i)
      if (reps_[i].is_trivial()) {
        if (i != 0) std::rotate(reps_.begin(), reps_.begin() + i, reps_.begin() + i + 1);
        break;
      }
    if (!reps_[0].is_trivial())
      fail(Errc::IncompleteSet, "no trivial representation in the set");
  }

  const GroupPtr& group() const { return group_; }
  int count() const { return static_cast<int>(reps_.size()); }
  const Representation& rep(int r) const { return reps_[r]; }
  const std::vector<Representation>& reps() const { return reps_; }

 private:
  GroupPtr group_;
  std::vector<Representation> reps_;
};

namespace detail {

inline cxd root_of_unity(int num, int den) {
  // exp(2*pi*i*num/den) with the exponent reduced first.
  int k = ((num % den) + den) % den;
  return std::polar(1.0, 2.0 * std::numbers::pi * k / den);
}

}  // namespace detail

// The n one-dimensional characters chi_j(g^k) = zeta^{jk}, zeta = exp(2πi/n).
inline IrrepSet irreps_cyclic(const GroupPtr& G) {
  if (G->family().family != GroupFamily::Cyclic)
    fail(Errc::WrongFamily, "irreps_cyclic needs a cyclic group");
  int n = G->order();
  std::vector<Representation> reps;
  reps.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<MatrixXcd> mats(n);
    for (int k = 0; k < n; ++k) {
      mats[k] = MatrixXcd(1, 1);
      mats[k](0, 0) = detail::root_of_unity(j * k, n);
    }
    reps.emplace_back(G, std::move(mats));
  }
  return IrrepSet(G, std::move(reps));
}

// Dihedral group of order 2n with elements a^i and a^i*b. One-dimensional
// representations: trivial and sign-on-b always; for even n additionally the
// two with a -> -1. Two-dimensional ones, j = 1..ceil(n/2)-1:
//   rho_j(a^i)   = Dia(zeta^{ji}, zeta^{-ji})
//   rho_j(a^i*b) = Off(zeta^{ji}, zeta^{-ji})        (zeta = exp(2πi/n))
inline IrrepSet irreps_dihedral(const GroupPtr& G) {
  if (G->family().family != GroupFamily::Dihedral)
    fail(Errc::WrongFamily, "irreps_dihedral needs a dihedral group");
  int n = G->family().n;
  std::vector<Representation> reps;

  auto one_dim = [&](double chi_a, double chi_b) {
    std::vector<MatrixXcd> mats(2 * n);
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < n; ++i) {
        mats[s * n + i] = MatrixXcd(1, 1);
        mats[s * n + i](0, 0) = std::pow(chi_a, i) * (s ? chi_b : 1.0);
      }
    reps.emplace_back(G, std::move(mats));
  };

  one_dim(1.0, 1.0);
  one_dim(1.0, -1.0);
  if (n % 2 == 0) {
    one_dim(-1.0, 1.0);
    one_dim(-1.0, -1.0);
  }
  int two_dim_count = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
  for (int j = 1; j <= two_dim_count; ++j) {
    std::vector<MatrixXcd> mats(2 * n);
    for (int i = 0; i < n; ++i) {
      cxd z = detail::root_of_unity(j * i, n);
      cxd zi = detail::root_of_unity(-j * i, n);
      MatrixXcd rot(2, 2), flip(2, 2);
      rot << z, 0.0, 0.0, zi;
      flip << 0.0, z, zi, 0.0;
      mats[i] = rot;
      mats[n + i] = flip;
    }
    reps.emplace_back(G, std::move(mats));
  }
  return IrrepSet(G, std::move(reps));
}

// Direct products: every irrep is a tensor product of factor irreps.
inline IrrepSet irreps_builtin(const GroupPtr& G);

inline IrrepSet irreps_product(const GroupPtr& G) {
  if (G->family().family != GroupFamily::Product)
    fail(Errc::WrongFamily, "irreps_product needs a product group");
  const auto& spec = G->family();
  std::vector<GroupPtr> parts;
  std::vector<IrrepSet> part_irreps;
  for (const auto& f : spec.factors) {
    parts.push_back(make_group(f));
    part_irreps.push_back(irreps_builtin(parts.back()));
  }
  size_t nf = parts.size();

  std::vector<int> radix(nf);
  for (size_t f = 0; f < nf; ++f) radix[f] = parts[f]->order();
  auto decompose = [&](int x) {
    std::vector<int> xs(nf);
    for (size_t f = nf; f-- > 0;) {
      xs[f] = x % radix[f];
      x /= radix[f];
    }
    return xs;
  };

  std::vector<Representation> reps;
  std::vector<int> pick(nf, 0);
  for (;;) {
    std::vector<MatrixXcd> mats(G->order());
    for (int x = 0; x < G->order(); ++x) {
      auto xs = decompose(x);
      MatrixXcd m = part_irreps[0].rep(pick[0]).matrix(xs[0]);
      for (size_t f = 1; f < nf; ++f) {
        const MatrixXcd& b = part_irreps[f].rep(pick[f]).matrix(xs[f]);
        MatrixXcd kron(m.rows() * b.rows(), m.cols() * b.cols());
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j)
            kron.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = m(i, j) * b;
        m = std::move(kron);
      }
      mats[x] = std::move(m);
    }
    reps.emplace_back(G, std::move(mats));
    // odometer over factor irrep indices
    size_t f = nf;
    while (f-- > 0) {
      if (++pick[f] < part_irreps[f].count()) break;
      pick[f] = 0;
      if (f == 0) return IrrepSet(G, std::move(reps));
    }
  }
}

inline IrrepSet irreps_builtin(const GroupPtr& G) {
  switch (G->family().family) {
    case GroupFamily::Cyclic:
      return irreps_cyclic(G);
    case GroupFamily::Dihedral:
      return irreps_dihedral(G);
    case GroupFamily::Product:
      return irreps_product(G);
    case GroupFamily::Table:
      fail(Errc::WrongFamily, "no built-in irreps for table groups; supply a file");
  }
  fail(Errc::WrongFamily, "unreachable");
}

// Representation file schema:
//   { "reps": [ { "dim": d,
//                 "matrices": { "<element label>": [[[re,im], ...], ...] } },
//               ... ] }
// Every group element must appear in every rep.
inline IrrepSet load_irreps(const GroupPtr& G, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("reps") || !j["reps"].is_array())
    fail(Errc::ParseError, "expected an object with a 'reps' array");
  std::vector<Representation> reps;
  for (const auto& jr : j["reps"]) {
    if (!jr.contains("dim") || !jr.contains("matrices"))
      fail(Errc::ParseError, "each rep needs 'dim' and 'matrices'");
    int d = jr["dim"].get<int>();
    if (d < 1) fail(Errc::ParseError, "rep dimension must be positive");
    std::vector<MatrixXcd> mats(G->order());
    std::vector<char> seen(G->order(), 0);
    for (auto it = jr["matrices"].begin(); it != jr["matrices"].end(); ++it) {
      int g = G->require(it.key());
      const auto& rows = it.value();
      if (static_cast<int>(rows.size()) != d)
        fail(Errc::ParseError, "matrix for '" + it.key() + "' has wrong row count");
      MatrixXcd m(d, d);
      for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[r].size()) != d)
          fail(Errc::NonSquare, "matrix for '" + it.key() + "' is not square");
        for (int c = 0; c < d; ++c) {
          const auto& cell = rows[r][c];
          if (!cell.is_array() || cell.size() != 2)
            fail(Errc::ParseError, "matrix entries must be [re, im] pairs");
          m(r, c) = cxd(cell[0].get<double>(), cell[1].get<double>());
        }
      }
      mats[g] = std::move(m);
      seen[g] = 1;
    }
    for (int g = 0; g < G->order(); ++g)
      if (!seen[g]) fail(Errc::ParseError, "missing matrix for element '" + G->label(g) + "'");
    reps.emplace_back(G, std::move(mats));
  }
  return IrrepSet(G, std::move(reps));
}

inline IrrepSet load_irreps_file(const GroupPtr& G, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  return load_irreps(G, j);
}

// rho(H) = rho(H^+) = sum_{h in H} rho(h).
inline MatrixXcd rho_of_subgroup(const Representation& rho, const Subgroup& H) {
  if (H.group() != rho.group()) fail(Errc::GroupMismatch, "subgroup of a different group");
  MatrixXcd m = MatrixXcd::Zero(rho.dim(), rho.dim());
  for (int h : H.elements()) m += rho.matrix(h);
  return m;
}

// Linear extension of rho to C[G]: sum_g x_g rho(g).
inline MatrixXcd apply_representation(const Representation& rho, const GroupAlgebraElement& x) {
  if (x.group() != rho.group()) fail(Errc::GroupMismatch, "algebra element over a different group");
  MatrixXcd m = MatrixXcd::Zero(rho.dim(), rho.dim());
  for (auto& [g, v] : x.terms()) m += v * rho.matrix(g);
  return m;
}

// chi(x) = sum_g x_g chi(g).
inline cxd character_of_algebra_element(const Representation& rho, const GroupAlgebraElement& x) {
  if (x.group() != rho.group()) fail(Errc::GroupMismatch, "algebra element over a different group");
  cxd s = 0.0;
  for (auto& [g, v] : x.terms()) s += v * rho.character(g);
  return s;
}

inline int matrix_rank(const MatrixXcd& m, double cutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++r;
  return r;
}

struct RankIdentityReport {
  long long weighted_rank_sum = 0;  // sum_rho d(rho) * rank(rho(H))
  long long index = 0;              // [G : H]
  std::vector<int> ranks;           // rank(rho(H)) per irrep
  bool pass = false;
};

// Checks sum_rho d(rho) * rank(rho(H)) = [G : H] over a complete irrep set.
inline RankIdentityReport verify_rank_identity(const IrrepSet& irreps, const Subgroup& H) {
  if (H.group() != irreps.group()) fail(Errc::GroupMismatch, "subgroup of a different group");
  RankIdentityReport rep;
  rep.index = H.index();
  for (const auto& rho : irreps.reps()) {
    int r = matrix_rank(rho_of_subgroup(rho, H), tol::kRankCut * rho.dim());
    rep.ranks.push_back(r);
    rep.weighted_rank_sum += static_cast<long long>(rho.dim()) * r;
  }
  rep.pass = rep.weighted_rank_sum == rep.index;
  return rep;
}

}  // namespace faclift

#pragma once

// Base multigraphs with combined voltage assignments.
//
// A base graph is a set of vertices plus arcs with an explicit reverse
// involution. An undirected edge is a mutually-reverse arc pair, a loop is a
// reverse-paired arc pair at one vertex, and a semi-edge is a single
// self-reverse arc. A combined voltage assignment attaches a group element
// alpha(a) to every arc, with alpha(a^-) = alpha(a)^{-1}, and a subgroup
// omega(u) of the voltage group to every vertex.
//
// From the assignment two matrices are derived:
//   B      k x k over C[G], B[u][v] = omega(u)^+ * sum of alpha(a) over arcs u->v
//   B(rho) dk x dk complex, block (u,v) = rho(omega(u)) * sum of rho(alpha(a))

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "faclift/group_algebra.hpp"
#include "faclift/representation.hpp"

namespace faclift {

struct BaseGraph {
  struct Arc {
    std::string id;
    int tail = -1;
    int head = -1;
    int rev = -1;  // arc index; rev == own index marks a semi-edge
  };

  std::vector<std::string> vertex_ids;
  std::vector<Arc> arcs;

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int arc_count() const { return static_cast<int>(arcs.size()); }

  int vertex_index(const std::string& id) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (vertex_ids[i] == id) return i;
    fail(Errc::ParseError, "unknown vertex id '" + id + "'");
  }

  // Arcs leaving u, in declaration order.
  std::vector<int> arcs_from(int u) const {
    std::vector<int> out;
    for (int a = 0; a < arc_count(); ++a)
      if (arcs[a].tail == u) out.push_back(a);
    return out;
  }

  int degree(int u) const { return static_cast<int>(arcs_from(u).size()); }
};

class CombinedVoltageGraph {
 public:
  CombinedVoltageGraph(BaseGraph base, GroupPtr group, std::vector<int> alpha,
                       std::vector<Subgroup> omega)
      : base_(std::move(base)),
        group_(std::move(group)),
        alpha_(std::move(alpha)),
        omega_(std::move(omega)) {
    validate();
  }

  const BaseGraph& base() const { return base_; }
  const GroupPtr& group() const { return group_; }
  int voltage(int arc) const { return alpha_[arc]; }
  const Subgroup& omega(int vertex) const { return omega_[vertex]; }
  int vertex_count() const { return base_.vertex_count(); }

  // Number of vertices of the factored lift, sum_u [G : omega(u)].
  long long lift_vertex_count() const {
    long long k = 0;
    for (const auto& h : omega_) k += h.index();
    return k;
  }

 private:
  void validate() const {
    const auto& G = *group_;
    if (static_cast<int>(alpha_.size()) != base_.arc_count())
      fail(Errc::ParseError, "need one voltage per arc");
    if (static_cast<int>(omega_.size()) != base_.vertex_count())
      fail(Errc::ParseError, "need one subgroup per vertex");
    for (const auto& h : omega_)
      if (h.group() != group_) fail(Errc::NotASubgroup, "omega subgroup over a different group");

    for (int a = 0; a < base_.arc_count(); ++a) {
      const auto& arc = base_.arcs[a];
      if (arc.tail < 0 || arc.tail >= base_.vertex_count() || arc.head < 0 ||
          arc.head >= base_.vertex_count())
        fail(Errc::ParseError, "arc '" + arc.id + "' references a missing vertex");
      if (arc.rev < 0 || arc.rev >= base_.arc_count())
        fail(Errc::BadReversePairing, "arc '" + arc.id + "' has no valid reverse");
      const auto& rarc = base_.arcs[arc.rev];
      if (rarc.rev != a)
        fail(Errc::BadReversePairing, "reverse pairing of arc '" + arc.id + "' is not an involution");
      if (rarc.tail != arc.head || rarc.head != arc.tail)
        fail(Errc::BadReversePairing, "reverse of arc '" + arc.id + "' has inconsistent endpoints");
      if (arc.rev == a) {
        if (arc.tail != arc.head)
          fail(Errc::BadReversePairing, "semi-edge '" + arc.id + "' must have tail == head");
        if (G.mul(alpha_[a], alpha_[a]) != G.identity())
          fail(Errc::SemiEdgeNonInvolution,
               "semi-edge '" + arc.id + "' carries non-involutory voltage " + G.label(alpha_[a]));
      } else if (alpha_[arc.rev] != G.inv(alpha_[a])) {
        fail(Errc::VoltageInverseViolation,
             "alpha(reverse of '" + arc.id + "')) must be " + G.label(G.inv(alpha_[a])));
      }
    }
  }

  BaseGraph base_;
  GroupPtr group_;
  std::vector<int> alpha_;
  std::vector<Subgroup> omega_;
};

// Instance file schema:
// {
//   "group":    { "family": "cyclic"|"dihedral"|"product"|"table", ... },
//   "vertices": [ { "id": "u", "subgroup": ["a","b"] }, ... ],
//   "arcs":     [ { "id": "a1", "tail": "u", "head": "v",
//                   "voltage": "g", "reverse": "a2" }, ... ]
// }
// "subgroup" lists generators (closure is taken); a semi-edge declares
// "reverse" equal to its own id.
inline FamilySpec parse_family_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family")) fail(Errc::ParseError, "group needs a 'family'");
  std::string fam = j["family"].get<std::string>();
  if (fam == "cyclic") return FamilySpec::cyclic(j.at("n").get<int>());
  if (fam == "dihedral") return FamilySpec::dihedral(j.at("n").get<int>());
  if (fam == "product") {
    std::vector<FamilySpec> factors;
    for (const auto& f : j.at("factors")) factors.push_back(parse_family_spec(f));
    return FamilySpec::product(std::move(factors));
  }
  if (fam == "table") {
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    return FamilySpec::from_table(std::move(labels), std::move(table));
  }
  fail(Errc::ParseError, "unknown group family '" + fam + "'");
}

inline CombinedVoltageGraph parse_voltage_graph(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("vertices") || !j.contains("arcs"))
    fail(Errc::ParseError, "instance needs 'group', 'vertices' and 'arcs'");
  GroupPtr G = make_group(parse_family_spec(j["group"]));

  BaseGraph base;
  std::vector<Subgroup> omega;
  for (const auto& jv : j["vertices"]) {
    std::string id = jv.at("id").get<std::string>();
    for (const auto& existing : base.vertex_ids)
      if (existing == id) fail(Errc::ParseError, "duplicate vertex id '" + id + "'");
    base.vertex_ids.push_back(id);
    std::vector<std::string> gens;
    if (jv.contains("subgroup")) gens = jv["subgroup"].get<std::vector<std::string>>();
    omega.push_back(Subgroup::generate_labels(G, gens));
  }

  std::vector<int> alpha;
  std::vector<std::string> rev_ids;
  for (const auto& ja : j["arcs"]) {
    BaseGraph::Arc arc;
    arc.id = ja.at("id").get<std::string>();
    arc.tail = base.vertex_index(ja.at("tail").get<std::string>());
    arc.head = base.vertex_index(ja.at("head").get<std::string>());
    base.arcs.push_back(arc);
    alpha.push_back(G->require(ja.at("voltage").get<std::string>()));
    rev_ids.push_back(ja.at("reverse").get<std::string>());
  }
  for (int a = 0; a < base.arc_count(); ++a) {
    int r = -1;
    for (int b = 0; b < base.arc_count(); ++b)
      if (base.arcs[b].id == rev_ids[a]) {
        if (r != -1) fail(Errc::ParseError, "duplicate arc id '" + rev_ids[a] + "'");
        r = b;
      }
    if (r == -1)
      fail(Errc::BadReversePairing,
           "arc '" + base.arcs[a].id + "' names missing reverse '" + rev_ids[a] + "'");
    base.arcs[a].rev = r;
  }

  return CombinedVoltageGraph(std::move(base), std::move(G), std::move(alpha), std::move(omega));
}

inline CombinedVoltageGraph parse_voltage_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  return parse_voltage_graph(j);
}

// ---------------------------------------------------------------------------
// The matrices B and B(rho)
// ---------------------------------------------------------------------------

class BMatrix {
 public:
  BMatrix(GroupPtr group, int k)
      : group_(std::move(group)), k_(k),
        entries_(static_cast<size_t>(k) * k, GroupAlgebraElement(group_)) {}

  static BMatrix identity(GroupPtr group, int k) {
    BMatrix m(std::move(group), k);
    for (int i = 0; i < k; ++i) m.at(i, i) = GroupAlgebraElement::delta(m.group_, 0);
    return m;
  }

  const GroupPtr& group() const { return group_; }
  int size() const { return k_; }
  GroupAlgebraElement& at(int u, int v) { return entries_[static_cast<size_t>(u) * k_ + v]; }
  const GroupAlgebraElement& at(int u, int v) const {
    return entries_[static_cast<size_t>(u) * k_ + v];
  }

  friend BMatrix operator*(const BMatrix& a, const BMatrix& b) {
    if (a.group_ != b.group_ || a.k_ != b.k_)
      fail(Errc::GroupMismatch, "B matrices are not conformable");
    BMatrix out(a.group_, a.k_);
    for (int i = 0; i < a.k_; ++i)
      for (int j = 0; j < a.k_; ++j) {
        GroupAlgebraElement acc(a.group_);
        for (int l = 0; l < a.k_; ++l) acc += a.at(i, l) * b.at(l, j);
        out.at(i, j) = std::move(acc);
      }
    return out;
  }

 private:
  GroupPtr group_;
  int k_;
  std::vector<GroupAlgebraElement> entries_;
};

// B[u][v] = omega(u)^+ * sum_{a in uv} alpha(a); zero when uv has no arcs.
inline BMatrix build_b_matrix(const CombinedVoltageGraph& cvg) {
  const auto& G = cvg.group();
  int k = cvg.vertex_count();
  BMatrix B(G, k);
  for (int u = 0; u < k; ++u) {
    GroupAlgebraElement hplus = subgroup_sum(cvg.omega(u));
    std::vector<GroupAlgebraElement> volt_sum(k, GroupAlgebraElement(G));
    for (int a : cvg.base().arcs_from(u))
      volt_sum[cvg.base().arcs[a].head].add_term(cvg.voltage(a), 1.0);
    for (int v = 0; v < k; ++v)
      if (!volt_sum[v].is_zero()) B.at(u, v) = hplus * volt_sum[v];
  }
  return B;
}

struct BRhoMatrix {
  int dim = 0;   // d of the representation
  int k = 0;     // base vertex count
  MatrixXcd mat; // dk x dk, blocks in vertex declaration order

  Eigen::Block<const MatrixXcd> block(int u, int v) const {
    return mat.block(u * dim, v * dim, dim, dim);
  }
};

// Block (u,v) of B(rho) is rho(omega(u)) * sum_{a in uv} rho(alpha(a)),
// the factored form of sum_{a} sum_{h in omega(u)} rho(h alpha(a)).
inline BRhoMatrix build_b_rho(const CombinedVoltageGraph& cvg, const Representation& rho) {
  if (rho.group() != cvg.group()) fail(Errc::GroupMismatch, "representation over a different group");
  int k = cvg.vertex_count(), d = rho.dim();
  BRhoMatrix out;
  out.dim = d;
  out.k = k;
  out.mat = MatrixXcd::Zero(d * k, d * k);
  for (int u = 0; u < k; ++u) {
    MatrixXcd front = rho_of_subgroup(rho, cvg.omega(u));
    std::vector<MatrixXcd> volt_sum(k, MatrixXcd::Zero(d, d));
    std::vector<char> nonempty(k, 0);
    for (int a : cvg.base().arcs_from(u)) {
      int v = cvg.base().arcs[a].head;
      volt_sum[v] += rho.matrix(cvg.voltage(a));
      nonempty[v] = 1;
    }
    for (int v = 0; v < k; ++v)
      if (nonempty[v]) out.mat.block(u * d, v * d, d, d) = front * volt_sum[v];
  }
  return out;
}

}  // namespace faclift

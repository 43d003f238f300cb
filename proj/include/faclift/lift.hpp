#pragma once

// Explicit expansion of lifts.
//
// The factored lift of a combined voltage graph has one vertex (u, H) per
// base vertex u and left coset H of omega(u), and one arc (a, h) per base
// arc a and group element h, running from (u, h omega(u)) to
// (v, h alpha(a) omega(v)). Reversal is (a, h) -> (a^-, h alpha(a)). With
// all omega(u) trivial this is the ordinary lift with vertices (u, h).
//
// Lift vertices are canonically ordered by (base vertex, coset index) and
// lift arcs by (base arc, group element); every downstream matrix and
// report relies on that order.

#include <Eigen/Dense>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "faclift/voltage_graph.hpp"

namespace faclift {

struct LiftArc {
  int base_arc = -1;
  int h = -1;     // group element
  int tail = -1;  // lift vertex index
  int head = -1;
  int rev = -1;   // lift arc index
};

class FactoredLift {
 public:
  explicit FactoredLift(CombinedVoltageGraph cvg) : instance_(std::move(cvg)) {
    const auto& G = instance_.group();
    int n = G->order();
    int k = instance_.vertex_count();

    cosets_.reserve(k);
    vertex_offset_.resize(k);
    for (int u = 0; u < k; ++u) {
      vertex_offset_[u] = static_cast<int>(vertices_.size());
      cosets_.push_back(left_cosets(G, instance_.omega(u)));
      for (int c = 0; c < cosets_[u].count(); ++c) vertices_.emplace_back(u, c);
    }

    // Arc (a, h) lives at index a*n + h.
    arcs_.resize(static_cast<size_t>(instance_.base().arc_count()) * n);
    for (int a = 0; a < instance_.base().arc_count(); ++a) {
      const auto& arc = instance_.base().arcs[a];
      for (int h = 0; h < n; ++h) {
        LiftArc& la = arcs_[static_cast<size_t>(a) * n + h];
        la.base_arc = a;
        la.h = h;
        int ha = G->mul(h, instance_.voltage(a));
        la.tail = vertex_index(arc.tail, cosets_[arc.tail].coset_of(h));
        la.head = vertex_index(arc.head, cosets_[arc.head].coset_of(ha));
        la.rev = static_cast<int>(static_cast<size_t>(arc.rev) * n + ha);
      }
    }
  }

  const CombinedVoltageGraph& instance() const { return instance_; }
  const GroupPtr& group() const { return instance_.group(); }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<LiftArc>& arcs() const { return arcs_; }
  const LiftArc& arc(int i) const { return arcs_[i]; }

  // (base vertex, coset index) of a lift vertex.
  std::pair<int, int> vertex(int i) const { return vertices_[i]; }
  int vertex_index(int base_vertex, int coset) const { return vertex_offset_[base_vertex] + coset; }
  const CosetSpace& cosets(int base_vertex) const { return cosets_[base_vertex]; }
  int fibre_offset(int base_vertex) const { return vertex_offset_[base_vertex]; }
  int fibre_size(int base_vertex) const { return cosets_[base_vertex].count(); }

  std::string vertex_name(int i) const {
    auto [u, c] = vertices_[i];
    return instance_.base().vertex_ids[u] + "@" + std::to_string(c);
  }

  int degree(int i) const {
    int d = 0;
    for (const auto& a : arcs_)
      if (a.tail == i) ++d;
    return d;
  }

 private:
  CombinedVoltageGraph instance_;
  std::vector<std::pair<int, int>> vertices_;
  std::vector<int> vertex_offset_;
  std::vector<CosetSpace> cosets_;
  std::vector<LiftArc> arcs_;
};

inline FactoredLift expand_factored_lift(const CombinedVoltageGraph& cvg) {
  return FactoredLift(cvg);
}

// The ordinary lift: vertices (u, h) for all h in G, arcs (a, h) from (u, h)
// to (v, h alpha(a)); the combined subgroups are ignored.
class OrdinaryLift {
 public:
  explicit OrdinaryLift(const CombinedVoltageGraph& cvg)
      : group_(cvg.group()), base_vertex_ids_(cvg.base().vertex_ids) {
    const auto& G = group_;
    int n = G->order();
    int k = cvg.vertex_count();
    vertex_count_ = k * n;
    arcs_.resize(static_cast<size_t>(cvg.base().arc_count()) * n);
    for (int a = 0; a < cvg.base().arc_count(); ++a) {
      const auto& arc = cvg.base().arcs[a];
      for (int h = 0; h < n; ++h) {
        LiftArc& la = arcs_[static_cast<size_t>(a) * n + h];
        la.base_arc = a;
        la.h = h;
        int ha = G->mul(h, cvg.voltage(a));
        la.tail = arc.tail * n + h;
        la.head = arc.head * n + ha;
        la.rev = static_cast<int>(static_cast<size_t>(arc.rev) * n + ha);
      }
    }
  }

  const GroupPtr& group() const { return group_; }
  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<LiftArc>& arcs() const { return arcs_; }
  // Vertex (u, h) sits at index u*|G| + h.
  int vertex_index(int base_vertex, int h) const { return base_vertex * group_->order() + h; }
  std::pair<int, int> vertex(int i) const {
    return {i / group_->order(), i % group_->order()};
  }
  std::string vertex_name(int i) const {
    auto [u, h] = vertex(i);
    return base_vertex_ids_[u] + "@" + group_->label(h);
  }

 private:
  GroupPtr group_;
  std::vector<std::string> base_vertex_ids_;
  int vertex_count_ = 0;
  std::vector<LiftArc> arcs_;
};

inline OrdinaryLift expand_ordinary_lift(const CombinedVoltageGraph& cvg) {
  return OrdinaryLift(cvg);
}

// ---------------------------------------------------------------------------
// Factorisation epimorphism  (u,h) -> (u, h omega(u)),  (a,h) -> (a,h)
// ---------------------------------------------------------------------------

struct EpimorphismReport {
  std::vector<int> vertex_map;     // ordinary lift vertex -> factored lift vertex
  std::vector<int> fibre_sizes;    // per base vertex: |omega(u)| preimages per image
  bool arcs_biject = false;        // arc sets correspond one to one
  bool incidence_preserved = false;
  bool pass = false;
};

inline EpimorphismReport factorisation_epimorphism(const OrdinaryLift& ord,
                                                   const FactoredLift& fac) {
  if (ord.group() != fac.group()) fail(Errc::GroupMismatch, "lifts over different groups");
  const auto& cvg = fac.instance();
  EpimorphismReport rep;
  rep.vertex_map.resize(ord.vertex_count());
  for (int i = 0; i < ord.vertex_count(); ++i) {
    auto [u, h] = ord.vertex(i);
    rep.vertex_map[i] = fac.vertex_index(u, fac.cosets(u).coset_of(h));
  }
  for (int u = 0; u < cvg.vertex_count(); ++u) rep.fibre_sizes.push_back(cvg.omega(u).size());

  rep.arcs_biject = ord.arc_count() == fac.arc_count();
  rep.incidence_preserved = true;
  for (int i = 0; i < ord.arc_count() && rep.arcs_biject; ++i) {
    const LiftArc& oa = ord.arcs()[i];
    const LiftArc& fa = fac.arc(i);
    if (oa.base_arc != fa.base_arc || oa.h != fa.h) rep.arcs_biject = false;
    if (rep.vertex_map[oa.tail] != fa.tail || rep.vertex_map[oa.head] != fa.head)
      rep.incidence_preserved = false;
  }
  // Every factored vertex must have exactly |omega(u)| preimages.
  std::vector<int> preimages(fac.vertex_count(), 0);
  for (int m : rep.vertex_map) ++preimages[m];
  bool fibres_ok = true;
  for (int i = 0; i < fac.vertex_count(); ++i) {
    auto [u, c] = fac.vertex(i);
    if (preimages[i] != cvg.omega(u).size()) fibres_ok = false;
  }
  rep.pass = rep.arcs_biject && rep.incidence_preserved && fibres_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// The left G-action on the factored lift
// ---------------------------------------------------------------------------

struct FreeActionReport {
  bool automorphism_ok = false;     // g.(a,h) = (a,gh) preserves incidence and reversal
  bool free_ok = false;             // no g != e fixes an arc
  bool fibre_transitive_ok = false; // each fibre is a single orbit
  bool stabiliser_ok = false;       // stabiliser of (u, omega(u)) is omega(u)
  bool orbits_ok = false;           // arc orbits have size |G| and count |A|
  bool pass = false;
};

// Checks that g: (a,h) -> (a, gh) is a free action by automorphisms, acting
// transitively on every fibre with omega(u) the stabiliser of (u, omega(u)).
inline FreeActionReport verify_free_arc_action(const FactoredLift& fac) {
  const auto& G = fac.group();
  const auto& cvg = fac.instance();
  int n = G->order();
  FreeActionReport rep;
  rep.automorphism_ok = true;
  rep.free_ok = true;

  // Vertex image of (u, H) under left multiplication by g.
  auto vmap = [&](int g, int lv) {
    auto [u, c] = fac.vertex(lv);
    int h = fac.cosets(u).representative(c);
    return fac.vertex_index(u, fac.cosets(u).coset_of(G->mul(g, h)));
  };

  for (int g = 1; g < n; ++g) {
    for (int i = 0; i < fac.arc_count(); ++i) {
      const LiftArc& la = fac.arc(i);
      int image = la.base_arc * n + G->mul(g, la.h);
      if (image == i) rep.free_ok = false;
      const LiftArc& ia = fac.arc(image);
      if (ia.tail != vmap(g, la.tail) || ia.head != vmap(g, la.head) ||
          ia.rev != la.rev / n * n + G->mul(g, fac.arc(la.rev).h))
        rep.automorphism_ok = false;
    }
  }

  rep.fibre_transitive_ok = true;
  rep.stabiliser_ok = true;
  for (int u = 0; u < cvg.vertex_count(); ++u) {
    int root = fac.vertex_index(u, 0);
    std::vector<char> hit(fac.fibre_size(u), 0);
    int stab = 0;
    for (int g = 0; g < n; ++g) {
      int img = vmap(g, root);
      hit[img - fac.fibre_offset(u)] = 1;
      if (img == root) {
        ++stab;
        if (!cvg.omega(u).contains(g)) rep.stabiliser_ok = false;
      }
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) rep.fibre_transitive_ok = false;
    if (stab != cvg.omega(u).size()) rep.stabiliser_ok = false;
  }

  // Freeness again at orbit level: |A| orbits of size |G| each, one per base arc.
  rep.orbits_ok = true;
  for (int a = 0; a < cvg.base().arc_count(); ++a) {
    std::vector<char> seen(n, 0);
    for (int g = 0; g < n; ++g) seen[G->mul(g, 0)] = 1;  // orbit of (a, e)
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) rep.orbits_ok = false;
  }

  rep.pass = rep.automorphism_ok && rep.free_ok && rep.fibre_transitive_ok &&
             rep.stabiliser_ok && rep.orbits_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Adjacency matrix and exporters
// ---------------------------------------------------------------------------

using MatrixXl = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct AdjacencyMatrix {
  MatrixXl m;  // entry (x,y) = number of lift arcs x -> y
};

template <class Lift>
AdjacencyMatrix adjacency_matrix(const Lift& lift) {
  AdjacencyMatrix A;
  A.m = MatrixXl::Zero(lift.vertex_count(), lift.vertex_count());
  for (const LiftArc& a : lift.arcs()) ++A.m(a.tail, a.head);
  return A;
}

// DOT or whitespace edge-list text. Each undirected edge (mutually-reverse
// arc pair, or single self-reverse arc) is emitted once, in canonical arc
// order; the DOT form also lists every vertex so isolated ones survive.
template <class Lift>
std::string export_lift(const Lift& lift, const std::string& format) {
  std::ostringstream os;
  bool dot = format == "dot";
  if (!dot && format != "edgelist")
    fail(Errc::UnknownFormat, "format must be 'dot' or 'edgelist', got '" + format + "'");
  if (dot) {
    os << "graph lift {\n";
    for (int i = 0; i < lift.vertex_count(); ++i) os << "  \"" << lift.vertex_name(i) << "\";\n";
  }
  for (int i = 0; i < lift.arc_count(); ++i) {
    const LiftArc& a = lift.arcs()[i];
    if (a.rev < i) continue;  // partner already emitted
    if (dot)
      os << "  \"" << lift.vertex_name(a.tail) << "\" -- \"" << lift.vertex_name(a.head)
         << "\";\n";
    else
      os << lift.vertex_name(a.tail) << " " << lift.vertex_name(a.head) << "\n";
  }
  if (dot) os << "}\n";
  return os.str();
}

}  // namespace faclift

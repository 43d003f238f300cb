#pragma once

// Finite groups backed by explicit multiplication tables.
//
// Elements are integer indices 0..n-1 with index 0 always the identity.
// Built-in families (cyclic, dihedral, direct products) come with canonical
// element labels:
//   cyclic Z_n:    e, g, g^2, ..., g^{n-1}
//   dihedral D_n:  e, a, a^2, ..., a^{n-1}, b, a*b, a^2*b, ...  (order 2n)
//   products:      tuples (x,y,...) over the factors' labels
// Table-backed groups use whatever labels the caller supplies.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "faclift/error.hpp"

namespace faclift {

enum class GroupFamily { Cyclic, Dihedral, Product, Table };

struct FamilySpec {
  GroupFamily family = GroupFamily::Table;
  // Cyclic: group order n. Dihedral: rotation order n (group order 2n).
  int n = 0;
  std::vector<FamilySpec> factors;            // product
  std::vector<std::string> labels;            // table
  std::vector<std::vector<int>> table;        // table, row-major indices

  static FamilySpec cyclic(int n) {
    FamilySpec s;
    s.family = GroupFamily::Cyclic;
    s.n = n;
    return s;
  }
  static FamilySpec dihedral(int n) {
    FamilySpec s;
    s.family = GroupFamily::Dihedral;
    s.n = n;
    return s;
  }
  static FamilySpec product(std::vector<FamilySpec> factors) {
    FamilySpec s;
    s.family = GroupFamily::Product;
    s.factors = std::move(factors);
    return s;
  }
  static FamilySpec from_table(std::vector<std::string> labels,
                               std::vector<std::vector<int>> table) {
    FamilySpec s;
    s.family = GroupFamily::Table;
    s.labels = std::move(labels);
    s.table = std::move(table);
    return s;
  }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mult_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  int power(int g, long long k) const {
    if (k < 0) return power(inv(g), -k);
    int acc = 0, base = g;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  bool is_involution(int g) const { return mul(g, g) == 0; }

  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> index_of(const std::string& label) const {
    auto it = lookup_.find(label);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  int require(const std::string& label) const {
    auto idx = index_of(label);
    if (!idx) fail(Errc::UnknownElementLabel, "'" + label + "' is not an element here");
    return *idx;
  }

  const FamilySpec& family() const { return family_; }

  // Conjugacy classes in ascending order of their minimal element.
  std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(n_, 0);
    for (int g = 0; g < n_; ++g) {
      if (seen[g]) continue;
      std::vector<int> cls;
      for (int h = 0; h < n_; ++h) {
        int c = mul(mul(h, g), inv(h));
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  friend GroupPtr make_group(const FamilySpec&, int);

 private:
  FiniteGroup() = default;

  void build_lookup() {
    for (int i = 0; i < n_; ++i) {
      auto [it, fresh] = lookup_.emplace(labels_[i], i);
      if (!fresh) fail(Errc::LabelCollision, "duplicate element label '" + labels_[i] + "'");
    }
    for (auto& [alias, idx] : aliases_) lookup_.emplace(alias, idx);
  }

  // Group axioms, exhaustively. Quadratic and cubic scans are fine at the
  // order cap this library enforces.
  void validate() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int ab = mul(a, b);
        if (ab < 0 || ab >= n_) fail(Errc::ParseError, "table entry out of range");
      }
    for (int a = 0; a < n_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a)
        fail(Errc::NoIdentity, "element 0 is not a two-sided identity");
    }
    // Latin square: rows and columns are permutations.
    std::vector<char> hit(n_);
    for (int a = 0; a < n_; ++a) {
      std::fill(hit.begin(), hit.end(), 0);
      for (int b = 0; b < n_; ++b) hit[mul(a, b)] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        fail(Errc::BadInverse, "row " + std::to_string(a) + " is not a permutation");
      std::fill(hit.begin(), hit.end(), 0);
      for (int b = 0; b < n_; ++b) hit[mul(b, a)] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        fail(Errc::BadInverse, "column " + std::to_string(a) + " is not a permutation");
    }
    for (int a = 0; a < n_; ++a) {
      if (mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0)
        fail(Errc::BadInverse, "no inverse for element " + std::to_string(a));
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail(Errc::NonAssociative,
                 "(" + labels_[a] + "*" + labels_[b] + ")*" + labels_[c] + " differs");
  }

  void compute_inverses() {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inv_[a] = b;
          break;
        }
      if (inv_[a] == -1) fail(Errc::BadInverse, "no inverse for element " + std::to_string(a));
    }
  }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> mult_;  // n*n row-major
  std::vector<int> inv_;
  FamilySpec family_;
  std::map<std::string, int> lookup_;
  std::vector<std::pair<std::string, int>> aliases_;
};

namespace detail {

inline std::string cyclic_label(int k) {
  if (k == 0) return "e";
  if (k == 1) return "g";
  return "g^" + std::to_string(k);
}

inline std::string dihedral_label(int i, bool flip) {
  if (!flip) return i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
  if (i == 0) return "b";
  if (i == 1) return "a*b";
  return "a^" + std::to_string(i) + "*b";
}

}  // namespace detail

// Builds and validates a group from a family descriptor. `max_order` caps
// the exhaustive validation cost.
inline GroupPtr make_group(const FamilySpec& spec, int max_order = 512) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->family_ = spec;
  switch (spec.family) {
    case GroupFamily::Cyclic: {
      if (spec.n < 1) fail(Errc::InvalidArgument, "cyclic order must be >= 1");
      int n = spec.n;
      g->n_ = n;
      g->mult_.resize(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g->mult_[static_cast<size_t>(i) * n + j] = (i + j) % n;
      for (int i = 0; i < n; ++i) g->labels_.push_back(detail::cyclic_label(i));
      g->aliases_.emplace_back("g^0", 0);
      if (n > 1) g->aliases_.emplace_back("g^1", 1);
      break;
    }
    case GroupFamily::Dihedral: {
      if (spec.n < 1) fail(Errc::InvalidArgument, "dihedral parameter must be >= 1");
      int n = spec.n, order = 2 * n;
      g->n_ = order;
      g->mult_.resize(static_cast<size_t>(order) * order);
      // Element i+s*n is a^i b^s.  a^i b^s * a^j b^t = a^{i + (-1)^s j} b^{s+t}.
      auto idx = [n](int i, int s) { return ((i % n) + n) % n + s * n; };
      for (int s = 0; s < 2; ++s)
        for (int i = 0; i < n; ++i)
          for (int t = 0; t < 2; ++t)
            for (int j = 0; j < n; ++j) {
              int lhs = idx(i, s), rhs = idx(j, t);
              int k = s == 0 ? i + j : i - j;
              g->mult_[static_cast<size_t>(lhs) * order + rhs] = idx(k, s ^ t);
            }
      for (int i = 0; i < n; ++i) g->labels_.push_back(detail::dihedral_label(i, false));
      for (int i = 0; i < n; ++i) g->labels_.push_back(detail::dihedral_label(i, true));
      g->aliases_.emplace_back("a^0", 0);
      g->aliases_.emplace_back("a^0*b", n);
      if (n > 1) {
        g->aliases_.emplace_back("a^1", 1);
        g->aliases_.emplace_back("a^1*b", n + 1);
        g->aliases_.emplace_back("ab", n + 1);
      }
      for (int i = 2; i < n; ++i)
        g->aliases_.emplace_back("a^" + std::to_string(i) + "b", n + i);
      break;
    }
    case GroupFamily::Product: {
      if (spec.factors.empty()) fail(Errc::InvalidArgument, "product needs at least one factor");
      std::vector<GroupPtr> parts;
      long long total = 1;
      for (const auto& f : spec.factors) {
        parts.push_back(make_group(f, max_order));
        total *= parts.back()->order();
        if (total > max_order)
          fail(Errc::InvalidArgument, "product order exceeds cap " + std::to_string(max_order));
      }
      int n = static_cast<int>(total);
      g->n_ = n;
      // Mixed-radix element index, first factor most significant.
      auto decompose = [&](int x) {
        std::vector<int> parts_idx(parts.size());
        for (size_t f = parts.size(); f-- > 0;) {
          parts_idx[f] = x % parts[f]->order();
          x /= parts[f]->order();
        }
        return parts_idx;
      };
      g->mult_.resize(static_cast<size_t>(n) * n);
      for (int x = 0; x < n; ++x) {
        auto xs = decompose(x);
        for (int y = 0; y < n; ++y) {
          auto ys = decompose(y);
          int z = 0;
          for (size_t f = 0; f < parts.size(); ++f)
            z = z * parts[f]->order() + parts[f]->mul(xs[f], ys[f]);
          g->mult_[static_cast<size_t>(x) * n + y] = z;
        }
      }
      for (int x = 0; x < n; ++x) {
        auto xs = decompose(x);
        std::string lab = "(";
        for (size_t f = 0; f < parts.size(); ++f) {
          if (f) lab += ",";
          lab += parts[f]->label(xs[f]);
        }
        lab += ")";
        g->labels_.push_back(lab);
      }
      break;
    }
    case GroupFamily::Table: {
      int n = static_cast<int>(spec.labels.size());
      if (n < 1) fail(Errc::InvalidArgument, "table group needs at least one element");
      if (static_cast<int>(spec.table.size()) != n)
        fail(Errc::ParseError, "table must have one row per element");
      g->n_ = n;
      g->labels_ = spec.labels;
      g->mult_.resize(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(spec.table[i].size()) != n)
          fail(Errc::ParseError, "table row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) g->mult_[static_cast<size_t>(i) * n + j] = spec.table[i][j];
      }
      break;
    }
  }
  if (g->n_ > max_order)
    fail(Errc::InvalidArgument, "group order " + std::to_string(g->n_) + " exceeds cap " +
                                    std::to_string(max_order));
  g->build_lookup();
  g->compute_inverses();
  g->validate();
  return g;
}

inline GroupPtr make_cyclic(int n) { return make_group(FamilySpec::cyclic(n)); }
inline GroupPtr make_dihedral(int n) { return make_group(FamilySpec::dihedral(n)); }

// ---------------------------------------------------------------------------
// Subgroups and left cosets
// ---------------------------------------------------------------------------

class Subgroup {
 public:
  // Smallest subgroup containing `gens` (closure iteration). Empty set of
  // generators yields the trivial subgroup {e}.
  static Subgroup generate(GroupPtr group, std::vector<int> gens) {
    Subgroup h;
    h.group_ = std::move(group);
    const auto& G = *h.group_;
    for (int g : gens)
      if (g < 0 || g >= G.order()) fail(Errc::InvalidArgument, "generator index out of range");
    std::vector<char> in(G.order(), 0);
    in[0] = 1;
    std::vector<int> frontier{0};
    for (int g : gens)
      if (!in[g]) {
        in[g] = 1;
        frontier.push_back(g);
      }
    // Product closure: keep multiplying members until nothing new appears.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> members;
      for (int x = 0; x < G.order(); ++x)
        if (in[x]) members.push_back(x);
      for (int x : members)
        for (int y : members) {
          int z = G.mul(x, y);
          if (!in[z]) {
            in[z] = 1;
            grew = true;
          }
        }
    }
    for (int x = 0; x < G.order(); ++x)
      if (in[x]) h.elems_.push_back(x);
    h.mask_ = std::move(in);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    h.gens_ = std::move(gens);
    return h;
  }

  static Subgroup generate_labels(GroupPtr group, const std::vector<std::string>& labels) {
    std::vector<int> gens;
    gens.reserve(labels.size());
    for (const auto& l : labels) gens.push_back(group->require(l));
    return generate(std::move(group), std::move(gens));
  }

  static Subgroup trivial(GroupPtr group) { return generate(std::move(group), {}); }

  static Subgroup whole(GroupPtr group) {
    std::vector<int> all(group->order());
    for (int i = 0; i < group->order(); ++i) all[i] = i;
    return generate(std::move(group), std::move(all));
  }

  // Validates an explicit element set: must contain e and be closed under
  // multiplication and inversion.
  static Subgroup from_elements(GroupPtr group, std::vector<int> elems) {
    const auto& G = *group;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<char> in(G.order(), 0);
    for (int g : elems) {
      if (g < 0 || g >= G.order()) fail(Errc::InvalidArgument, "element index out of range");
      in[g] = 1;
    }
    if (elems.empty() || !in[0]) fail(Errc::NotASubgroup, "missing identity");
    for (int x : elems) {
      if (!in[G.inv(x)]) fail(Errc::NotASubgroup, "not closed under inverses");
      for (int y : elems)
        if (!in[G.mul(x, y)]) fail(Errc::NotASubgroup, "not closed under multiplication");
    }
    Subgroup h;
    h.group_ = std::move(group);
    h.elems_ = std::move(elems);
    h.mask_ = std::move(in);
    h.gens_ = h.elems_;
    return h;
  }

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int g) const { return mask_[g]; }
  const std::vector<int>& elements() const { return elems_; }
  const std::vector<int>& generators() const { return gens_; }
  int index() const { return group_->order() / size(); }

  // A short generating sequence, greedily grown; used where iterating the
  // full subgroup would be wasteful.
  std::vector<int> minimal_generators() const {
    std::vector<int> gens;
    Subgroup cur = trivial(group_);
    for (int g : elems_) {
      if (cur.contains(g)) continue;
      gens.push_back(g);
      auto withg = gens;
      cur = generate(group_, withg);
      if (cur.size() == size()) break;
    }
    return gens;
  }

  bool operator==(const Subgroup& o) const {
    return group_ == o.group_ && elems_ == o.elems_;
  }

 private:
  Subgroup() = default;
  GroupPtr group_;
  std::vector<int> elems_;
  std::vector<char> mask_;
  std::vector<int> gens_;
};

class CosetSpace {
 public:
  const Subgroup& subgroup() const { return sub_; }
  int count() const { return static_cast<int>(cosets_.size()); }
  const std::vector<int>& coset(int i) const { return cosets_[i]; }
  int coset_of(int g) const { return coset_of_[g]; }
  // Minimal element of the coset; coset 0 is the subgroup itself, so its
  // representative is the identity.
  int representative(int i) const { return reps_[i]; }

  friend CosetSpace left_cosets(const GroupPtr&, const Subgroup&);

 private:
  explicit CosetSpace(Subgroup sub) : sub_(std::move(sub)) {}
  Subgroup sub_;
  std::vector<std::vector<int>> cosets_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
};

// Partition of G into left cosets hH, ordered by minimal element, so coset 0
// always contains e.
inline CosetSpace left_cosets(const GroupPtr& G, const Subgroup& H) {
  if (H.group() != G) fail(Errc::NotASubgroup, "subgroup belongs to a different group");
  CosetSpace cs(H);
  cs.coset_of_.assign(G->order(), -1);
  for (int g = 0; g < G->order(); ++g) {
    if (cs.coset_of_[g] != -1) continue;
    std::vector<int> coset;
    coset.reserve(H.size());
    for (int h : H.elements()) coset.push_back(G->mul(g, h));
    std::sort(coset.begin(), coset.end());
    int idx = static_cast<int>(cs.cosets_.size());
    for (int x : coset) cs.coset_of_[x] = idx;
    cs.reps_.push_back(coset.front());
    cs.cosets_.push_back(std::move(coset));
  }
  return cs;
}

}  // namespace faclift

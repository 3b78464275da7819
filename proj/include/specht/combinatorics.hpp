#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace specht {

// canonical representative in 0..e-1
int mod_e(long long x, int e);

/*
 * Run parameters (e, kappa, n, m) selecting one Specht module labelled by
 * the hook bipartition ((n-m),(1^m)).  The quantum characteristic is a
 * finite integer >= 3 throughout; kappa is reduced mod e on construction.
 */
struct Params {
  int e;
  std::array<int, 2> kappa;
  int n;
  int m;

  Params(int e_, int kappa1, int kappa2, int n_, int m_);

  // kappa_2 - kappa_1 mod e; the action case analysis keys off this
  int charge_diff() const { return mod_e(kappa[1] - kappa[0], e); }

  // residue class of x relative to the charge difference: 0, 1, 2 or other
  int res_class(int x) const { return mod_e(x - (kappa[1] - kappa[0]), e); }

  Params with_m(int m_) const { return Params(e, kappa[0], kappa[1], n, m_); }

  friend bool operator==(const Params&, const Params&) = default;
};

struct Node {
  int row = 1;   // >= 1
  int col = 1;   // >= 1
  int comp = 1;  // component, 1 or 2

  friend auto operator<=>(const Node&, const Node&) = default;
};

int residue(const Node& node, const Params& params);

// A bipartition: two weakly decreasing part lists.
class Bipartition {
 public:
  Bipartition(std::vector<int> first, std::vector<int> second);

  static Bipartition hook(int n, int m);      // ((n-m),(1^m))
  static Bipartition arm_hook(int n, int m);  // ((n-m,1^m),())
  static Bipartition leg_hook(int n, int m);  // ((),(n-m,1^m))

  const std::vector<int>& component(int c) const;
  int size() const { return size_; }
  bool contains(const Node& node) const;
  // nodes in reading order: component 1 then 2, row-major
  std::vector<Node> nodes() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<int> parts_[2];
  int size_ = 0;
};

// A bijective filling of a bipartition's diagram by 1..n.
class Tableau {
 public:
  Tableau(Bipartition shape, std::vector<Node> node_of_entry);

  // entries 1..n placed down consecutive columns, left to right, in
  // components 2 then 1
  static Tableau column_initial(const Bipartition& shape);

  const Bipartition& shape() const { return shape_; }
  int size() const { return static_cast<int>(node_of_.size()); }
  Node node_of(int entry) const;
  int entry_at(const Node& node) const;

  bool is_standard() const;

  // w . t relabels entries: entry k moves to w(k); perm is one-line, 1-based
  Tableau acted_by(const std::vector<int>& perm) const;

 private:
  Bipartition shape_;
  std::vector<Node> node_of_;        // entry k at node_of_[k-1]
  std::map<Node, int> entry_at_;
};

using ResidueSeq = std::vector<int>;

std::string residue_seq_str(const ResidueSeq& seq);

// k-th slot is the residue of the node containing k
ResidueSeq residue_sequence(const Tableau& tableau, const Params& params);

/*
 * The m leg entries a_1 < ... < a_m of a standard ((n-m),(1^m))-tableau;
 * the tableau is determined by them, so this is the basis label type.
 */
class LegSet {
 public:
  LegSet() = default;
  explicit LegSet(std::vector<int> entries);

  int size() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& entries() const { return a_; }
  int at(int j) const { return a_.at(j - 1); }  // a_j, 1-based
  bool contains(int x) const;
  // position r with a_r == x, 1-based; 0 if absent
  int position_of(int x) const;
  bool valid_for(const Params& params) const;

  LegSet replaced(int from, int to) const;

  std::string str() const;

  friend auto operator<=>(const LegSet&, const LegSet&) = default;

 private:
  std::vector<int> a_;
};

// all m-subsets of {1..n} in lexicographic order; size C(n,m)
std::vector<LegSet> enumerate_standard_hook(const Params& params);

std::uint64_t binomial(int n, int k);

// closed-form residue sequence of the standard hook tableau labelled by A:
// a_j has residue kappa_2 + 1 - j, the k-th smallest element of the
// complement has residue kappa_1 + k - 1
ResidueSeq residue_sequence_hook(const Params& params, const LegSet& A);

// the standard ((n-m),(1^m))-tableau determined by A
Tableau hook_tableau(const Params& params, const LegSet& A);

/*
 * A signed product of psi generators.  Letters are listed in product
 * order, so when the word acts on a vector the rightmost letter applies
 * first.
 */
struct GenWord {
  int sign = 1;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  std::string str() const;

  friend bool operator==(const GenWord&, const GenWord&) = default;
};

// the preferred reduced expression of w_t: descending runs
// (a_1-1 .. 1)(a_2-1 .. 2)...(a_m-1 .. m)
GenWord leg_word(const LegSet& A);

enum class ShapeFamily { HookBipartition, ArmHook };

// Garnir relation words annihilating the Specht generator:
//   hook bipartition: psi_{m+i} for i = 1..n-m-1
//   arm hook:         psi_{m+i+1} for i = 1..n-m-2, plus psi_1...psi_{m+1}
std::vector<GenWord> garnir_relations(ShapeFamily family, const Params& params);

// --- permutation utilities (diagnostics; Bruhat order on reduced words) ---

// one-line image of the product s_{r_1}...s_{r_k}, 1-based
std::vector<int> word_permutation(const std::vector<int>& letters, int n);
int inversion_count(const std::vector<int>& perm);
bool word_is_reduced(const std::vector<int>& letters, int n);

// true iff some subword of w is a reduced expression for u's permutation;
// both inputs must be reduced
bool bruhat_leq(const GenWord& u, const GenWord& w, int n);

}  // namespace specht

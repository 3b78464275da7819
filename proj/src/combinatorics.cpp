#include "specht/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specht {

int mod_e(long long x, int e) {
  long long r = x % e;
  if (r < 0) r += e;
  return static_cast<int>(r);
}

Params::Params(int e_, int kappa1, int kappa2, int n_, int m_) : e(e_), n(n_), m(m_) {
  if (e < 3) throw std::invalid_argument("Params: quantum characteristic must be a finite integer >= 3");
  if (n < 1) throw std::invalid_argument("Params: n must be >= 1");
  if (m < 0 || m > n) throw std::invalid_argument("Params: m must lie in 0..n");
  kappa = {mod_e(kappa1, e), mod_e(kappa2, e)};
}

int residue(const Node& node, const Params& params) {
  if (node.row < 1 || node.col < 1 || (node.comp != 1 && node.comp != 2))
    throw std::invalid_argument("residue: malformed node");
  return mod_e(static_cast<long long>(params.kappa[node.comp - 1]) + node.col - node.row, params.e);
}

Bipartition::Bipartition(std::vector<int> first, std::vector<int> second) {
  parts_[0] = std::move(first);
  parts_[1] = std::move(second);
  for (auto& parts : parts_) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) throw std::invalid_argument("Bipartition: parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw std::invalid_argument("Bipartition: parts must be weakly decreasing");
      size_ += parts[i];
    }
  }
}

Bipartition Bipartition::hook(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("Bipartition::hook: m out of range");
  std::vector<int> arm, leg(m, 1);
  if (n - m > 0) arm.push_back(n - m);
  return Bipartition(std::move(arm), std::move(leg));
}

Bipartition Bipartition::arm_hook(int n, int m) {
  if (m < 0 || m >= n) throw std::invalid_argument("Bipartition::arm_hook: m out of range");
  std::vector<int> first{n - m};
  first.insert(first.end(), m, 1);
  return Bipartition(std::move(first), {});
}

Bipartition Bipartition::leg_hook(int n, int m) {
  if (m < 0 || m >= n) throw std::invalid_argument("Bipartition::leg_hook: m out of range");
  std::vector<int> second{n - m};
  second.insert(second.end(), m, 1);
  return Bipartition({}, std::move(second));
}

const std::vector<int>& Bipartition::component(int c) const {
  if (c != 1 && c != 2) throw std::invalid_argument("Bipartition: component must be 1 or 2");
  return parts_[c - 1];
}

bool Bipartition::contains(const Node& node) const {
  if (node.comp != 1 && node.comp != 2) return false;
  const auto& parts = parts_[node.comp - 1];
  return node.row >= 1 && node.row <= static_cast<int>(parts.size()) && node.col >= 1 &&
         node.col <= parts[node.row - 1];
}

std::vector<Node> Bipartition::nodes() const {
  std::vector<Node> out;
  out.reserve(size_);
  for (int c = 1; c <= 2; ++c) {
    const auto& parts = parts_[c - 1];
    for (int r = 1; r <= static_cast<int>(parts.size()); ++r)
      for (int j = 1; j <= parts[r - 1]; ++j) out.push_back({r, j, c});
  }
  return out;
}

Tableau::Tableau(Bipartition shape, std::vector<Node> node_of_entry)
    : shape_(std::move(shape)), node_of_(std::move(node_of_entry)) {
  if (static_cast<int>(node_of_.size()) != shape_.size())
    throw std::invalid_argument("Tableau: entry count does not match diagram size");
  for (int k = 1; k <= static_cast<int>(node_of_.size()); ++k) {
    const Node& nd = node_of_[k - 1];
    if (!shape_.contains(nd)) throw std::invalid_argument("Tableau: entry placed outside diagram");
    if (!entry_at_.emplace(nd, k).second)
      throw std::invalid_argument("Tableau: filling is not a bijection");
  }
}

Tableau Tableau::column_initial(const Bipartition& shape) {
  std::vector<Node> node_of;
  node_of.reserve(shape.size());
  for (int c = 2; c >= 1; --c) {
    const auto& parts = shape.component(c);
    if (parts.empty()) continue;
    int max_col = parts.front();
    for (int j = 1; j <= max_col; ++j)
      for (int r = 1; r <= static_cast<int>(parts.size()) && parts[r - 1] >= j; ++r)
        node_of.push_back({r, j, c});
  }
  return Tableau(shape, std::move(node_of));
}

Node Tableau::node_of(int entry) const {
  if (entry < 1 || entry > size()) throw std::out_of_range("Tableau: entry out of range");
  return node_of_[entry - 1];
}

int Tableau::entry_at(const Node& node) const {
  auto it = entry_at_.find(node);
  if (it == entry_at_.end()) throw std::out_of_range("Tableau: node not in diagram");
  return it->second;
}

bool Tableau::is_standard() const {
  for (const Node& nd : shape_.nodes()) {
    Node right{nd.row, nd.col + 1, nd.comp};
    Node below{nd.row + 1, nd.col, nd.comp};
    if (shape_.contains(right) && entry_at(nd) > entry_at(right)) return false;
    if (shape_.contains(below) && entry_at(nd) > entry_at(below)) return false;
  }
  return true;
}

Tableau Tableau::acted_by(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != size())
    throw std::invalid_argument("Tableau: permutation size mismatch");
  std::vector<Node> node_of(size(), Node{});
  for (int k = 1; k <= size(); ++k) node_of[perm[k - 1] - 1] = node_of_[k - 1];
  return Tableau(shape_, std::move(node_of));
}

std::string residue_seq_str(const ResidueSeq& seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ',';
    os << seq[i];
  }
  os << ')';
  return os.str();
}

ResidueSeq residue_sequence(const Tableau& tableau, const Params& params) {
  ResidueSeq seq(tableau.size());
  for (int k = 1; k <= tableau.size(); ++k) seq[k - 1] = residue(tableau.node_of(k), params);
  return seq;
}

LegSet::LegSet(std::vector<int> entries) : a_(std::move(entries)) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 1) throw std::invalid_argument("LegSet: entries must be positive");
    if (i > 0 && a_[i] <= a_[i - 1])
      throw std::invalid_argument("LegSet: entries must be strictly increasing");
  }
}

bool LegSet::contains(int x) const {
  return std::binary_search(a_.begin(), a_.end(), x);
}

int LegSet::position_of(int x) const {
  auto it = std::lower_bound(a_.begin(), a_.end(), x);
  if (it == a_.end() || *it != x) return 0;
  return static_cast<int>(it - a_.begin()) + 1;
}

bool LegSet::valid_for(const Params& params) const {
  if (size() != params.m) return false;
  return a_.empty() || (a_.front() >= 1 && a_.back() <= params.n);
}

LegSet LegSet::replaced(int from, int to) const {
  std::vector<int> out;
  out.reserve(a_.size());
  bool found = false;
  for (int x : a_) {
    if (x == from && !found) {
      found = true;
      continue;
    }
    out.push_back(x);
  }
  if (!found) throw std::invalid_argument("LegSet::replaced: element not present");
  auto it = std::lower_bound(out.begin(), out.end(), to);
  if (it != out.end() && *it == to)
    throw std::invalid_argument("LegSet::replaced: target already present");
  out.insert(it, to);
  return LegSet(std::move(out));
}

std::string LegSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) os << ',';
    os << a_[i];
  }
  os << '}';
  return os.str();
}

std::vector<LegSet> enumerate_standard_hook(const Params& params) {
  std::vector<LegSet> out;
  std::vector<int> cur(params.m);
  for (int j = 0; j < params.m; ++j) cur[j] = j + 1;
  if (params.m == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  while (true) {
    out.emplace_back(cur);
    int j = params.m - 1;
    while (j >= 0 && cur[j] == params.n - (params.m - 1 - j)) --j;
    if (j < 0) break;
    ++cur[j];
    for (int k = j + 1; k < params.m; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ResidueSeq residue_sequence_hook(const Params& params, const LegSet& A) {
  if (!A.valid_for(params)) throw std::invalid_argument("residue_sequence_hook: invalid leg set");
  ResidueSeq seq(params.n, -1);
  for (int j = 1; j <= params.m; ++j)
    seq[A.at(j) - 1] = mod_e(static_cast<long long>(params.kappa[1]) + 1 - j, params.e);
  int k = 0;
  for (int x = 1; x <= params.n; ++x) {
    if (seq[x - 1] >= 0) continue;
    seq[x - 1] = mod_e(static_cast<long long>(params.kappa[0]) + k, params.e);
    ++k;
  }
  return seq;
}

Tableau hook_tableau(const Params& params, const LegSet& A) {
  if (!A.valid_for(params)) throw std::invalid_argument("hook_tableau: invalid leg set");
  std::vector<Node> node_of(params.n, Node{});
  for (int j = 1; j <= params.m; ++j) node_of[A.at(j) - 1] = {j, 1, 2};
  int col = 0;
  for (int x = 1; x <= params.n; ++x) {
    if (node_of[x - 1].comp == 2 && node_of[x - 1].col == 1 && A.contains(x)) continue;
    node_of[x - 1] = {1, ++col, 1};
  }
  return Tableau(Bipartition::hook(params.n, params.m), std::move(node_of));
}

std::string GenWord::str() const {
  std::ostringstream os;
  if (sign < 0) os << '-';
  if (letters.empty()) {
    os << "1";
    return os.str();
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << '.';
    os << "psi" << letters[i];
  }
  return os.str();
}

GenWord leg_word(const LegSet& A) {
  GenWord w;
  for (int j = 1; j <= A.size(); ++j)
    for (int r = A.at(j) - 1; r >= j; --r) w.letters.push_back(r);
  return w;
}

std::vector<GenWord> garnir_relations(ShapeFamily family, const Params& params) {
  std::vector<GenWord> out;
  const int n = params.n, m = params.m;
  switch (family) {
    case ShapeFamily::HookBipartition:
      for (int i = 1; i <= n - m - 1; ++i) out.push_back({1, {m + i}});
      return out;
    case ShapeFamily::ArmHook: {
      if (m >= n) throw std::invalid_argument("garnir_relations: arm hook needs m < n");
      for (int i = 1; i <= n - m - 2; ++i) out.push_back({1, {m + i + 1}});
      // the top-left Garnir node (1,1,1) exists only when the arm has a
      // second column
      if (n - m >= 2) {
        GenWord head;
        for (int r = 1; r <= m + 1; ++r) head.letters.push_back(r);
        out.push_back(std::move(head));
      }
      return out;
    }
  }
  throw std::invalid_argument("garnir_relations: unsupported shape family");
}

std::vector<int> word_permutation(const std::vector<int>& letters, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  // perm = s_{r_1} ... s_{r_k} as a function: apply letters right to left
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    int r = *it;
    if (r < 1 || r >= n) throw std::invalid_argument("word_permutation: letter out of range");
    // postcompose with s_r: swap the images of r and r+1? No: s_r acts on
    // values here, so swap occurrences of r and r+1 in the one-line word.
    for (int i = 0; i < n; ++i) {
      if (perm[i] == r)
        perm[i] = r + 1;
      else if (perm[i] == r + 1)
        perm[i] = r;
    }
  }
  return perm;
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

bool word_is_reduced(const std::vector<int>& letters, int n) {
  return inversion_count(word_permutation(letters, n)) == static_cast<int>(letters.size());
}

namespace {

// length decreases exactly when s_r pi has fewer inversions, i.e. when
// r+1 appears before r... for left multiplication s_r * pi the criterion is
// pi^{-1}(r) > pi^{-1}(r+1).
bool left_descent(const std::vector<int>& perm, int r) {
  int pos_r = -1, pos_r1 = -1;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if (perm[i] == r) pos_r = i;
    if (perm[i] == r + 1) pos_r1 = i;
  }
  return pos_r > pos_r1;
}

std::vector<int> left_multiply(std::vector<int> perm, int r) {
  for (auto& v : perm) {
    if (v == r)
      v = r + 1;
    else if (v == r + 1)
      v = r;
  }
  return perm;
}

bool is_identity(const std::vector<int>& perm) {
  for (int i = 0; i < static_cast<int>(perm.size()); ++i)
    if (perm[i] != i + 1) return false;
  return true;
}

// brute-force subword search with memoisation on (position, remaining)
bool subword_reaches(const std::vector<int>& w, std::size_t i, const std::vector<int>& target,
                     std::map<std::pair<std::size_t, std::vector<int>>, bool>& memo) {
  if (is_identity(target)) return true;
  if (i == w.size()) return false;
  auto key = std::make_pair(i, target);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = subword_reaches(w, i + 1, target, memo);
  if (!ok && left_descent(target, w[i]))
    ok = subword_reaches(w, i + 1, left_multiply(target, w[i]), memo);
  memo[key] = ok;
  return ok;
}

}  // namespace

bool bruhat_leq(const GenWord& u, const GenWord& w, int n) {
  if (!word_is_reduced(u.letters, n) || !word_is_reduced(w.letters, n))
    throw std::invalid_argument("bruhat_leq: inputs must be reduced words");
  std::vector<int> target = word_permutation(u.letters, n);
  std::map<std::pair<std::size_t, std::vector<int>>, bool> memo;
  return subword_reaches(w.letters, 0, target, memo);
}

}  // namespace specht

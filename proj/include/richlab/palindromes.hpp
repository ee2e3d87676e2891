#pragma once

// Incremental pseudopalindromic trees (one per antimorphism) and an online G-defect tracker.

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "richlab/symmetry.hpp"
#include "richlab/word.hpp"

namespace richlab {

/// Eertree for Psi-palindromes. Node 0 is the length -1 root, node 1 the empty word.
class PseudoPalindromeTree {
 public:
  static constexpr int imaginary = 0;
  static constexpr int empty_root = 1;

  struct Node {
    int len = 0;
    int link = imaginary;
    int parent = imaginary;
    Letter edge = 0;            // outer right letter added to parent
    std::size_t first_end = 0;  // end index (inclusive) of the first occurrence
  };

  explicit PseudoPalindromeTree(SymmetryElement psi) : psi_(psi) {
    if (!psi_.is_antimorphism()) throw error("pseudopalindromic tree needs an antimorphism, got " + psi_.name());
    nodes_.push_back({-1, imaginary, imaginary, 0, 0});
    nodes_.push_back({0, imaginary, imaginary, 0, 0});
  }

  [[nodiscard]] const SymmetryElement& antimorphism() const noexcept { return psi_; }

  /// Appends c; returns the new node if the longest Psi-palindromic suffix is new, else -1.
  int push(Letter c) {
    text_.push_back(c);
    Letter const mate = psi_(c);
    int v = last_;
    while (!fits(v, mate)) {
      if (v == imaginary) {
        last_ = empty_root;
        return -1;
      }
      v = nodes_[v].link;
    }
    std::uint64_t const key = child_key(v, c);
    if (auto it = children_.find(key); it != children_.end()) {
      last_ = it->second;
      return -1;
    }
    Node node;
    node.len = nodes_[v].len + 2;
    node.parent = v;
    node.edge = c;
    node.first_end = text_.size() - 1;
    node.link = empty_root;
    if (node.len > 1) {
      int u = nodes_[v].link;
      while (true) {
        if (fits(u, mate)) {
          auto it = children_.find(child_key(u, c));
          if (it != children_.end()) node.link = it->second;
          break;
        }
        if (u == imaginary) break;
        u = nodes_[u].link;
      }
    }
    int const id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    children_.emplace(key, id);
    last_ = id;
    return id;
  }

  void push(const Word& w) {
    for (Letter a : w) push(a);
  }

  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  /// Number of distinct nonempty Psi-palindromic factors seen so far.
  [[nodiscard]] std::size_t distinct() const noexcept { return nodes_.size() - 2; }
  [[nodiscard]] int longest_suffix() const noexcept { return last_; }
  [[nodiscard]] std::size_t text_size() const noexcept { return text_.size(); }

  [[nodiscard]] std::vector<Letter> letters(int id) const {
    const Node& n = node(id);
    if (n.len <= 0) return {};
    std::size_t const start = n.first_end + 1 - static_cast<std::size_t>(n.len);
    return {text_.begin() + static_cast<std::ptrdiff_t>(start),
            text_.begin() + static_cast<std::ptrdiff_t>(n.first_end + 1)};
  }

 private:
  bool fits(int v, Letter mate) const {
    long long const i = static_cast<long long>(text_.size()) - 1;
    long long const j = i - nodes_[v].len - 1;
    return j >= 0 && text_[static_cast<std::size_t>(j)] == mate;
  }
  static std::uint64_t child_key(int v, Letter c) { return (static_cast<std::uint64_t>(v) << 8) | c; }

  SymmetryElement psi_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, int> children_;
  std::vector<Letter> text_;
  int last_ = empty_root;
};

/// Online D^G for the growing word: one tree per antimorphism of G and a trie of canonical orbit forms.
class DefectTracker {
 public:
  explicit DefectTracker(SymmetryGroup g) : group_(std::move(g)), A_(group_.alphabet()) {
    unsigned const m = A_.modulus();
    auto const shifts = group_.morphism_shifts();
    auto const anti = group_.antimorphisms();
    ystar_.resize(m);
    fixable_.resize(m);
    letter_orbit_.resize(m);
    for (unsigned a = 0; a < m; ++a) {
      Letter best = 0;
      unsigned best_val = m;
      for (Letter y : shifts) {
        unsigned const val = A_.add(a, y);
        if (val < best_val) best_val = val, best = y;
      }
      ystar_[a] = best;
      fixable_[a] = false;
      for (const auto& p : anti) fixable_[a] = fixable_[a] || p(static_cast<Letter>(a)) == a;
      Letter key = static_cast<Letter>(a);
      for (const auto& e : group_.elements()) key = std::min(key, e(static_cast<Letter>(a)));
      letter_orbit_[a] = key;
    }
    for (const auto& p : anti) {
      trees_.emplace_back(p);
      canon_.push_back({{odd_root, 0}, {even_root, 0}});
    }
    trie_.push_back({});  // odd root
    trie_.push_back({});  // even root
    seen_letter_.assign(m, false);
  }

  [[nodiscard]] const SymmetryGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::size_t size() const noexcept { return length_; }

  void push(Letter c) {
    if (!A_.contains(c)) throw error("letter outside the tracker alphabet");
    ++length_;
    if (!seen_letter_[c]) {
      seen_letter_[c] = true;
      if (!fixable_[c]) unfixed_orbits_.insert(letter_orbit_[c]);
    }
    for (std::size_t t = 0; t < trees_.size(); ++t) {
      int const id = trees_[t].push(c);
      if (id < 0) continue;
      const auto& node = trees_[t].node(id);
      Canon const parent = canon_[t][static_cast<std::size_t>(node.parent)];
      Canon cur;
      std::uint32_t step;
      if (node.parent == PseudoPalindromeTree::imaginary) {
        cur.ystar = ystar_[c];
        cur.trie = odd_root;
        step = A_.add(c, cur.ystar);
      } else if (node.parent == PseudoPalindromeTree::empty_root) {
        cur.ystar = ystar_[c];
        cur.trie = even_root;
        Letter const x = trees_[t].antimorphism().shift();
        step = 256u + (static_cast<std::uint32_t>(A_.add(x, 2 * static_cast<long long>(cur.ystar))) << 8) +
               A_.add(c, cur.ystar);
      } else {
        cur.ystar = parent.ystar;
        cur.trie = parent.trie;
        step = A_.add(c, cur.ystar);
      }
      std::uint64_t const key = (static_cast<std::uint64_t>(cur.trie) << 17) | step;
      auto [it, inserted] = trie_children_.try_emplace(key, static_cast<int>(trie_.size()));
      if (inserted) {
        trie_.push_back({static_cast<int>(t), id});
        ++orbit_count_;
        orbit_by_length_.resize(std::max<std::size_t>(orbit_by_length_.size(), node.len + 1), 0);
        ++orbit_by_length_[static_cast<std::size_t>(node.len)];
      }
      cur.trie = it->second;
      canon_[t].push_back(cur);
    }
  }

  void push(const Word& w) {
    for (Letter a : w) push(a);
  }

  /// |w| + 1 - #Pal^G(w) - gamma_G(w) for the word pushed so far.
  [[nodiscard]] std::size_t defect() const noexcept {
    return length_ + 1 - (orbit_count_ + 1) - unfixed_orbits_.size();
  }
  /// Number of G-palindromic orbits, the orbit of the empty word included.
  [[nodiscard]] std::size_t orbit_count() const noexcept { return orbit_count_ + 1; }
  [[nodiscard]] std::size_t gamma() const noexcept { return unfixed_orbits_.size(); }
  [[nodiscard]] const std::vector<PseudoPalindromeTree>& trees() const noexcept { return trees_; }

  /// One occurring G-palindrome per orbit, the empty word first.
  [[nodiscard]] std::vector<Word> orbit_witnesses() const {
    std::vector<Word> out{Word(A_)};
    for (std::size_t i = 2; i < trie_.size(); ++i) {
      const auto& ref = trie_[i];
      out.emplace_back(A_, trees_[static_cast<std::size_t>(ref.tree)].letters(ref.node));
    }
    return out;
  }

  /// Orbits of nonempty G-palindromes by length; index 0 unused.
  [[nodiscard]] std::vector<std::size_t> orbits_by_length(std::size_t n_max) const {
    std::vector<std::size_t> out(n_max + 1, 0);
    for (std::size_t n = 1; n <= n_max && n < orbit_by_length_.size(); ++n) out[n] = orbit_by_length_[n];
    return out;
  }

 private:
  static constexpr int odd_root = 0;
  static constexpr int even_root = 1;

  struct Canon {
    int trie = 0;
    Letter ystar = 0;
  };
  struct TrieRef {
    int tree = -1;
    int node = -1;
  };

  SymmetryGroup group_;
  Alphabet A_;
  std::vector<Letter> ystar_;
  std::vector<bool> fixable_;
  std::vector<Letter> letter_orbit_;
  std::vector<bool> seen_letter_;
  std::unordered_set<Letter> unfixed_orbits_;
  std::vector<PseudoPalindromeTree> trees_;
  std::vector<std::vector<Canon>> canon_;
  std::vector<TrieRef> trie_;
  std::unordered_map<std::uint64_t, int> trie_children_;
  std::vector<std::size_t> orbit_by_length_;
  std::size_t orbit_count_ = 0;
  std::size_t length_ = 0;
};

/// Pal^Psi(w), the empty word included, in shortlex order.
inline std::vector<Word> pal_sets(const Word& w, const SymmetryElement& psi) {
  require_same_alphabet(w.alphabet(), psi.alphabet());
  PseudoPalindromeTree tree(psi);
  tree.push(w);
  std::vector<Word> out{Word(w.alphabet())};
  for (int id = 2; id < static_cast<int>(tree.nodes().size()); ++id) out.emplace_back(w.alphabet(), tree.letters(id));
  sort_shortlex(out);
  return out;
}

/// Pal^G(w) as least orbit representatives, in shortlex order.
inline std::vector<Word> pal_orbits(const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  DefectTracker tr(g);
  tr.push(w);
  std::vector<Word> out;
  for (const auto& p : tr.orbit_witnesses()) out.push_back(orbit_representative(p, g));
  sort_shortlex(out);
  return out;
}

inline std::size_t defect(const Word& w, const SymmetryGroup& g) {
  require_same_alphabet(w.alphabet(), g.alphabet());
  DefectTracker tr(g);
  tr.push(w);
  return tr.defect();
}

/// D^Psi(w) = |w| + 1 - gamma_Psi(w) - #Pal^Psi(w).
inline std::size_t psi_defect(const Word& w, const SymmetryElement& psi) {
  PseudoPalindromeTree tree(psi);
  tree.push(w);
  return w.size() + 1 - gamma_psi(w, psi) - (tree.distinct() + 1);
}

/// counts[n] = number of distinct Psi-palindromic factors of length n, for n = 0..n_max.
inline std::vector<std::size_t> count_by_length(const PseudoPalindromeTree& tree, std::size_t n_max) {
  std::vector<std::size_t> counts(n_max + 1, 0);
  counts[0] = 1;
  for (std::size_t id = 2; id < tree.nodes().size(); ++id) {
    auto const len = static_cast<std::size_t>(tree.nodes()[id].len);
    if (len <= n_max) ++counts[len];
  }
  return counts;
}

inline std::vector<std::size_t> count_by_length(const Word& w, const SymmetryElement& psi, std::size_t n_max) {
  PseudoPalindromeTree tree(psi);
  tree.push(w);
  return count_by_length(tree, n_max);
}

}  // namespace richlab

#include "trid/clique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace trid {

namespace {

using Word = std::uint64_t;

class Bitset {
 public:
  explicit Bitset(Index bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(Index i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(Index i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
  bool test(Index i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Index first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Index>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

 private:
  std::vector<Word> words_;
};

// Vertices are relabelled 0..v-1 in search order; bitsets live in that order.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : v_(g.vertex_count()), order_(v_) {
    std::iota(order_.begin(), order_.end(), Index{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Index a, Index b) { return g.degree(a) > g.degree(b); });
    std::vector<Index> pos(v_);
    for (Index i = 0; i < v_; ++i) pos[order_[i]] = i;
    adj_.assign(v_, Bitset(v_));
    non_adj_.assign(v_, Bitset(v_));
    for (Index i = 0; i < v_; ++i)
      for (auto w : g.neighbors(order_[i])) adj_[i].set(pos[w]);
    for (Index i = 0; i < v_; ++i)
      for (Index j = 0; j < v_; ++j)
        if (!adj_[i].test(j)) non_adj_[i].set(j);
  }

  std::vector<Index> run() {
    Bitset all(v_);
    for (Index i = 0; i < v_; ++i) all.set(i);
    std::vector<Index> current;
    expand(current, all);
    std::vector<Index> out;
    for (Index i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Greedy sequential colouring of the candidate set: vertices in colour
  // class order, each with the number of colours used so far.
  void colour(const Bitset& p, std::vector<Index>& verts, std::vector<Index>& bounds) const {
    Bitset uncoloured = p;
    Index c = 0;
    while (!uncoloured.none()) {
      ++c;
      Bitset q = uncoloured;
      while (!q.none()) {
        const Index first = q.first();
        q.reset(first);
        uncoloured.reset(first);
        verts.push_back(first);
        bounds.push_back(c);
        q = q & non_adj_[first];
      }
    }
  }

  void expand(std::vector<Index>& current, Bitset p) {
    std::vector<Index> verts, bounds;
    colour(p, verts, bounds);
    for (Index idx = static_cast<Index>(verts.size()) - 1; idx >= 0; --idx) {
      if (static_cast<Index>(current.size()) + bounds[idx] <=
          static_cast<Index>(best_.size()))
        return;
      const Index u = verts[idx];
      current.push_back(u);
      Bitset next = p & adj_[u];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      p.reset(u);
    }
  }

  Index v_;
  std::vector<Index> order_;
  std::vector<Bitset> adj_;
  std::vector<Bitset> non_adj_;
  std::vector<Index> best_;
};

}  // namespace

std::vector<Index> max_clique_exact(const Graph& g, const Caps& caps) {
  require_within(g.vertex_count(), caps.clique_cap, "clique search vertex count");
  if (g.vertex_count() == 0) return {};
  auto clique = CliqueSearch(g).run();
  if (!is_clique(g, clique)) throw std::logic_error("clique search returned a non-clique");
  return clique;
}

}  // namespace trid

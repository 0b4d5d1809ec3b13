#include "alpharad/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "alpharad/graph_io.hpp"

namespace alpharad {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

// Stable colour refinement. Colours are renumbered by sorting signatures, so
// the resulting ordered partition is an isomorphism invariant.
std::vector<std::size_t> refine(const std::vector<Mask>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<std::size_t>(std::popcount(rows[v]));

  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::size_t> around;
      for (Mask m = rows[v]; m != 0; m &= m - 1) around.push_back(colour[std::countr_zero(m)]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
      index.emplace(sig[v], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : index) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = index[sig[v]];
    if (index.size() == classes) break;
    classes = index.size();
  }
  return colour;
}

class Search {
 public:
  explicit Search(const std::vector<Mask>& rows) : rows_(rows), n_(rows.size()) {
    auto colour = refine(rows_);
    std::vector<Vertex> by_colour(n_);
    for (Vertex v = 0; v < n_; ++v) by_colour[v] = v;
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    cell_mask_.resize(n_);
    for (std::size_t pos = 0; pos < n_; ++pos) {
      Mask m = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (colour[v] == colour[by_colour[pos]]) m |= bit(v);
      cell_mask_[pos] = m;
    }
    placed_.resize(n_);
    cur_.resize(n_);
    less_.resize(n_);
  }

  std::vector<Vertex> run() {
    dfs(0, 0);
    return best_order_;
  }

 private:
  bool twins(Vertex a, Vertex b) const { return ((rows_[a] ^ rows_[b]) & ~(bit(a) | bit(b))) == 0; }

  void dfs(std::size_t k, Mask used) {
    if (k == n_) {
      bool better = !have_best_ || (k > 0 && less_[k - 1]);
      if (better) {
        best_ = cur_;
        best_order_ = placed_;
        have_best_ = true;
        std::fill(less_.begin(), less_.end(), false);
      }
      return;
    }
    Mask tried = 0;
    for (Mask cand = cell_mask_[k] & ~used; cand != 0; cand &= cand - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(cand));
      bool duplicate = false;
      for (Mask t = tried; t != 0; t &= t - 1) {
        if (twins(static_cast<Vertex>(std::countr_zero(t)), v)) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      tried |= bit(v);

      Mask col = 0;
      for (std::size_t i = 0; i < k; ++i) col = (col << 1) | ((rows_[placed_[i]] >> v) & 1U);

      const bool prefix_less = !have_best_ || (k > 0 && less_[k - 1]);
      if (prefix_less) {
        less_[k] = true;
      } else {
        if (col > best_[k]) continue;
        less_[k] = col < best_[k];
      }
      cur_[k] = col;
      placed_[k] = v;
      dfs(k + 1, used | bit(v));
    }
  }

  const std::vector<Mask>& rows_;
  std::size_t n_;
  std::vector<Mask> cell_mask_;
  std::vector<Vertex> placed_;
  std::vector<Mask> cur_;
  std::vector<Mask> best_;
  std::vector<char> less_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 64) throw std::invalid_argument("canonical_labeling supports order <= 64");
  std::vector<Mask> rows(n);
  for (Vertex v = 0; v < n; ++v) rows[v] = g.row_mask(v);

  CanonicalLabeling out;
  out.order = Search(rows).run();
  std::vector<Vertex> position(n);
  for (std::size_t pos = 0; pos < n; ++pos) position[out.order[pos]] = pos;
  out.graph = relabel(g, position);
  return out;
}

Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace alpharad

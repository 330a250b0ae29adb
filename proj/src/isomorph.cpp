#include "joinlat/isomorph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "joinlat/errors.hpp"

namespace joinlat {

namespace {

struct Adjacency {
  std::vector<std::vector<std::uint32_t>> out, in;

  explicit Adjacency(std::size_t n) : out(n), in(n) {}

  void add_rows(const std::vector<BitSet> &rows, std::size_t offset) {
    for (std::size_t a = 0; a < rows.size(); ++a)
      rows[a].for_each([&](std::size_t b) {
        out[offset + a].push_back(static_cast<std::uint32_t>(offset + b));
        in[offset + b].push_back(static_cast<std::uint32_t>(offset + a));
      });
  }
};

std::size_t normalize(std::vector<std::size_t> &colors) {
  auto values = colors;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto &c : colors)
    c = static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  return values.size();
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
// New colours are ranks of sorted signatures, so the result does not depend
// on vertex numbering.
void refine(const Adjacency &adj, std::vector<std::size_t> &colors) {
  const std::size_t n = colors.size();
  std::size_t classes = normalize(colors);
  std::vector<std::vector<std::size_t>> sig(n);
  std::vector<std::size_t> order(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      auto &s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      std::size_t mark = s.size();
      for (auto w : adj.out[v]) s.push_back(colors[w]);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
      s.push_back(std::numeric_limits<std::size_t>::max());
      mark = s.size();
      for (auto w : adj.in[v]) s.push_back(colors[w]);
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i && sig[order[i]] != sig[order[i - 1]]) ++rank;
      colors[order[i]] = rank;
    }
    const std::size_t next = n ? rank + 1 : 0;
    if (next == classes) return;
    classes = next;
  }
}

std::vector<std::size_t> individualize(const std::vector<std::size_t> &colors,
                                       std::initializer_list<std::size_t> chosen) {
  std::vector<std::size_t> out(colors.size());
  for (std::size_t x = 0; x < colors.size(); ++x) out[x] = 2 * colors[x] + 1;
  for (auto v : chosen) out[v] = 2 * colors[v];
  return out;
}

class BudgetCounter {
public:
  explicit BudgetCounter(std::size_t budget) : budget_(budget) {}
  void tick() {
    if (++visited_ > budget_)
      throw ResourceError("isomorphism search exceeded its budget of " + std::to_string(budget_) +
                          " nodes");
  }

private:
  std::size_t budget_, visited_ = 0;
};

// ---------------------------------------------------------------------------
// Joint search over the disjoint union a + b.

class JointSearch {
public:
  JointSearch(const ColoredDigraph &a, const ColoredDigraph &b, std::size_t budget)
      : na_(a.size()), adj_(a.size() + b.size()), budget_(budget) {
    adj_.add_rows(a.out, 0);
    adj_.add_rows(b.out, na_);
    colors_ = a.colors;
    colors_.insert(colors_.end(), b.colors.begin(), b.colors.end());
    a_ = &a;
    b_ = &b;
  }

  std::optional<std::vector<std::size_t>> run() { return search(colors_); }

private:
  std::optional<std::vector<std::size_t>> search(std::vector<std::size_t> colors) {
    budget_.tick();
    refine(adj_, colors);
    const std::size_t n = colors.size();
    std::size_t classes = 0;
    for (auto c : colors) classes = std::max(classes, c + 1);
    std::vector<std::size_t> count_a(classes, 0), count_b(classes, 0);
    for (std::size_t x = 0; x < n; ++x) ++(x < na_ ? count_a : count_b)[colors[x]];
    if (count_a != count_b) return std::nullopt;

    // Largest cell first: in subspace lattices the smallest cells keep
    // individualizing collinear points, which refinement cannot separate.
    std::size_t target = classes;
    for (std::size_t c = 0; c < classes; ++c)
      if (count_a[c] > 1 && (target == classes || count_a[c] > count_a[target])) target = c;

    if (target == classes) {
      std::vector<std::size_t> b_of_color(classes);
      for (std::size_t x = na_; x < n; ++x) b_of_color[colors[x]] = x - na_;
      std::vector<std::size_t> witness(na_);
      for (std::size_t x = 0; x < na_; ++x) witness[x] = b_of_color[colors[x]];
      if (!replay(witness)) return std::nullopt;
      return witness;
    }

    std::size_t v = 0;
    while (colors[v] != target) ++v;
    for (std::size_t w = na_; w < n; ++w) {
      if (colors[w] != target) continue;
      if (auto found = search(individualize(colors, {v, w}))) return found;
    }
    return std::nullopt;
  }

  bool replay(const std::vector<std::size_t> &witness) const {
    for (std::size_t x = 0; x < na_; ++x) {
      if (a_->colors[x] != b_->colors[witness[x]]) return false;
      if (a_->out[x].count() != b_->out[witness[x]].count()) return false;
      bool ok = true;
      a_->out[x].for_each([&](std::size_t y) {
        if (!b_->out[witness[x]].test(witness[y])) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  std::size_t na_;
  Adjacency adj_;
  BudgetCounter budget_;
  std::vector<std::size_t> colors_;
  const ColoredDigraph *a_ = nullptr;
  const ColoredDigraph *b_ = nullptr;
};

// ---------------------------------------------------------------------------
// Canonical labelling with automorphism pruning.

class CanonicalSearch {
public:
  CanonicalSearch(const JoinGraph &g, std::vector<std::size_t> colors, std::size_t budget)
      : g_(g), n_(g.vertex_count()), adj_(g.vertex_count()), budget_(budget),
        colors_(std::move(colors)) {
    adj_.add_rows(g.adjacency, 0);
  }

  /// label[v] of the best leaf; labels respect the initial color order.
  std::vector<std::size_t> run() {
    if (n_ == 0) return {};
    search(colors_);
    return best_label_;
  }

private:
  static constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

  std::string certificate(const std::vector<std::size_t> &label) const {
    std::vector<std::size_t> vertex_of(n_);
    for (std::size_t v = 0; v < n_; ++v) vertex_of[label[v]] = v;
    std::string cert(4, '\0');
    for (int k = 0; k < 4; ++k) cert[k] = static_cast<char>((n_ >> (8 * (3 - k))) & 0xff);
    unsigned char byte = 0;
    int bits = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        byte = static_cast<unsigned char>((byte << 1) | g_.adjacent(vertex_of[i], vertex_of[j]));
        if (++bits == 8) {
          cert.push_back(static_cast<char>(byte));
          byte = 0;
          bits = 0;
        }
      }
    if (bits) cert.push_back(static_cast<char>(byte << (8 - bits)));
    return cert;
  }

  // Automorphism taking the vertex labelled l in `from` to the vertex
  // labelled l in `to`.
  std::vector<std::size_t> automorphism(const std::vector<std::size_t> &from,
                                        const std::vector<std::size_t> &to) const {
    std::vector<std::size_t> vertex_of(n_), gamma(n_);
    for (std::size_t v = 0; v < n_; ++v) vertex_of[to[v]] = v;
    for (std::size_t v = 0; v < n_; ++v) gamma[v] = vertex_of[from[v]];
    return gamma;
  }

  static std::size_t common_prefix(const std::vector<std::size_t> &a,
                                   const std::vector<std::size_t> &b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  std::vector<std::size_t> orbit_roots() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto &gamma : automorphisms_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](std::size_t v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        auto a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Hash of the equitable partition: cell sizes and the number of
  // neighbours each cell has in every other cell. Label independent.
  std::uint64_t invariant(const std::vector<std::size_t> &colors, std::size_t classes) const {
    std::vector<std::size_t> size(classes, 0), rep(classes, n_);
    for (std::size_t v = 0; v < n_; ++v) {
      ++size[colors[v]];
      if (rep[colors[v]] == n_) rep[colors[v]] = v;
    }
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) { h = (h ^ x) * 1099511628211ULL; };
    mix(classes);
    std::vector<std::size_t> counts(classes);
    for (std::size_t c = 0; c < classes; ++c) {
      mix(size[c]);
      std::fill(counts.begin(), counts.end(), 0);
      for (auto w : adj_.out[rep[c]]) ++counts[colors[w]];
      for (std::size_t d = 0; d < classes; ++d)
        if (counts[d]) {
          mix(d);
          mix(counts[d]);
        }
    }
    return h;
  }

  // Leaves are ordered by (invariant sequence, certificate); the canonical
  // leaf is the least one.
  std::size_t leaf(const std::vector<std::size_t> &label) {
    auto cert = certificate(label);
    if (first_label_.empty()) {
      first_label_ = best_label_ = label;
      first_path_ = best_path_ = path_;
      first_inv_ = best_inv_ = inv_;
      first_cert_ = best_cert_ = std::move(cert);
      return kNoJump;
    }
    if (inv_ == first_inv_ && cert == first_cert_) {
      automorphisms_.push_back(automorphism(label, first_label_));
      return common_prefix(path_, first_path_);
    }
    if (inv_ < best_inv_ || (inv_ == best_inv_ && cert < best_cert_)) {
      best_cert_ = std::move(cert);
      best_label_ = label;
      best_path_ = path_;
      best_inv_ = inv_;
      return kNoJump;
    }
    if (inv_ == best_inv_ && cert == best_cert_) {
      automorphisms_.push_back(automorphism(label, best_label_));
      return common_prefix(path_, best_path_);
    }
    return kNoJump;
  }

  // Whether no leaf below the current node can match the first leaf or
  // beat the best one.
  bool prunable() const {
    if (first_label_.empty()) return false;
    const std::size_t k = inv_.size();
    const bool matches_first =
        k <= first_inv_.size() && std::equal(inv_.begin(), inv_.end(), first_inv_.begin());
    if (matches_first) return false;
    const std::size_t common = std::min(k, best_inv_.size());
    for (std::size_t i = 0; i < common; ++i)
      if (inv_[i] != best_inv_[i]) return inv_[i] > best_inv_[i];
    return k > best_inv_.size();
  }

  std::size_t search(std::vector<std::size_t> colors) {
    budget_.tick();
    refine(adj_, colors);
    std::size_t classes = 0;
    for (auto c : colors) classes = std::max(classes, c + 1);
    inv_.push_back(invariant(colors, classes));
    struct Pop {
      std::vector<std::uint64_t> &v;
      ~Pop() { v.pop_back(); }
    } pop{inv_};
    if (prunable()) return kNoJump;
    if (classes == n_) return leaf(colors);

    std::vector<std::size_t> size(classes, 0);
    for (auto c : colors) ++size[c];
    // Largest cell, as in the joint search.
    std::size_t target = classes;
    for (std::size_t c = 0; c < classes; ++c)
      if (size[c] > 1 && (target == classes || size[c] > size[target])) target = c;

    const std::size_t depth = path_.size();
    std::vector<std::size_t> tried, roots;
    std::size_t known = 0;
    for (std::size_t w = 0; w < n_; ++w) {
      if (colors[w] != target) continue;
      if (!tried.empty() && !automorphisms_.empty()) {
        if (known != automorphisms_.size()) {
          roots = orbit_roots();
          known = automorphisms_.size();
        }
        if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return roots[u] == roots[w]; }))
          continue;
      }
      tried.push_back(w);
      path_.push_back(w);
      std::size_t jump = search(individualize(colors, {w}));
      path_.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  const JoinGraph &g_;
  std::size_t n_;
  Adjacency adj_;
  BudgetCounter budget_;
  std::vector<std::size_t> colors_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> first_label_, best_label_, first_path_, best_path_;
  std::vector<std::uint64_t> inv_, first_inv_, best_inv_;
  std::string first_cert_, best_cert_;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

} // namespace

ColoredDigraph ColoredDigraph::from_graph(const JoinGraph &g) {
  return {g.adjacency, std::vector<std::size_t>(g.vertex_count(), 0)};
}

ColoredDigraph ColoredDigraph::from_poset(const Poset &p) {
  ColoredDigraph d;
  d.out = p.above;
  for (std::size_t a = 0; a < p.size(); ++a) d.out[a].reset(a);
  const auto h = p.heights(), dep = p.depths(), down = p.downset_sizes(), up = p.upset_sizes();
  d.colors.resize(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    d.colors[a] = (static_cast<std::size_t>(h[a]) << 48) | (static_cast<std::size_t>(dep[a]) << 32) |
                  (static_cast<std::size_t>(down[a]) << 16) | static_cast<std::size_t>(up[a]);
  return d;
}

IsoResult digraph_iso(const ColoredDigraph &a, const ColoredDigraph &b, std::size_t budget) {
  if (a.size() != b.size()) return {};
  std::size_t arcs_a = 0, arcs_b = 0;
  for (const auto &r : a.out) arcs_a += r.count();
  for (const auto &r : b.out) arcs_b += r.count();
  if (arcs_a != arcs_b) return {};
  auto ca = a.colors, cb = b.colors;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return {};
  if (a.size() == 0) return {true, std::vector<std::size_t>{}};

  JointSearch search(a, b, budget);
  auto witness = search.run();
  if (!witness) return {};
  return {true, std::move(witness)};
}

IsoResult graph_iso(const JoinGraph &a, const JoinGraph &b, std::size_t budget) {
  return digraph_iso(ColoredDigraph::from_graph(a), ColoredDigraph::from_graph(b), budget);
}

IsoResult poset_iso(const Poset &a, const Poset &b, std::size_t budget) {
  return digraph_iso(ColoredDigraph::from_poset(a), ColoredDigraph::from_poset(b), budget);
}

bool replay_graph_witness(const JoinGraph &a, const JoinGraph &b,
                          const std::vector<std::size_t> &witness) {
  if (a.vertex_count() != b.vertex_count() || witness.size() != a.vertex_count()) return false;
  for (std::size_t x = 0; x < a.vertex_count(); ++x)
    for (std::size_t y = 0; y < a.vertex_count(); ++y)
      if (a.adjacent(x, y) != b.adjacent(witness[x], witness[y])) return false;
  return true;
}

bool replay_poset_witness(const Poset &a, const Poset &b, const std::vector<std::size_t> &witness) {
  if (a.size() != b.size() || witness.size() != a.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(witness[x], witness[y])) return false;
  return true;
}

namespace {

// Graph with twins collapsed. members[v] lists the original vertices behind
// v, contiguous per nested merge; desc[v] describes the nesting, so equal
// descriptions mean interchangeable blocks.
struct TwinQuotient {
  JoinGraph graph;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::string> desc;

  // Merges same-described vertices with equal open (or closed)
  // neighborhoods. Returns whether anything merged.
  bool merge_round(bool closed) {
    const std::size_t m = graph.vertex_count();
    std::vector<BitSet> keys(graph.adjacency);
    if (closed)
      for (std::size_t v = 0; v < m; ++v) keys[v].set(v);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (desc[a] != desc[b]) return desc[a] < desc[b];
      if (keys[a] != keys[b]) return keys[a].index_less(keys[b]);
      return a < b;
    });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t v = order[i];
      if (i && desc[v] == desc[order[i - 1]] && keys[v] == keys[order[i - 1]])
        groups.back().push_back(v);
      else
        groups.push_back({v});
    }
    if (groups.size() == m) return false;
    std::sort(groups.begin(), groups.end());

    std::vector<std::size_t> group_of(m);
    for (std::size_t k = 0; k < groups.size(); ++k)
      for (auto v : groups[k]) group_of[v] = k;
    TwinQuotient next;
    next.graph.adjacency.assign(groups.size(), BitSet(groups.size()));
    next.members.resize(groups.size());
    next.desc.resize(groups.size());
    for (std::size_t k = 0; k < groups.size(); ++k) {
      const std::size_t v = groups[k].front();
      graph.adjacency[v].for_each([&](std::size_t w) {
        if (group_of[w] != k) next.graph.adjacency[k].set(group_of[w]);
      });
      for (auto u : groups[k])
        next.members[k].insert(next.members[k].end(), members[u].begin(), members[u].end());
      next.desc[k] = groups[k].size() == 1 ? desc[v]
                                           : std::string(closed ? "c" : "o") +
                                                 std::to_string(groups[k].size()) + "(" + desc[v] + ")";
    }
    *this = std::move(next);
    return true;
  }
};

} // namespace

std::string canonical_form(const JoinGraph &g, std::size_t budget) {
  const std::size_t n = g.vertex_count();
  TwinQuotient q{g, std::vector<std::vector<std::size_t>>(n), std::vector<std::string>(n, "v")};
  for (std::size_t v = 0; v < n; ++v) q.members[v] = {v};
  while (q.merge_round(false) | q.merge_round(true)) {
  }
  const auto &desc = q.desc;
  const auto &members = q.members;
  const auto &cur = q.graph;

  std::vector<std::string> sorted = desc;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> colors(desc.size());
  for (std::size_t v = 0; v < desc.size(); ++v)
    colors[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), desc[v]) - sorted.begin());

  const auto label = CanonicalSearch(cur, colors, budget).run();
  std::vector<std::size_t> by_label(label.size());
  for (std::size_t v = 0; v < label.size(); ++v) by_label[label[v]] = v;
  std::vector<std::size_t> vertex_of;
  vertex_of.reserve(n);
  for (auto v : by_label) vertex_of.insert(vertex_of.end(), members[v].begin(), members[v].end());

  std::string cert(4, '\0');
  for (int k = 0; k < 4; ++k) cert[k] = static_cast<char>((n >> (8 * (3 - k))) & 0xff);
  unsigned char byte = 0;
  int bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | g.adjacent(vertex_of[i], vertex_of[j]));
      if (++bits == 8) {
        cert.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  if (bits) cert.push_back(static_cast<char>(byte << (8 - bits)));
  return cert;
}

} // namespace joinlat

#include "catena/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "catena/error.hpp"
#include "catena/math_util.hpp"

namespace catena {

FiniteLattice FiniteLattice::build(std::vector<std::string> labels,
                                   const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw Error(ErrorKind::SpecError, "lattice needs at least one element");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      throw Error(ErrorKind::SpecError, "duplicate element labels");
  }

  FiniteLattice L;
  L.labels_ = std::move(labels);
  L.up_.assign(n, {});
  L.down_.assign(n, {});

  std::set<std::pair<int, int>> seen_covers;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorKind::SpecError, "cover references unknown element");
    if (a == b) throw Error(ErrorKind::CycleDetected, "self-cover at " + L.labels_[a]);
    if (!seen_covers.insert({a, b}).second)
      throw Error(ErrorKind::RedundantCover,
                  "duplicate cover " + L.labels_[a] + " -> " + L.labels_[b]);
    L.covers_.emplace_back(a, b);
    L.up_[a].push_back(b);
    L.down_[b].push_back(a);
  }
  std::sort(L.covers_.begin(), L.covers_.end());
  for (auto& v : L.up_) std::sort(v.begin(), v.end());
  for (auto& v : L.down_) std::sort(v.begin(), v.end());

  // Kahn toposort; detects cycles.
  std::vector<int> indeg(n, 0);
  for (auto& [a, b] : L.covers_) ++indeg[b];
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    L.topo_.push_back(u);
    for (int v : L.up_[u])
      if (--indeg[v] == 0) q.push(v);
  }
  if (static_cast<int>(L.topo_.size()) != n)
    throw Error(ErrorKind::CycleDetected, "cover relation contains a cycle");

  // Reflexive-transitive closure, processed against the topological order.
  L.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto it = L.topo_.rbegin(); it != L.topo_.rend(); ++it) {
    int a = *it;
    L.leq_[a * n + a] = 1;
    for (int b : L.up_[a])
      for (int c = 0; c < n; ++c)
        if (L.leq_[b * n + c]) L.leq_[a * n + c] = 1;
  }

  for (auto& [a, b] : L.covers_)
    for (int c = 0; c < n; ++c)
      if (c != a && c != b && L.leq_[a * n + c] && L.leq_[c * n + b])
        throw Error(ErrorKind::RedundantCover,
                    "cover " + L.labels_[a] + " -> " + L.labels_[b] +
                        " is implied through " + L.labels_[c]);

  int n_min = 0, n_max = 0;
  for (int i = 0; i < n; ++i) {
    if (L.down_[i].empty()) {
      ++n_min;
      L.bottom_ = i;
    }
    if (L.up_[i].empty()) {
      ++n_max;
      L.top_ = i;
    }
  }
  if (n_min != 1 || n_max != 1)
    throw Error(ErrorKind::NotALattice, "bounds are not unique");

  L.join_.assign(static_cast<std::size_t>(n) * n, -1);
  L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int j = -1, m = -1;
      if (L.leq_[a * n + b]) {
        j = b;
        m = a;
      } else if (L.leq_[b * n + a]) {
        j = a;
        m = b;
      } else {
        for (int c = 0; c < n && j < 0; ++c) {
          if (!(L.leq_[a * n + c] && L.leq_[b * n + c])) continue;
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (L.leq_[a * n + d] && L.leq_[b * n + d] && !L.leq_[c * n + d])
              least = false;
          if (least) j = c;
        }
        for (int c = 0; c < n && m < 0; ++c) {
          if (!(L.leq_[c * n + a] && L.leq_[c * n + b])) continue;
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (L.leq_[d * n + a] && L.leq_[d * n + b] && !L.leq_[d * n + c])
              greatest = false;
          if (greatest) m = c;
        }
        if (j < 0 || m < 0)
          throw Error(ErrorKind::NotALattice,
                      "pair {" + L.labels_[a] + ", " + L.labels_[b] +
                          "} lacks a unique " + (j < 0 ? "join" : "meet"));
      }
      L.join_[a * n + b] = L.join_[b * n + a] = j;
      L.meet_[a * n + b] = L.meet_[b * n + a] = m;
    }
  return L;
}

FiniteLattice FiniteLattice::build_labeled(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx[labels[i]] = i;
  std::vector<std::pair<int, int>> c;
  c.reserve(covers.size());
  for (auto& [a, b] : covers) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end())
      throw Error(ErrorKind::SpecError, "cover references unknown label");
    c.emplace_back(ia->second, ib->second);
  }
  return build(std::move(labels), c);
}

int FiniteLattice::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorKind::SpecError, "unknown label " + label);
}

GradedResult is_graded(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> rank(n, -1);
  rank[L.bottom()] = 0;
  for (int u : L.topo_order()) {
    for (int v : L.upper_covers(u)) {
      if (rank[v] == -1)
        rank[v] = rank[u] + 1;
      else if (rank[v] != rank[u] + 1)
        return {false, std::nullopt};
    }
  }
  return {true, rank};
}

FiniteLattice interval(const FiniteLattice& L, int a, int b) {
  if (!L.leq(a, b))
    throw Error(ErrorKind::NotComparable, L.label(a) + " and " + L.label(b));
  std::vector<int> members;
  for (int i = 0; i < L.size(); ++i)
    if (L.leq(a, i) && L.leq(i, b)) members.push_back(i);
  std::vector<int> pos(L.size(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    pos[members[i]] = i;
    labels.push_back(L.label(members[i]));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto& [x, y] : L.covers())
    if (pos[x] >= 0 && pos[y] >= 0) covers.emplace_back(pos[x], pos[y]);
  return FiniteLattice::build(std::move(labels), covers);
}

LengthRange length_range(const FiniteLattice& L, int a, int b) {
  if (!L.leq(a, b))
    throw Error(ErrorKind::NotComparable, L.label(a) + " and " + L.label(b));
  const int n = L.size();
  std::vector<int> longest(n, -1), shortest(n, -1);
  longest[a] = shortest[a] = 0;
  for (int u : L.topo_order()) {
    if (longest[u] < 0 || !L.leq(a, u) || !L.leq(u, b)) continue;
    for (int v : L.upper_covers(u)) {
      if (!L.leq(v, b)) continue;
      if (longest[v] < longest[u] + 1) longest[v] = longest[u] + 1;
      if (shortest[v] < 0 || shortest[v] > shortest[u] + 1)
        shortest[v] = shortest[u] + 1;
    }
  }
  return {shortest[b] < 0 ? 0 : shortest[b], longest[b] < 0 ? 0 : longest[b]};
}

bool is_distributive(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return false;
  return true;
}

std::vector<int> atoms(const FiniteLattice& L, int a, int b) {
  if (!L.leq(a, b))
    throw Error(ErrorKind::NotComparable, L.label(a) + " and " + L.label(b));
  std::vector<int> out;
  for (int x : L.upper_covers(a))
    if (L.leq(x, b)) out.push_back(x);
  return out;
}

int socle(const FiniteLattice& L, int a, int b) {
  int s = a;
  for (int x : atoms(L, a, b)) s = L.join(s, x);
  return s;
}

std::vector<int> loewy_series(const FiniteLattice& L) {
  std::vector<int> series{L.bottom()};
  while (series.back() != L.top())
    series.push_back(socle(L, series.back(), L.top()));
  return series;
}

bool is_p_extension(const FiniteLattice& L) {
  auto series = loewy_series(L);
  for (int x = 0; x < L.size(); ++x) {
    bool covered = false;
    for (std::size_t i = 0; i + 1 < series.size() && !covered; ++i)
      covered = L.leq(series[i], x) && L.leq(x, series[i + 1]);
    if (!covered && L.size() > 1) return false;
  }
  return true;
}

bool is_left_modular_element(const FiniteLattice& L, int x) {
  const int n = L.size();
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      if (L.leq(y, z) && L.meet(L.join(y, x), z) != L.join(y, L.meet(x, z)))
        return false;
  return true;
}

bool is_left_modular_lattice(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<uint8_t> lm(n, 0);
  for (int i = 0; i < n; ++i) lm[i] = is_left_modular_element(L, i) ? 1 : 0;
  // maximal chain inside the left-modular elements = cover path bottom->top
  if (!lm[L.bottom()] || !lm[L.top()]) return false;
  std::vector<uint8_t> reach(n, 0);
  std::queue<int> q;
  q.push(L.bottom());
  reach[L.bottom()] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == L.top()) return true;
    for (int v : L.upper_covers(u))
      if (lm[v] && !reach[v]) {
        reach[v] = 1;
        q.push(v);
      }
  }
  return false;
}

namespace {

// Closure of a subset under join and meet, as sorted indices.
std::vector<int> closed_subset(const FiniteLattice& L, std::vector<int> members) {
  std::vector<uint8_t> in(L.size(), 0);
  std::vector<int> work = members;
  members.clear();
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    if (in[u]) continue;
    in[u] = 1;
    for (int v : members) {
      int j = L.join(u, v), m = L.meet(u, v);
      if (!in[j]) work.push_back(j);
      if (!in[m]) work.push_back(m);
    }
    members.push_back(u);
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool distributive_on(const FiniteLattice& L, const std::vector<int>& members) {
  for (int a : members)
    for (int b : members)
      for (int c : members)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return false;
  return true;
}

}  // namespace

FiniteLattice sublattice_generated(const FiniteLattice& L,
                                   const std::vector<int>& subset) {
  if (subset.empty()) throw Error(ErrorKind::SpecError, "empty generating set");
  auto members = closed_subset(L, subset);
  std::vector<int> pos(L.size(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    pos[members[i]] = i;
    labels.push_back(L.label(members[i]));
  }
  std::vector<std::pair<int, int>> covers;
  for (int x : members)
    for (int y : members) {
      if (x == y || !L.leq(x, y)) continue;
      bool cover = true;
      for (int z : members)
        if (z != x && z != y && L.leq(x, z) && L.leq(z, y)) {
          cover = false;
          break;
        }
      if (cover) covers.emplace_back(pos[x], pos[y]);
    }
  return FiniteLattice::build(std::move(labels), covers);
}

bool is_supersolvable(const FiniteLattice& L, int size_bound) {
  if (L.size() > size_bound)
    throw Error(ErrorKind::SizeLimitExceeded,
                "lattice has " + std::to_string(L.size()) + " elements, bound " +
                    std::to_string(size_bound));
  auto chains = maximal_chains(L);

  // Candidate order: fewest non-left-modular elements first. A pure
  // heuristic; the outcome does not depend on it.
  std::vector<uint8_t> lm(L.size(), 0);
  for (int i = 0; i < L.size(); ++i) lm[i] = is_left_modular_element(L, i) ? 1 : 0;
  std::vector<int> order(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int na = 0, nb = 0;
    for (int x : chains[a]) na += !lm[x];
    for (int x : chains[b]) nb += !lm[x];
    return na < nb;
  });

  for (int ci : order) {
    const auto& C = chains[ci];
    bool ok = true;
    for (const auto& Cp : chains) {
      std::vector<int> gen = C;
      gen.insert(gen.end(), Cp.begin(), Cp.end());
      auto members = closed_subset(L, std::move(gen));
      if (!distributive_on(L, members)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

FiniteLattice product_lattice(const std::vector<FiniteLattice>& factors) {
  if (factors.empty()) throw Error(ErrorKind::SpecError, "empty product");
  if (factors.size() == 1) return factors[0];
  std::size_t total = 1;
  for (const auto& f : factors) total *= static_cast<std::size_t>(f.size());
  if (total > 100000) throw Error(ErrorKind::SizeLimitExceeded, "product too large");

  const int k = static_cast<int>(factors.size());
  auto decode = [&](std::size_t idx) {
    std::vector<int> coord(k);
    for (int i = k - 1; i >= 0; --i) {
      coord[i] = static_cast<int>(idx % factors[i].size());
      idx /= factors[i].size();
    }
    return coord;
  };
  auto encode = [&](const std::vector<int>& coord) {
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i].size() + coord[i];
    return idx;
  };

  std::vector<std::string> labels(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto c = decode(idx);
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s += ",";
      s += factors[i].label(c[i]);
    }
    labels[idx] = s + ")";
  }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto c = decode(idx);
    for (int i = 0; i < k; ++i)
      for (int v : factors[i].upper_covers(c[i])) {
        auto c2 = c;
        c2[i] = v;
        covers.emplace_back(static_cast<int>(idx), static_cast<int>(encode(c2)));
      }
  }
  return FiniteLattice::build(std::move(labels), covers);
}

bool is_2_catenarian(const FiniteLattice& L) {
  for (int t = 0; t < L.size(); ++t)
    for (int u : L.lower_covers(t))
      for (int v : L.upper_covers(t))
        if (length_range(L, u, v).longest != 2) return false;
  return true;
}

std::vector<std::vector<int>> maximal_chains_between(const FiniteLattice& L,
                                                     int a, int b) {
  if (!L.leq(a, b))
    throw Error(ErrorKind::NotComparable, L.label(a) + " and " + L.label(b));
  std::vector<std::vector<int>> out;
  std::vector<int> cur{a};
  constexpr std::size_t kChainLimit = 200000;
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == b) {
      out.push_back(cur);
      if (out.size() > kChainLimit)
        throw Error(ErrorKind::SizeLimitExceeded, "too many maximal chains");
      return;
    }
    for (int v : L.upper_covers(u)) {
      if (!L.leq(v, b)) continue;
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  dfs(dfs, a);
  return out;
}

std::vector<std::vector<int>> maximal_chains(const FiniteLattice& L) {
  return maximal_chains_between(L, L.bottom(), L.top());
}

bool graded_via_chain_enumeration(const FiniteLattice& L) {
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (!L.leq(a, b)) continue;
      auto chains = maximal_chains_between(L, a, b);
      for (std::size_t i = 1; i < chains.size(); ++i)
        if (chains[i].size() != chains[0].size()) return false;
    }
  return true;
}

FiniteLattice dual_lattice(const FiniteLattice& L) {
  std::vector<std::pair<int, int>> covers;
  for (auto& [a, b] : L.covers()) covers.emplace_back(b, a);
  return FiniteLattice::build(L.labels(), covers);
}

FiniteLattice chain_lattice(int len) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i <= len; ++i) {
    labels.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return FiniteLattice::build(std::move(labels), covers);
}

FiniteLattice divisor_lattice(uint32_t n) {
  auto divs = divisors_sorted(n);
  std::vector<std::string> labels;
  for (uint32_t d : divs) labels.push_back(std::to_string(d));
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < divs.size(); ++i)
    for (std::size_t j = 0; j < divs.size(); ++j)
      if (divs[j] % divs[i] == 0 && is_prime_u32(divs[j] / divs[i]))
        covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return FiniteLattice::build(std::move(labels), covers);
}

}  // namespace catena

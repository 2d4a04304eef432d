#include "vkmap/map.hpp"

#include <algorithm>
#include <numeric>

namespace vkmap {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kNotInvolution: return "NotInvolution";
    case Errc::kNotConnected: return "NotConnected";
    case Errc::kNotPlanar: return "NotPlanar";
    case Errc::kBadOuterDart: return "BadOuterDart";
    case Errc::kUnknownRegion: return "UnknownRegion";
    case Errc::kUnknownVertex: return "UnknownVertex";
    case Errc::kBasepointNotOnBoundary: return "BasepointNotOnBoundary";
    case Errc::kInvalidDecomposition: return "InvalidDecomposition";
    case Errc::kPathNotOnBoundary: return "PathNotOnBoundary";
    case Errc::kNotCyclicallyReduced: return "NotCyclicallyReduced";
    case Errc::kNotSymmetricallyClosed: return "NotSymmetricallyClosed";
    case Errc::kNotFreelyReduced: return "NotFreelyReduced";
    case Errc::kUnknownGenerator: return "UnknownGenerator";
    case Errc::kUnlabelledEdge: return "UnlabelledEdge";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kDanglingDart: return "DanglingDart";
    case Errc::kDuplicateDart: return "DuplicateDart";
    case Errc::kConfigInvalid: return "ConfigInvalid";
    case Errc::kNotInClass: return "NotInClass";
    case Errc::kNotSerializable: return "NotSerializable";
  }
  return "Error";
}

namespace {

// Collects the orbits of a permutation given as a 1-based table. Each orbit
// starts at its minimal element; orbits are listed by that element.
std::vector<std::vector<DartId>> orbits_of(const std::vector<DartId>& perm, int n) {
  std::vector<std::vector<DartId>> out;
  std::vector<bool> seen(n + 1, false);
  for (DartId d = 1; d <= n; ++d) {
    if (seen[d]) continue;
    std::vector<DartId> orbit;
    DartId cur = d;
    do {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = perm[cur];
    } while (cur != d);
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

DartId CombinatorialMap::check_dart(DartId d) const {
  if (d < 1 || d > dart_count_) throw Error(Errc::kDanglingDart, "dart id out of range");
  return d;
}

CombinatorialMap CombinatorialMap::build(int dart_count,
                                         const std::vector<std::pair<DartId, DartId>>& reversal_pairs,
                                         const std::vector<std::vector<DartId>>& rotation_cycles,
                                         DartId outer_dart) {
  if (dart_count <= 0 || dart_count % 2 != 0)
    throw Error(Errc::kNotInvolution, "dart count must be a positive even number");

  CombinatorialMap m;
  m.dart_count_ = dart_count;
  m.rev_.assign(dart_count + 1, 0);
  for (auto [a, b] : reversal_pairs) {
    if (a < 1 || a > dart_count || b < 1 || b > dart_count)
      throw Error(Errc::kDanglingDart, "reversal pair mentions an unknown dart");
    if (a == b) throw Error(Errc::kNotInvolution, "reversal must not fix a dart");
    if (m.rev_[a] != 0 || m.rev_[b] != 0)
      throw Error(Errc::kNotInvolution, "dart appears in two reversal pairs");
    m.rev_[a] = b;
    m.rev_[b] = a;
  }
  for (DartId d = 1; d <= dart_count; ++d)
    if (m.rev_[d] == 0) throw Error(Errc::kNotInvolution, "dart missing from the edge pairing");

  m.rot_.assign(dart_count + 1, 0);
  m.rot_inv_.assign(dart_count + 1, 0);
  m.vertex_of_.assign(dart_count + 1, -1);
  for (const auto& cycle : rotation_cycles) {
    if (cycle.empty()) throw Error(Errc::kSyntaxError, "empty rotation cycle");
    for (size_t i = 0; i < cycle.size(); ++i) {
      DartId d = cycle[i];
      DartId next = cycle[(i + 1) % cycle.size()];
      if (d < 1 || d > dart_count)
        throw Error(Errc::kDanglingDart, "rotation cycle mentions an unknown dart");
      if (m.rot_[d] != 0) throw Error(Errc::kDuplicateDart, "dart appears in two rotation cycles");
      m.rot_[d] = next;
    }
  }
  for (DartId d = 1; d <= dart_count; ++d) {
    if (m.rot_[d] == 0) throw Error(Errc::kDanglingDart, "dart missing from the rotation");
    m.rot_inv_[m.rot_[d]] = d;
  }

  // Connectivity under the group generated by rotation and reversal.
  {
    std::vector<bool> seen(dart_count + 1, false);
    std::vector<DartId> stack{1};
    seen[1] = true;
    int visited = 0;
    while (!stack.empty()) {
      DartId d = stack.back();
      stack.pop_back();
      ++visited;
      for (DartId next : {m.rot_[d], m.rev_[d]}) {
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    if (visited != dart_count) throw Error(Errc::kNotConnected, "map is not connected");
  }

  m.vertex_cycles_ = orbits_of(m.rot_, dart_count);
  for (size_t v = 0; v < m.vertex_cycles_.size(); ++v)
    for (DartId d : m.vertex_cycles_[v]) m.vertex_of_[d] = static_cast<VertexId>(v);

  m.edge_of_.assign(dart_count + 1, -1);
  {
    EdgeId next_edge = 0;
    for (DartId d = 1; d <= dart_count; ++d)
      if (m.edge_of_[d] < 0) {
        m.edge_of_[d] = next_edge;
        m.edge_of_[m.rev_[d]] = next_edge;
        ++next_edge;
      }
  }

  // Face orbits of rotation composed with reversal.
  std::vector<DartId> face_next(dart_count + 1, 0);
  for (DartId d = 1; d <= dart_count; ++d) face_next[d] = m.rot_[m.rev_[d]];
  m.face_cycles_ = orbits_of(face_next, dart_count);
  m.face_of_.assign(dart_count + 1, -1);
  for (size_t f = 0; f < m.face_cycles_.size(); ++f)
    for (DartId d : m.face_cycles_[f]) m.face_of_[d] = static_cast<int>(f);

  if (outer_dart < 1 || outer_dart > dart_count)
    throw Error(Errc::kBadOuterDart, "outer dart id out of range");
  m.outer_dart_ = outer_dart;
  m.outer_face_ = m.face_of_[outer_dart];

  const int v = static_cast<int>(m.vertex_cycles_.size());
  const int e = dart_count / 2;
  const int f = static_cast<int>(m.face_cycles_.size());
  if (v - e + f != 2)
    throw Error(Errc::kNotPlanar, "Euler check failed: V - E + F = " + std::to_string(v - e + f));

  m.region_of_face_.assign(m.face_cycles_.size(), -1);
  for (int fi = 0; fi < f; ++fi) {
    if (fi == m.outer_face_) continue;
    m.region_of_face_[fi] = static_cast<RegionId>(m.region_faces_.size());
    m.region_faces_.push_back(fi);
  }

  m.edge_on_boundary_.assign(e, false);
  for (DartId d : m.face_cycles_[m.outer_face_]) m.edge_on_boundary_[m.edge_of_[d]] = true;

  m.profiles_.reserve(m.region_faces_.size());
  for (RegionId r = 0; r < static_cast<int>(m.region_faces_.size()); ++r)
    m.profiles_.push_back(m.compute_region_profile(r, RegionProfileOptions{}));

  return m;
}

std::optional<RegionId> CombinatorialMap::region_of(DartId d) const {
  int f = face_of_[check_dart(d)];
  if (f == outer_face_) return std::nullopt;
  return region_of_face_[f];
}

std::span<const DartId> CombinatorialMap::vertex_darts(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw Error(Errc::kUnknownVertex, "vertex id out of range");
  return vertex_cycles_[v];
}

int CombinatorialMap::vertex_valence(VertexId v) const {
  return static_cast<int>(vertex_darts(v).size());
}

bool CombinatorialMap::vertex_is_inner(VertexId v) const {
  for (DartId d : vertex_darts(v))
    if (face_of_[d] == outer_face_ || face_of_[rev_[d]] == outer_face_) return false;
  return true;
}

VertexProfile CombinatorialMap::vertex_profile(VertexId v) const {
  return VertexProfile{vertex_valence(v), vertex_is_inner(v)};
}

std::span<const DartId> CombinatorialMap::region_boundary(RegionId r) const {
  if (r < 0 || r >= region_count()) throw Error(Errc::kUnknownRegion, "region id out of range");
  return face_cycles_[region_faces_[r]];
}

std::span<const DartId> CombinatorialMap::outer_cycle() const {
  return face_cycles_[outer_face_];
}

std::vector<DartId> CombinatorialMap::boundary_cycle(DartId basepoint) const {
  if (face_of_[check_dart(basepoint)] != outer_face_)
    throw Error(Errc::kBasepointNotOnBoundary, "basepoint dart is not on the outer face");
  std::vector<DartId> out;
  out.reserve(outer_cycle().size());
  DartId cur = basepoint;
  do {
    out.push_back(cur);
    cur = rot_[rev_[cur]];
  } while (cur != basepoint);
  return out;
}

const RegionProfile& CombinatorialMap::region_profile(RegionId r) const {
  if (r < 0 || r >= region_count()) throw Error(Errc::kUnknownRegion, "region id out of range");
  return profiles_[r];
}

RegionProfile CombinatorialMap::region_profile(RegionId r, const RegionProfileOptions& opts) const {
  if (r < 0 || r >= region_count()) throw Error(Errc::kUnknownRegion, "region id out of range");
  if (!opts.remove_all_boundary_edges) return profiles_[r];
  return compute_region_profile(r, opts);
}

RegionProfile CombinatorialMap::compute_region_profile(RegionId r,
                                                       const RegionProfileOptions& opts) const {
  const auto& boundary = face_cycles_[region_faces_[r]];
  RegionProfile p;
  p.edge_count = static_cast<int>(boundary.size());

  std::vector<int> edge_uses(edge_count(), 0);
  std::vector<bool> is_outer_pos(boundary.size(), false);
  for (size_t i = 0; i < boundary.size(); ++i) {
    DartId d = boundary[i];
    ++edge_uses[edge_of_[d]];
    if (face_of_[rev_[d]] == outer_face_) {
      is_outer_pos[i] = true;
      ++p.outer_edge_count;
    } else {
      p.inner_boundary.push_back(d);
      RegionId other = region_of_face_[face_of_[rev_[d]]];
      if (other != r) p.neighbors.push_back(other);
    }
  }
  std::sort(p.neighbors.begin(), p.neighbors.end());
  p.neighbors.erase(std::unique(p.neighbors.begin(), p.neighbors.end()), p.neighbors.end());
  p.has_repeated_edge =
      std::any_of(edge_uses.begin(), edge_uses.end(), [](int c) { return c > 1; });
  p.is_inner = p.outer_edge_count == 0;

  // Maximal runs of outer positions, cyclically.
  const int n = static_cast<int>(boundary.size());
  if (!p.is_inner) {
    if (p.outer_edge_count == n) {
      p.outer_arcs.push_back({boundary.begin(), boundary.end()});
    } else {
      int start = 0;
      while (is_outer_pos[start]) start = (start + 1) % n;  // an inner position exists
      for (int step = 0; step < n; ++step) {
        int i = (start + step) % n;
        if (!is_outer_pos[i]) continue;
        if (p.outer_arcs.empty() || !is_outer_pos[(i + n - 1) % n])
          p.outer_arcs.emplace_back();
        p.outer_arcs.back().push_back(boundary[i]);
      }
    }
  }

  // Properness: drop the region's open cell and the selected boundary edges,
  // then vertices left isolated; the rest must stay connected and non-empty.
  if (!p.is_inner) {
    std::vector<bool> removed_edge(edge_count(), false);
    for (size_t i = 0; i < boundary.size(); ++i) {
      if (opts.remove_all_boundary_edges || is_outer_pos[i])
        removed_edge[edge_of_[boundary[i]]] = true;
    }
    std::vector<std::vector<VertexId>> adj(vertex_count());
    int remaining_edges = 0;
    for (DartId d = 1; d <= dart_count_; d += 1) {
      if (d > rev_[d]) continue;  // one dart per edge
      if (removed_edge[edge_of_[d]]) continue;
      adj[vertex_of_[d]].push_back(vertex_of_[rev_[d]]);
      adj[vertex_of_[rev_[d]]].push_back(vertex_of_[d]);
      ++remaining_edges;
    }
    if (remaining_edges == 0) {
      p.is_proper_boundary = false;
    } else {
      VertexId start = -1;
      for (VertexId v = 0; v < vertex_count(); ++v)
        if (!adj[v].empty()) {
          start = v;
          break;
        }
      std::vector<bool> seen(vertex_count(), false);
      std::vector<VertexId> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v])
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      bool connected = true;
      for (VertexId v = 0; v < vertex_count(); ++v)
        if (!adj[v].empty() && !seen[v]) connected = false;
      p.is_proper_boundary = connected;
    }
  }

  return p;
}

bool CombinatorialMap::has_paired_reversal() const {
  for (DartId d = 1; d <= dart_count_; d += 2)
    if (rev_[d] != d + 1) return false;
  return true;
}

std::vector<DartId> inverse_path(const CombinatorialMap& m, std::span<const DartId> path) {
  std::vector<DartId> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(m.reversal(*it));
  return out;
}

BoundaryDecomposition make_decomposition(const CombinatorialMap& m, DartId base, int xi_len,
                                         int mu_len, int tau_len) {
  if (xi_len < 0 || xi_len > 1 || tau_len < 0 || tau_len > 1 || mu_len < 0)
    throw Error(Errc::kInvalidDecomposition, "component lengths out of range");
  std::vector<DartId> cycle = m.boundary_cycle(base);
  const int n = static_cast<int>(cycle.size());
  if (xi_len + mu_len + tau_len > n)
    throw Error(Errc::kInvalidDecomposition, "components longer than the boundary");

  BoundaryDecomposition d;
  d.base = base;
  auto take = [&](int from, int len) {
    return std::vector<DartId>(cycle.begin() + from, cycle.begin() + from + len);
  };
  d.xi = take(0, xi_len);
  d.mu = take(xi_len, mu_len);
  std::vector<DartId> tau_rev = take(xi_len + mu_len, tau_len);
  std::vector<DartId> sigma_rev = take(xi_len + mu_len + tau_len, n - xi_len - mu_len - tau_len);
  d.tau = inverse_path(m, tau_rev);
  d.sigma = inverse_path(m, sigma_rev);
  return d;
}

bool is_valid_decomposition(const CombinatorialMap& m, const BoundaryDecomposition& d) {
  if (d.xi.size() > 1 || d.tau.size() > 1) return false;
  std::vector<DartId> cycle;
  cycle.insert(cycle.end(), d.xi.begin(), d.xi.end());
  cycle.insert(cycle.end(), d.mu.begin(), d.mu.end());
  auto tau_rev = inverse_path(m, d.tau);
  auto sigma_rev = inverse_path(m, d.sigma);
  cycle.insert(cycle.end(), tau_rev.begin(), tau_rev.end());
  cycle.insert(cycle.end(), sigma_rev.begin(), sigma_rev.end());
  if (cycle.empty() || cycle.front() != d.base) return false;
  for (DartId dart : cycle) {
    if (dart < 1 || dart > m.dart_count()) return false;
    if (!m.on_outer_face(dart)) return false;
  }
  std::vector<DartId> expected = m.boundary_cycle(d.base);
  return cycle == expected;
}

void require_valid_decomposition(const CombinatorialMap& m, const BoundaryDecomposition& d) {
  if (!is_valid_decomposition(m, d))
    throw Error(Errc::kInvalidDecomposition, "paths do not concatenate to the boundary cycle");
}

std::vector<DartId> mu_side_path(const BoundaryDecomposition& d) {
  std::vector<DartId> out = d.xi;
  out.insert(out.end(), d.mu.begin(), d.mu.end());
  return out;
}

std::vector<DartId> sigma_side_path(const BoundaryDecomposition& d) {
  std::vector<DartId> out = d.sigma;
  out.insert(out.end(), d.tau.begin(), d.tau.end());
  return out;
}

}  // namespace vkmap

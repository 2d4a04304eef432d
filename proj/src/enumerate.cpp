#include "vkmap/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vkmap {

const char* class_filter_name(ClassFilter f) {
  switch (f) {
    case ClassFilter::kNone: return "none";
    case ClassFilter::kProperV6: return "proper_v6";
    case ClassFilter::kProperC7: return "proper_c7";
    case ClassFilter::kProperC4T4: return "proper_c4t4";
  }
  return "?";
}

void EnumConfig::validate() const {
  if (max_regions < 1) throw Error(Errc::kConfigInvalid, "max_regions must be at least 1");
  if (min_region_edges < 1 || max_region_edges > 16 || min_region_edges > max_region_edges)
    throw Error(Errc::kConfigInvalid, "region edge range must lie within [1, 16]");
  if (max_boundary_length < 1) throw Error(Errc::kConfigInvalid, "boundary cap must be positive");
}

CombinatorialMap polygon_map(int k) {
  if (k < 1) throw Error(Errc::kConfigInvalid, "polygon needs at least one edge");
  std::vector<std::pair<DartId, DartId>> pairs;
  std::vector<std::vector<DartId>> cycles;
  for (int i = 1; i <= k; ++i) {
    pairs.emplace_back(2 * i - 1, 2 * i);
    int prev = i == 1 ? k : i - 1;
    cycles.push_back({2 * i - 1, 2 * prev});
  }
  return CombinatorialMap::build(2 * k, pairs, cycles, /*outer_dart=*/2);
}

CombinatorialMap glue_polygon(const CombinatorialMap& m, int pos, int glue_len, int k) {
  const auto outer = m.outer_cycle();
  const int boundary = static_cast<int>(outer.size());
  if (pos < 0 || pos >= boundary) throw Error(Errc::kConfigInvalid, "glue position out of range");
  if (glue_len < 1 || glue_len > std::min(k - 1, boundary))
    throw Error(Errc::kConfigInvalid, "glue path must be non-empty and shorter than the polygon");

  std::vector<DartId> glued;
  for (int i = 0; i < glue_len; ++i) glued.push_back(outer[(pos + i) % boundary]);

  const int old_darts = m.dart_count();
  const int new_edges = k - glue_len;
  const int total = old_darts + 2 * new_edges;
  auto fwd = [&](int j) { return old_darts + 2 * j - 1; };  // j-th new dart, 1-based
  auto bwd = [&](int j) { return old_darts + 2 * j; };

  std::vector<DartId> rot(total + 1, 0);
  for (DartId d = 1; d <= old_darts; ++d) rot[d] = m.rotation_next(d);

  // Fresh interior vertices of the new arc carry exactly two darts.
  for (int j = 1; j < new_edges; ++j) {
    rot[bwd(j)] = fwd(j + 1);
    rot[fwd(j + 1)] = bwd(j);
  }
  // Splice the arc's first edge in after the glued path's end...
  DartId at_end = m.reversal(glued.back());
  rot[fwd(1)] = rot[at_end];
  rot[at_end] = fwd(1);
  // ...and its last edge in front of the glued path's start.
  DartId pred = 0;
  for (DartId d = 1; d <= total; ++d)
    if (rot[d] == glued.front()) {
      pred = d;
      break;
    }
  rot[bwd(new_edges)] = glued.front();
  rot[pred] = bwd(new_edges);

  std::vector<std::pair<DartId, DartId>> pairs;
  {
    std::vector<bool> seen(total + 1, false);
    for (DartId d = 1; d <= old_darts; ++d) {
      if (seen[d]) continue;
      DartId r = m.reversal(d);
      pairs.emplace_back(d, r);
      seen[d] = seen[r] = true;
    }
    for (int j = 1; j <= new_edges; ++j) pairs.emplace_back(fwd(j), bwd(j));
  }

  std::vector<std::vector<DartId>> cycles;
  {
    std::vector<bool> visited(total + 1, false);
    for (DartId d = 1; d <= total; ++d) {
      if (visited[d]) continue;
      std::vector<DartId> cycle;
      DartId cur = d;
      do {
        visited[cur] = true;
        cycle.push_back(cur);
        cur = rot[cur];
      } while (cur != d);
      cycles.push_back(std::move(cycle));
    }
  }

  return CombinatorialMap::build(total, pairs, cycles, /*outer_dart=*/bwd(1));
}

std::string canonical_form(const CombinatorialMap& m) {
  const int n = m.dart_count();
  std::vector<int> best;

  auto consider = [&](DartId start, bool mirrored) {
    std::vector<int> label(n + 1, 0);
    std::vector<DartId> orig(n + 1, 0);
    std::deque<DartId> queue;
    int next = 1;
    label[start] = next;
    orig[next] = start;
    ++next;
    queue.push_back(start);
    while (!queue.empty()) {
      DartId d = queue.front();
      queue.pop_front();
      DartId succs[2] = {mirrored ? m.rotation_prev(d) : m.rotation_next(d), m.reversal(d)};
      for (DartId s : succs) {
        if (label[s] == 0) {
          label[s] = next;
          orig[next] = s;
          ++next;
          queue.push_back(s);
        }
      }
    }
    std::vector<int> enc;
    enc.reserve(2 * n);
    for (int i = 1; i <= n; ++i) {
      DartId d = orig[i];
      enc.push_back(label[mirrored ? m.rotation_prev(d) : m.rotation_next(d)]);
      enc.push_back(label[m.reversal(d)]);
    }
    if (best.empty() || enc < best) best = std::move(enc);
  };

  for (DartId d : m.outer_cycle()) {
    consider(d, false);
    consider(m.reversal(d), true);
  }

  std::string out;
  out.reserve(best.size() * 2);
  for (int v : best) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return out;
}

namespace {

bool passes_filter(const CombinatorialMap& m, ClassFilter f) {
  if (f == ClassFilter::kNone) return true;
  Classification c = classify_map(m);
  switch (f) {
    case ClassFilter::kProperV6: return c.is_proper_v6;
    case ClassFilter::kProperC7: return c.is_proper_c7;
    case ClassFilter::kProperC4T4: return c.is_proper_c4t4;
    default: return true;
  }
}

// A state is dead when it already violates its target class in a way no
// further gluing can repair: region boundaries never change, and inner
// vertices and inner regions are frozen.
bool permanently_outside_class(const CombinatorialMap& m, ClassFilter f) {
  if (f == ClassFilter::kNone) return false;

  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (!m.vertex_is_inner(v)) continue;
    int val = m.vertex_valence(v);
    if (f == ClassFilter::kProperC4T4 && val < 4) return true;
    if (f != ClassFilter::kProperC4T4 && val == 2) return true;
  }

  const int min_edges = f == ClassFilter::kProperC7 ? 7 : 4;
  for (RegionId r = 0; r < m.region_count(); ++r) {
    const RegionProfile& p = m.region_profile(r);
    if (p.edge_count < min_edges) return true;
    if (f == ClassFilter::kProperV6 && p.is_inner) {
      int nbrs = static_cast<int>(p.neighbors.size());
      if (nbrs < 4) return true;
      if (nbrs < 6) {
        for (DartId d : m.region_boundary(r)) {
          VertexId v = m.vertex_of(d);
          if (m.vertex_is_inner(v) && m.vertex_valence(v) == 3) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

EnumStats enumerate_maps(const EnumConfig& cfg,
                         const std::function<void(const CombinatorialMap&)>& emit) {
  cfg.validate();
  EnumStats stats;
  std::set<std::string> seen;

  std::vector<CombinatorialMap> frontier;
  auto admit = [&](CombinatorialMap&& child, std::vector<CombinatorialMap>& next) {
    if (cfg.dedup) {
      std::string key = canonical_form(child);
      if (!seen.insert(std::move(key)).second) return;
    }
    if (child.boundary_length() <= cfg.max_boundary_length) {
      ++stats.generated;
      if (passes_filter(child, cfg.filter)) {
        ++stats.emitted;
        emit(child);
      }
    }
    if (!permanently_outside_class(child, cfg.filter)) next.push_back(std::move(child));
  };

  for (int k = cfg.min_region_edges; k <= cfg.max_region_edges; ++k)
    admit(polygon_map(k), frontier);

  const int max_shrink = cfg.max_region_edges - 2;
  for (int level = 1; level < cfg.max_regions; ++level) {
    std::vector<CombinatorialMap> next;
    const int remaining_after_child = cfg.max_regions - level - 1;
    for (const CombinatorialMap& m : frontier) {
      const int boundary = m.boundary_length();
      for (int k = cfg.min_region_edges; k <= cfg.max_region_edges; ++k) {
        for (int glue_len = 1; glue_len <= std::min(k - 1, boundary); ++glue_len) {
          const int child_boundary = boundary - glue_len + (k - glue_len);
          if (child_boundary - remaining_after_child * std::max(max_shrink, 0) >
              cfg.max_boundary_length)
            continue;
          for (int pos = 0; pos < boundary; ++pos)
            admit(glue_polygon(m, pos, glue_len, k), next);
        }
      }
    }
    frontier = std::move(next);
  }
  return stats;
}

std::vector<CombinatorialMap> enumerate_maps(const EnumConfig& cfg) {
  std::vector<CombinatorialMap> out;
  enumerate_maps(cfg, [&](const CombinatorialMap& m) { out.push_back(m); });
  return out;
}

std::vector<BoundaryDecomposition> enumerate_decompositions(const CombinatorialMap& m) {
  std::vector<BoundaryDecomposition> out;
  const auto outer = m.outer_cycle();
  const int n = static_cast<int>(outer.size());
  for (DartId base : outer) {
    for (int xi = 0; xi <= std::min(1, n); ++xi) {
      for (int tau = 0; tau <= 1 && xi + tau <= n; ++tau) {
        for (int mu = 0; mu + xi + tau <= n; ++mu)
          out.push_back(make_decomposition(m, base, xi, mu, tau));
      }
    }
  }
  return out;
}

}  // namespace vkmap

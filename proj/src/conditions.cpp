#include "vkmap/conditions.hpp"

#include <algorithm>
#include <set>

namespace vkmap {

const char* side_name(Side s) { return s == Side::kMu ? "mu" : "sigma"; }

const char* cut_corner_kind_name(CutCornerKind k) {
  switch (k) {
    case CutCornerKind::kT1: return "T1";
    case CutCornerKind::kT2: return "T2";
    case CutCornerKind::kT3: return "T3";
    case CutCornerKind::kT4: return "T4";
  }
  return "?";
}

Classification classify_map(const CombinatorialMap& m) {
  Classification c;

  bool no_inner_valence2 = true;
  bool no_inner_valence_lt4 = true;
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (!m.vertex_is_inner(v)) continue;
    int val = m.vertex_valence(v);
    if (val == 2) no_inner_valence2 = false;
    if (val < 4) no_inner_valence_lt4 = false;
  }

  bool v6 = true;
  bool boundary_clauses = true;
  bool all_ge7 = true;
  bool all_ge4 = true;
  for (RegionId r = 0; r < m.region_count(); ++r) {
    const RegionProfile& p = m.region_profile(r);
    if (p.edge_count < 7) all_ge7 = false;
    if (p.edge_count < 4) all_ge4 = false;

    bool has_valence3 = false;
    bool has_inner_valence3 = false;
    for (DartId d : m.region_boundary(r)) {
      VertexId v = m.vertex_of(d);
      if (m.vertex_valence(v) == 3) {
        has_valence3 = true;
        if (m.vertex_is_inner(v)) has_inner_valence3 = true;
      }
    }

    if (p.is_inner) {
      int n = static_cast<int>(p.neighbors.size());
      if (n < 4) v6 = false;
      if (has_valence3 && n < 6) v6 = false;
    } else {
      if (p.edge_count < 4) boundary_clauses = false;
      if (has_inner_valence3 && p.edge_count < 6) boundary_clauses = false;
    }
  }

  c.is_v6 = v6;
  c.is_proper_v6 = v6 && no_inner_valence2 && boundary_clauses;
  c.is_proper_c7 = all_ge7 && no_inner_valence2;
  c.is_proper_c4t4 = no_inner_valence_lt4 && all_ge4;
  return c;
}

namespace {

std::set<EdgeId> edge_set(const CombinatorialMap& m, std::span<const DartId> path) {
  std::set<EdgeId> out;
  for (DartId d : path) out.insert(m.edge_of(d));
  return out;
}

std::set<VertexId> closed_vertex_set(const CombinatorialMap& m, std::span<const DartId> path,
                                     VertexId fallback) {
  std::set<VertexId> out;
  if (path.empty()) {
    out.insert(fallback);
    return out;
  }
  for (DartId d : path) out.insert(m.vertex_of(d));
  out.insert(m.vertex_of(m.reversal(path.back())));
  return out;
}

void require_boundary_path(const CombinatorialMap& m, std::span<const DartId> host) {
  for (size_t i = 0; i < host.size(); ++i) {
    DartId d = host[i];
    if (d < 1 || d > m.dart_count())
      throw Error(Errc::kPathNotOnBoundary, "path mentions an unknown dart");
    if (!m.edge_on_boundary(m.edge_of(d)))
      throw Error(Errc::kPathNotOnBoundary, "path uses an edge off the boundary");
    if (i + 1 < host.size() && m.terminal_vertex(d) != m.initial_vertex(host[i + 1]))
      throw Error(Errc::kPathNotOnBoundary, "darts do not concatenate to a path");
  }
}

// Start positions where `needle` occurs in `hay` as a contiguous run.
std::vector<int> find_runs(std::span<const DartId> hay, std::span<const DartId> needle) {
  std::vector<int> out;
  if (needle.empty() || needle.size() > hay.size()) return out;
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (size_t j = 0; j < needle.size(); ++j)
      if (hay[i + j] != needle[j]) {
        match = false;
        break;
      }
    if (match) out.push_back(static_cast<int>(i));
  }
  return out;
}

// The bounded region incident to a boundary edge's dart, if any.
std::optional<RegionId> region_under(const CombinatorialMap& m, DartId d) {
  if (auto r = m.region_of(d)) return r;
  return m.region_of(m.reversal(d));
}

struct ArcMatch {
  int pos = 0;       // 0-based start within the host
  bool reversed = false;  // host runs against the region's boundary direction
};

bool path_is_closed(const CombinatorialMap& m, std::span<const DartId> path) {
  return !path.empty() && m.terminal_vertex(path.back()) == m.initial_vertex(path.front());
}

// Occurrences of a region-boundary subpath within the host, in either
// orientation. A closed arc (an outer boundary that is a full loop) has no
// distinguished start, so every rotation of it counts.
std::vector<ArcMatch> match_arc(const CombinatorialMap& m, std::span<const DartId> host,
                                std::span<const DartId> region_arc) {
  std::vector<ArcMatch> out;
  const bool closed = path_is_closed(m, region_arc);
  auto scan = [&](std::vector<DartId> needle, bool reversed) {
    const int rotations = closed ? static_cast<int>(needle.size()) : 1;
    for (int k = 0; k < rotations; ++k) {
      for (int pos : find_runs(host, needle)) out.push_back({pos, reversed});
      if (closed && !needle.empty())
        std::rotate(needle.begin(), needle.begin() + 1, needle.end());
    }
  };
  scan(inverse_path(m, region_arc), true);
  scan({region_arc.begin(), region_arc.end()}, false);
  std::sort(out.begin(), out.end(), [](const ArcMatch& a, const ArcMatch& b) {
    return a.pos < b.pos || (a.pos == b.pos && a.reversed < b.reversed);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ArcMatch& a, const ArcMatch& b) {
                          return a.pos == b.pos && a.reversed == b.reversed;
                        }),
            out.end());
  return out;
}

}  // namespace

bool is_thin(const CombinatorialMap& m, const BoundaryDecomposition& d, const ThinOptions& opts) {
  require_valid_decomposition(m, d);
  const auto mu_path = mu_side_path(d);
  const auto sigma_path = sigma_side_path(d);
  const VertexId basepoint = m.vertex_of(d.base);

  std::set<EdgeId> mu_edges = edge_set(m, mu_path);
  std::set<EdgeId> sigma_edges = edge_set(m, sigma_path);
  std::set<VertexId> mu_vertices, sigma_vertices;
  if (opts.vertex_contact_counts) {
    mu_vertices = closed_vertex_set(m, mu_path, basepoint);
    sigma_vertices = closed_vertex_set(m, sigma_path, basepoint);
  }

  for (RegionId r = 0; r < m.region_count(); ++r) {
    const RegionProfile& p = m.region_profile(r);
    if (p.neighbors.size() > 2) return false;

    bool meets_mu = false, meets_sigma = false;
    for (DartId dart : m.region_boundary(r)) {
      EdgeId e = m.edge_of(dart);
      if (mu_edges.count(e)) meets_mu = true;
      if (sigma_edges.count(e)) meets_sigma = true;
    }
    if (opts.vertex_contact_counts) {
      for (DartId dart : m.region_boundary(r)) {
        VertexId v = m.vertex_of(dart);
        if (mu_vertices.count(v)) meets_mu = true;
        if (sigma_vertices.count(v)) meets_sigma = true;
      }
    }
    if (!meets_mu || !meets_sigma) return false;
  }
  return true;
}

std::vector<CutCornerReport> find_cut_corners_on_path(const CombinatorialMap& m,
                                                      std::span<const DartId> host, Side tag) {
  require_boundary_path(m, host);
  std::vector<CutCornerReport> out;

  for (RegionId r = 0; r < m.region_count(); ++r) {
    const RegionProfile& p = m.region_profile(r);
    if (!p.is_proper_boundary) continue;
    if (p.outer_arcs.size() != 1) continue;
    const std::vector<DartId>& arc = p.outer_arcs.front();
    const int outer_edges = static_cast<int>(arc.size());
    const int inner_edges = p.edge_count - p.outer_edge_count;

    for (const ArcMatch& match : match_arc(m, host, arc)) {
      const int ell = match.pos + 1;
      std::optional<VertexId> corner;
      if (ell > 1) corner = m.vertex_of(host[match.pos]);
      const bool corner_valence3 = corner && m.vertex_valence(*corner) == 3;

      auto emit = [&](CutCornerKind kind, std::optional<RegionId> aux) {
        out.push_back(CutCornerReport{r, tag, kind, ell, outer_edges, inner_edges, aux, corner});
      };

      if (inner_edges < outer_edges) emit(CutCornerKind::kT1, std::nullopt);

      if (inner_edges == 2 && outer_edges == 2 && ell > 1 && corner_valence3)
        emit(CutCornerKind::kT2, std::nullopt);

      if (inner_edges == 3 && outer_edges == 3 && ell > 1 && corner_valence3) {
        auto prev_region = region_under(m, host[match.pos - 1]);
        bool prev_ok = prev_region && *prev_region != r &&
                       std::binary_search(p.neighbors.begin(), p.neighbors.end(), *prev_region);
        if (prev_ok && m.region_profile(*prev_region).edge_count <= 5)
          emit(CutCornerKind::kT3, prev_region);
        if (prev_ok && ell > 2) {
          auto prev2_region = region_under(m, host[match.pos - 2]);
          if (prev2_region && *prev2_region == *prev_region) emit(CutCornerKind::kT4, prev_region);
        }
      }
    }
  }
  return out;
}

std::vector<CutCornerReport> find_cut_corners(const CombinatorialMap& m,
                                              const BoundaryDecomposition& d, Side side) {
  require_valid_decomposition(m, d);
  std::vector<DartId> host = side == Side::kMu ? d.mu : d.sigma;
  return find_cut_corners_on_path(m, host, side);
}

std::vector<ThickConfigReport> find_thick_configurations(const CombinatorialMap& m,
                                                         std::span<const DartId> host) {
  require_boundary_path(m, host);
  std::vector<ThickConfigReport> out;
  const std::set<EdgeId> host_edges = edge_set(m, host);

  // Complementary boundary arc of `region` once `run_count` darts starting
  // at boundary position `q` are taken by mu; returned oriented so that
  // mu sigma^-1 traverses the region boundary.
  auto complement_path = [&](RegionId region, int q, int run_count,
                             bool reversed) -> std::vector<DartId> {
    auto boundary = m.region_boundary(region);
    const int n = static_cast<int>(boundary.size());
    std::vector<DartId> rest;
    for (int step = 0; step < n - run_count; ++step)
      rest.push_back(boundary[(q + run_count + step) % n]);
    return reversed ? rest : inverse_path(m, rest);
  };

  // Position of a dart run inside a region's cyclic boundary, if any.
  auto cyclic_run_start = [&](RegionId region, std::span<const DartId> run) -> std::optional<int> {
    auto boundary = m.region_boundary(region);
    const int n = static_cast<int>(boundary.size());
    if (static_cast<int>(run.size()) > n) return std::nullopt;
    for (int q = 0; q < n; ++q) {
      bool match = true;
      for (size_t j = 0; j < run.size(); ++j)
        if (boundary[(q + j) % n] != run[j]) {
          match = false;
          break;
        }
      if (match) return q;
    }
    return std::nullopt;
  };

  // Single-region configurations.
  for (RegionId r = 0; r < m.region_count(); ++r) {
    auto boundary = m.region_boundary(r);
    std::vector<int> host_positions;
    for (size_t i = 0; i < host.size(); ++i) {
      EdgeId e = m.edge_of(host[i]);
      bool in_region = false;
      for (DartId d : boundary)
        if (m.edge_of(d) == e) in_region = true;
      if (in_region) host_positions.push_back(static_cast<int>(i));
    }
    if (host_positions.empty()) continue;
    bool contiguous = true;
    for (size_t i = 1; i < host_positions.size(); ++i)
      if (host_positions[i] != host_positions[i - 1] + 1) contiguous = false;
    if (!contiguous) continue;

    int boundary_instances = 0;
    for (DartId d : boundary)
      if (host_edges.count(m.edge_of(d))) ++boundary_instances;
    const int len = static_cast<int>(host_positions.size());
    if (boundary_instances != len) continue;  // the overlap doubles back

    std::vector<DartId> mu(host.begin() + host_positions.front(),
                           host.begin() + host_positions.back() + 1);
    // A closed overlap is a full loop and may sit in the region's boundary
    // at any rotation.
    const bool closed = path_is_closed(m, mu);
    std::optional<int> q;
    bool reversed = false;
    auto align = [&](std::vector<DartId> needle, bool rev_flag) {
      const int rotations = closed ? static_cast<int>(needle.size()) : 1;
      for (int k = 0; k < rotations && !q; ++k) {
        if ((q = cyclic_run_start(r, needle))) reversed = rev_flag;
        if (!q && closed && !needle.empty())
          std::rotate(needle.begin(), needle.begin() + 1, needle.end());
      }
    };
    align(inverse_path(m, mu), true);
    if (!q) align(mu, false);
    if (!q) continue;  // overlap is not one arc of the boundary

    int sigma_len = static_cast<int>(boundary.size()) - len;
    if (len <= sigma_len) continue;
    std::vector<DartId> sigma = complement_path(r, *q, len, reversed);
    out.push_back(ThickConfigReport{ThickKind::kSingleRegion, r, std::nullopt, std::move(mu),
                                    std::move(sigma), std::nullopt});
  }

  // Two-region configurations.
  for (size_t i = 1; i + 1 < host.size(); ++i) {
    DartId e = host[i - 1];
    std::vector<DartId> mu{host[i], host[i + 1]};
    auto d2 = region_under(m, mu[0]);
    if (!d2 || region_under(m, mu[1]) != d2) continue;
    const RegionProfile& p2 = m.region_profile(*d2);
    if (p2.edge_count != 4) continue;

    std::optional<int> q;
    bool reversed = false;
    std::vector<DartId> as_region = inverse_path(m, mu);
    if ((q = cyclic_run_start(*d2, as_region))) {
      reversed = true;
    } else if ((q = cyclic_run_start(*d2, mu))) {
      reversed = false;
    }
    if (!q) continue;

    std::vector<DartId> sigma = complement_path(*d2, *q, 2, reversed);
    bool sigma_inner = true;
    for (DartId d : sigma)
      if (m.edge_on_boundary(m.edge_of(d))) sigma_inner = false;
    if (!sigma_inner) continue;

    auto d1 = region_under(m, e);
    if (!d1 || *d1 == *d2) continue;
    if (!std::binary_search(p2.neighbors.begin(), p2.neighbors.end(), *d1)) continue;

    out.push_back(ThickConfigReport{ThickKind::kTwoRegion, *d2, d1, std::move(mu),
                                    std::move(sigma), e});
  }

  return out;
}

std::vector<RegionId> c7_witnesses(const CombinatorialMap& m, const BoundaryDecomposition& d) {
  require_valid_decomposition(m, d);
  std::vector<RegionId> out;
  for (RegionId r = 0; r < m.region_count(); ++r) {
    const RegionProfile& p = m.region_profile(r);
    if (!p.is_proper_boundary) continue;
    if (p.neighbors.size() > 3) continue;
    if (p.outer_arcs.size() != 1) continue;
    const auto& arc = p.outer_arcs.front();
    if (!match_arc(m, d.mu, arc).empty() || !match_arc(m, d.sigma, arc).empty())
      out.push_back(r);
  }
  return out;
}

}  // namespace vkmap

#include "normgraph/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "normgraph/group_core.hpp"

namespace normgraph {

std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::commuting: return "commuting";
    case GraphKind::normalising: return "normalising";
    case GraphKind::permuting: return "permuting";
    case GraphKind::engel: return "engel";
    case GraphKind::soluble: return "soluble";
  }
  return "unknown";
}

GraphKind parse_graph_kind(const std::string& tag) {
  for (GraphKind k : kAllGraphKinds)
    if (to_string(k) == tag) return k;
  throw std::invalid_argument("unknown graph kind '" + tag + "'");
}

// ---------------------------------------------------------------------------
// Edge oracles

namespace {

bool in_product(const CyclicSubgroupTable& table, CyclicId a, CyclicId b, ElementId x) {
  // x in AB  <=>  alpha * x in B for some alpha in A
  const FiniteGroup& g = table.group();
  for (ElementId alpha : table.elements(a))
    if (table.contains(b, g.multiply(alpha, x))) return true;
  return false;
}

std::uint32_t intersection_order(const CyclicSubgroupTable& table, CyclicId a, CyclicId b) {
  auto ea = table.elements(a), eb = table.elements(b);
  std::uint32_t n = 0;
  auto i = ea.begin();
  auto j = eb.begin();
  while (i != ea.end() && j != eb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool engel_direction(const FiniteGroup& g, const SubgroupSet& a, const SubgroupSet& b) {
  std::vector<SubgroupSet> seen{b};
  SubgroupSet x = b;
  for (;;) {
    if (x.is_trivial()) return true;
    x = subgroup_commutator(g, x, a);
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) return x.is_trivial();
    seen.push_back(x);
  }
}

}  // namespace

bool permutes(const CyclicSubgroupTable& table, CyclicId a, CyclicId b) {
  if (table.normalised_by(b, table.canonical_generator(a)) || table.normalised_by(a, table.canonical_generator(b)))
    return true;
  const std::uint64_t product = static_cast<std::uint64_t>(table.order(a)) * table.order(b) /
                                intersection_order(table, a, b);
  if (table.group().order() % product != 0) return false;
  // AB = BA  <=>  B a ⊆ AB for the generator a of A.
  const FiniteGroup& g = table.group();
  const ElementId ga = table.canonical_generator(a);
  for (ElementId y : table.elements(b))
    if (!in_product(table, a, b, g.multiply(y, ga))) return false;
  return true;
}

bool engel_adjacent(const CyclicSubgroupTable& table, CyclicId a, CyclicId b) {
  const FiniteGroup& g = table.group();
  const SubgroupSet sa = table.subgroup(a), sb = table.subgroup(b);
  return engel_direction(g, sa, sb) || engel_direction(g, sb, sa);
}

bool adjacent(GraphKind kind, const CyclicSubgroupTable& table, CyclicId a, CyclicId b) {
  if (a == b) throw std::invalid_argument("adjacency is only defined for distinct vertices");
  const FiniteGroup& g = table.group();
  const ElementId x = table.canonical_generator(a), y = table.canonical_generator(b);
  switch (kind) {
    case GraphKind::commuting: return g.multiply(x, y) == g.multiply(y, x);
    case GraphKind::normalising: return table.normalised_by(b, x) || table.normalised_by(a, y);
    case GraphKind::permuting: return permutes(table, a, b);
    case GraphKind::engel: return engel_adjacent(table, a, b);
    case GraphKind::soluble: {
      const ElementId gens[] = {x, y};
      return is_soluble(g, closure(g, gens));
    }
  }
  return false;
}

bool CollapsedGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  auto nb = neighbours(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

// ---------------------------------------------------------------------------
// Checkpoints
//
// Layout (little-endian):
//   char[8]  magic "NGCKPT01"
//   u32      kind, vertex_count, row_count
//   u64      fingerprint of the cyclic-subgroup table
//   u8[ceil(row_count/8)]  bitmap of completed rows
//   records: u32 row, u32 length, u32[length] neighbours
// A row counts as done only once its bit is set, which happens after its
// record has been flushed.

namespace {

constexpr char kCheckpointMagic[8] = {'N', 'G', 'C', 'K', 'P', 'T', '0', '1'};

struct CheckpointHeader {
  std::uint32_t kind, vertex_count, row_count;
  std::uint64_t fingerprint;
};

constexpr std::size_t kBitmapOffset = 8 + 3 * 4 + 8;

std::uint64_t table_fingerprint(const CyclicSubgroupTable& table) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(table.group().order());
  mix(table.count());
  for (CyclicId id = 0; id < table.count(); ++id) {
    mix(table.canonical_generator(id));
    mix(table.order(id));
  }
  return h;
}

class Checkpoint {
 public:
  Checkpoint(const std::string& path, const CheckpointHeader& header,
             std::vector<std::vector<CyclicId>>& rows, std::vector<bool>& done)
      : path_(path), row_count_(header.row_count) {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      load(in, header, rows, done);
    } else {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw CheckpointError("cannot create checkpoint " + path);
      out.write(kCheckpointMagic, 8);
      write_u32(out, header.kind);
      write_u32(out, header.vertex_count);
      write_u32(out, header.row_count);
      out.write(reinterpret_cast<const char*>(&header.fingerprint), 8);
      const std::vector<char> bitmap((row_count_ + 7) / 8, 0);
      out.write(bitmap.data(), static_cast<std::streamsize>(bitmap.size()));
    }
    file_.open(path, std::ios::binary | std::ios::in | std::ios::out);
    if (!file_) throw CheckpointError("cannot open checkpoint " + path);
  }

  void record(std::uint32_t row, const std::vector<CyclicId>& neighbours) {
    std::lock_guard lock(mutex_);
    file_.seekp(0, std::ios::end);
    write_u32(file_, row);
    write_u32(file_, static_cast<std::uint32_t>(neighbours.size()));
    file_.write(reinterpret_cast<const char*>(neighbours.data()),
                static_cast<std::streamsize>(neighbours.size() * sizeof(CyclicId)));
    file_.flush();
    const std::streamoff byte_pos = static_cast<std::streamoff>(kBitmapOffset + row / 8);
    file_.seekg(byte_pos);
    char byte = 0;
    file_.read(&byte, 1);
    byte = static_cast<char>(byte | (1 << (row % 8)));
    file_.seekp(byte_pos);
    file_.write(&byte, 1);
    file_.flush();
    if (!file_) throw CheckpointError("failed writing checkpoint " + path_);
  }

 private:
  static void write_u32(std::ostream& out, std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); }
  static bool read_u32(std::istream& in, std::uint32_t& v) {
    return static_cast<bool>(in.read(reinterpret_cast<char*>(&v), 4));
  }

  void load(std::istream& in, const CheckpointHeader& header, std::vector<std::vector<CyclicId>>& rows,
            std::vector<bool>& done) {
    char magic[8];
    if (!in.read(magic, 8) || std::memcmp(magic, kCheckpointMagic, 8) != 0)
      throw CheckpointError("checkpoint " + path_ + " has a bad magic header");
    CheckpointHeader h{};
    if (!read_u32(in, h.kind) || !read_u32(in, h.vertex_count) || !read_u32(in, h.row_count) ||
        !in.read(reinterpret_cast<char*>(&h.fingerprint), 8))
      throw CheckpointError("checkpoint " + path_ + " has a truncated header");
    if (h.kind != header.kind || h.vertex_count != header.vertex_count || h.row_count != header.row_count ||
        h.fingerprint != header.fingerprint)
      throw CheckpointError("checkpoint " + path_ + " belongs to a different group or graph kind");
    std::vector<char> bitmap((row_count_ + 7) / 8);
    if (!in.read(bitmap.data(), static_cast<std::streamsize>(bitmap.size())))
      throw CheckpointError("checkpoint " + path_ + " has a truncated bitmap");
    std::uint32_t row = 0, len = 0;
    while (read_u32(in, row) && read_u32(in, len)) {
      if (row >= row_count_ || len > header.vertex_count)
        throw CheckpointError("checkpoint " + path_ + " has a corrupt row record");
      std::vector<CyclicId> nb(len);
      if (!in.read(reinterpret_cast<char*>(nb.data()), static_cast<std::streamsize>(len * sizeof(CyclicId))))
        break;
      if (bitmap[row / 8] & (1 << (row % 8))) {
        rows[row] = std::move(nb);
        done[row] = true;
      }
    }
  }

  std::string path_;
  std::uint32_t row_count_;
  std::fstream file_;
  std::mutex mutex_;
};

std::vector<CyclicId> compute_row(GraphKind kind, const SymmetryData& symmetry, std::uint32_t orbit) {
  const CyclicSubgroupTable& table = symmetry.table();
  const CyclicId rep = symmetry.orbits().representatives[orbit];
  const Suborbits sub = symmetry.suborbits(orbit);
  std::vector<char> hit(sub.representatives.size(), 0);
  for (std::size_t s = 0; s < sub.representatives.size(); ++s) {
    const CyclicId b = sub.representatives[s];
    if (b != rep) hit[s] = adjacent(kind, table, rep, b) ? 1 : 0;
  }
  std::vector<CyclicId> row;
  for (CyclicId id = 0; id < table.count(); ++id)
    if (id != rep && hit[sub.label[id]]) row.push_back(id);
  return row;
}

template <class Fn>
void parallel_for(std::uint32_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, count));
  if (threads == 1) {
    for (std::uint32_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint32_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::uint32_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::vector<CyclicId>> representative_rows(GraphKind kind, const SymmetryData& symmetry,
                                                       const BuildOptions& options) {
  const std::uint32_t row_count = symmetry.orbits().orbit_count();
  std::vector<std::vector<CyclicId>> rows(row_count);
  std::vector<bool> done(row_count, false);
  std::unique_ptr<Checkpoint> checkpoint;
  if (!options.checkpoint_path.empty()) {
    const CheckpointHeader header{static_cast<std::uint32_t>(kind), symmetry.table().count(), row_count,
                                  table_fingerprint(symmetry.table())};
    checkpoint = std::make_unique<Checkpoint>(options.checkpoint_path, header, rows, done);
  }
  std::vector<std::uint32_t> todo;
  for (std::uint32_t o = 0; o < row_count; ++o)
    if (!done[o]) todo.push_back(o);
  std::atomic<std::uint32_t> finished{row_count - static_cast<std::uint32_t>(todo.size())};
  std::mutex progress_mutex;
  parallel_for(static_cast<std::uint32_t>(todo.size()), options.threads, [&](std::uint32_t i) {
    const std::uint32_t o = todo[i];
    rows[o] = compute_row(kind, symmetry, o);
    if (checkpoint) checkpoint->record(o, rows[o]);
    const std::uint32_t n = ++finished;
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(n, row_count);
    }
  });
  return rows;
}

CollapsedGraph build_collapsed_graph(GraphKind kind, const SymmetryData& symmetry, const BuildOptions& options) {
  const CyclicSubgroupTable& table = symmetry.table();
  const OrbitDecomposition& orb = symmetry.orbits();
  const auto rows = representative_rows(kind, symmetry, options);

  CollapsedGraph graph;
  graph.kind = kind;
  graph.vertex_count = table.count();
  graph.offsets.assign(table.count() + 1, 0);
  for (CyclicId v = 0; v < table.count(); ++v)
    graph.offsets[v + 1] = graph.offsets[v] + rows[orb.orbit_of[v]].size();
  if (graph.offsets.back() > options.max_neighbor_entries)
    throw BudgetExceeded("graph needs " + std::to_string(graph.offsets.back()) +
                         " neighbour entries, budget is " + std::to_string(options.max_neighbor_entries));
  graph.neighbors.resize(graph.offsets.back());

  // Neighbours of rep^g are the conjugates by g of the neighbours of rep.
  constexpr std::uint32_t kBlock = 1024;
  const std::uint32_t blocks = (table.count() + kBlock - 1) / kBlock;
  parallel_for(blocks, options.threads, [&](std::uint32_t blk) {
    const CyclicId end = std::min(table.count(), (blk + 1) * kBlock);
    for (CyclicId v = blk * kBlock; v < end; ++v) {
      const auto& row = rows[orb.orbit_of[v]];
      const ElementId g = orb.transversal[v];
      std::uint32_t* out = graph.neighbors.data() + graph.offsets[v];
      if (g == kIdentity) {
        std::copy(row.begin(), row.end(), out);
      } else {
        for (std::size_t i = 0; i < row.size(); ++i) out[i] = table.conjugate_id(row[i], g);
        std::sort(out, out + row.size());
      }
    }
  });
  return graph;
}

CollapsedGraph build_collapsed_graph_exhaustive(GraphKind kind, const CyclicSubgroupTable& table) {
  std::vector<std::vector<std::uint32_t>> adj(table.count());
  for (CyclicId a = 0; a < table.count(); ++a)
    for (CyclicId b = a + 1; b < table.count(); ++b)
      if (adjacent(kind, table, a, b)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  CollapsedGraph graph;
  graph.kind = kind;
  graph.vertex_count = table.count();
  graph.offsets.assign(table.count() + 1, 0);
  for (CyclicId v = 0; v < table.count(); ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    graph.offsets[v + 1] = graph.offsets[v] + adj[v].size();
    graph.neighbors.insert(graph.neighbors.end(), adj[v].begin(), adj[v].end());
  }
  return graph;
}

// ---------------------------------------------------------------------------
// Traversal

std::vector<std::vector<std::uint32_t>> connected_components(const CollapsedGraph& graph) {
  std::vector<std::int32_t> comp(graph.vertex_count, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < graph.vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    const auto c = static_cast<std::int32_t>(out.size());
    std::vector<std::uint32_t> members{s};
    comp[s] = c;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::uint32_t u : graph.neighbours(members[i]))
        if (comp[u] < 0) {
          comp[u] = c;
          members.push_back(u);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

DistanceResult bfs(const CollapsedGraph& graph, std::uint32_t source) {
  if (source >= graph.vertex_count) throw std::out_of_range("bfs source out of range");
  DistanceResult r;
  r.source = source;
  r.distance.assign(graph.vertex_count, kUnreachable);
  r.parent.assign(graph.vertex_count, source);
  std::vector<std::uint32_t> queue{source};
  r.distance[source] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::uint32_t v = queue[i];
    for (std::uint32_t u : graph.neighbours(v))
      if (r.distance[u] == kUnreachable) {
        r.distance[u] = r.distance[v] + 1;
        r.parent[u] = v;
        queue.push_back(u);
      }
  }
  return r;
}

std::vector<std::int32_t> bfs_from_set(const CollapsedGraph& graph, std::span<const std::uint32_t> sources) {
  std::vector<std::int32_t> dist(graph.vertex_count, kUnreachable);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s : sources)
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::uint32_t u : graph.neighbours(queue[i]))
      if (dist[u] == kUnreachable) {
        dist[u] = dist[queue[i]] + 1;
        queue.push_back(u);
      }
  return dist;
}

Eccentricity eccentricity(const CollapsedGraph& graph, std::uint32_t source) {
  const DistanceResult r = bfs(graph, source);
  Eccentricity e;
  for (std::int32_t d : r.distance) {
    if (d == kUnreachable)
      e.all_reachable = false;
    else
      e.value = std::max(e.value, static_cast<std::uint32_t>(d));
  }
  return e;
}

std::vector<std::uint32_t> eccentricities(const CollapsedGraph& graph, std::span<const std::uint32_t> sources) {
  std::vector<std::uint32_t> ecc(sources.size(), 0);
  const std::uint32_t n = graph.vertex_count;
  std::vector<std::uint64_t> seen(n), frontier(n), next(n);
  for (std::size_t base = 0; base < sources.size(); base += 64) {
    const std::size_t batch = std::min<std::size_t>(64, sources.size() - base);
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (std::size_t i = 0; i < batch; ++i) {
      seen[sources[base + i]] |= std::uint64_t{1} << i;
      frontier[sources[base + i]] |= std::uint64_t{1} << i;
    }
    for (std::uint32_t level = 1;; ++level) {
      std::uint64_t reached = 0;
      for (std::uint32_t v = 0; v < n; ++v) {
        std::uint64_t acc = 0;
        for (std::uint32_t u : graph.neighbours(v)) acc |= frontier[u];
        acc &= ~seen[v];
        next[v] = acc;
        reached |= acc;
      }
      if (!reached) break;
      for (std::uint32_t v = 0; v < n; ++v) seen[v] |= next[v];
      frontier.swap(next);
      for (std::uint64_t m = reached; m; m &= m - 1) ecc[base + static_cast<std::size_t>(std::countr_zero(m))] = level;
    }
  }
  return ecc;
}

std::vector<std::uint32_t> shortest_path(const CollapsedGraph& graph, std::uint32_t from, std::uint32_t to) {
  const DistanceResult r = bfs(graph, from);
  if (r.distance[to] == kUnreachable) return {};
  std::vector<std::uint32_t> path{to};
  while (path.back() != from) path.push_back(r.parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

DiameterResult diameter(const CollapsedGraph& graph, const CyclicSubgroupTable& table,
                        const OrbitDecomposition& orbits) {
  DiameterResult out;
  const auto components = connected_components(graph);
  out.component_count = static_cast<std::uint32_t>(components.size());
  out.connected = components.size() <= 1;

  const std::vector<std::uint32_t> ecc = eccentricities(graph, orbits.representatives);
  std::uint32_t best_orbit = 0;
  for (std::uint32_t o = 0; o < ecc.size(); ++o)
    if (ecc[o] > ecc[best_orbit]) best_orbit = o;

  auto lone_vertex_diameter = [&](std::uint32_t v) { return table.generators(v).size() > 1 ? 1u : 0u; };
  for (const auto& comp : components) {
    std::uint32_t d = 0;
    for (std::uint32_t v : comp) d = std::max(d, ecc[orbits.orbit_of[v]]);
    if (d == 0) d = lone_vertex_diameter(comp.front());
    out.component_diameters.push_back(d);
  }
  if (!ecc.empty()) {
    out.collapsed_diameter = ecc[best_orbit];
    out.witness_source = orbits.representatives[best_orbit];
    const DistanceResult r = bfs(graph, out.witness_source);
    out.witness_target = out.witness_source;
    for (std::uint32_t v = 0; v < graph.vertex_count; ++v)
      if (r.distance[v] == static_cast<std::int32_t>(out.collapsed_diameter)) {
        out.witness_target = v;
        break;
      }
  }
  out.diameter = out.connected && !out.component_diameters.empty() ? out.component_diameters.front()
                                                                    : out.collapsed_diameter;
  return out;
}

std::vector<std::int32_t> distances_to_subset(const CollapsedGraph& graph, const CyclicSubgroupTable& table,
                                              const SubgroupSet& h) {
  if (h.is_trivial()) throw std::invalid_argument("distance to the trivial subgroup is undefined");
  std::vector<std::uint32_t> sources;
  for (ElementId x : h.elements())
    if (x != kIdentity) sources.push_back(table.id_of(x));
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  return bfs_from_set(graph, sources);
}

std::optional<std::uint32_t> distance_to_subset(const CollapsedGraph& graph, const CyclicSubgroupTable& table,
                                                ElementId x, const SubgroupSet& h) {
  if (x == kIdentity) throw std::invalid_argument("the identity is not a vertex");
  if (h.is_trivial()) throw std::invalid_argument("distance to the trivial subgroup is undefined");
  if (h.contains(x)) return 0u;
  const std::int32_t d = distances_to_subset(graph, table, h)[table.id_of(x)];
  if (d == kUnreachable) return std::nullopt;
  return static_cast<std::uint32_t>(d);
}

void write_edge_list(const CollapsedGraph& graph, std::ostream& out) {
  out << to_string(graph.kind) << ' ' << graph.vertex_count << ' ' << graph.edge_count() << '\n';
  for (std::uint32_t v = 0; v < graph.vertex_count; ++v)
    for (std::uint32_t u : graph.neighbours(v))
      if (v < u) out << v << ' ' << u << '\n';
}

}  // namespace normgraph

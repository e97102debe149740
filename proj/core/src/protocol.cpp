#include "bim/protocol.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "bim/combinatorics.hpp"

namespace bim {

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::IC: return "ic";
    case Pattern::IAS: return "ias";
    case Pattern::IIS: return "iis";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "ic") return Pattern::IC;
  if (lower == "ias") return Pattern::IAS;
  if (lower == "iis") return Pattern::IIS;
  return std::nullopt;
}

std::string view_label(const Simplex& view) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < view.size(); ++i) os << (i ? "," : "") << view[i];
  os << '}';
  return os.str();
}

namespace {

using Mask = std::uint32_t;

// Participants of one round: position i runs for simplex[i].
struct Round {
  std::vector<Vid> vids;
  std::vector<Color> colors;

  std::size_t size() const { return vids.size(); }

  std::size_t position(Color color) const {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] == color) return i;
    }
    throw Error(ErrorKind::InvalidParameters,
                "process " + std::to_string(color.value) + " does not take part in this round");
  }

  GlobalView to_view(const std::vector<Mask>& seen) const {
    GlobalView g;
    for (std::size_t i = 0; i < size(); ++i) {
      Simplex s;
      for (std::size_t j = 0; j < size(); ++j) {
        if (seen[i] & (1u << j)) s.push_back(vids[j]);
      }
      g.views[colors[i]] = std::move(s);
    }
    return g;
  }

  std::vector<Mask> to_masks(const GlobalView& g) const {
    std::vector<Mask> seen(size(), 0);
    if (g.views.size() != size()) {
      throw Error(ErrorKind::InvalidParameters, "global view does not match the participants");
    }
    for (std::size_t i = 0; i < size(); ++i) {
      auto it = g.views.find(colors[i]);
      if (it == g.views.end()) throw Error(ErrorKind::InvalidParameters, "missing process view");
      for (Vid v : it->second) {
        auto pos = std::find(vids.begin(), vids.end(), v);
        if (pos == vids.end()) throw Error(ErrorKind::InvalidParameters, "foreign vid in view");
        seen[i] |= 1u << (pos - vids.begin());
      }
    }
    return seen;
  }
};

Round participants(const ChromaticComplex& c, const Simplex& simplex) {
  const Simplex s = make_simplex(simplex);
  if (s.empty() || !c.contains_face(s)) {
    throw Error(ErrorKind::NotAFacet, "input simplex " + view_label(s) + " is not a face");
  }
  Round r;
  for (Vid v : s) {
    r.vids.push_back(v);
    r.colors.push_back(c.color(v));
  }
  return r;
}

bool misses_acyclic(const std::vector<Mask>& seen) {
  const std::size_t k = seen.size();
  const Mask all = (1u << k) - 1u;
  // Edge i -> j when i missed j; peel vertices with no outgoing edge left.
  Mask alive = all;
  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(alive & (1u << i))) continue;
      const Mask missed = ~seen[i] & alive;
      if (missed == 0) {
        alive &= ~(1u << i);
        progress = true;
      }
    }
  }
  return alive == 0;
}

bool chain_ordered(const std::vector<Mask>& seen) {
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (std::size_t j = i + 1; j < seen.size(); ++j) {
      const Mask a = seen[i];
      const Mask b = seen[j];
      if ((a & b) != a && (a & b) != b) return false;
    }
  }
  return true;
}

constexpr std::size_t kMaxClosedFormProcesses = 5;

}  // namespace

ViewSet round_views(const ChromaticComplex& c, const Simplex& simplex, Pattern p) {
  const Round r = participants(c, simplex);
  const std::size_t k = r.size();
  ViewSet out;
  if (p == Pattern::IIS) {
    for (const auto& ranks : ordered_partitions(k)) {
      std::vector<Mask> seen(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (ranks[j] <= ranks[i]) seen[i] |= 1u << j;
        }
      }
      out.insert(r.to_view(seen));
    }
    return out;
  }
  if (k > kMaxClosedFormProcesses) {
    throw Error(ErrorKind::ResourceLimit, "closed-form IC/IAS enumeration capped at " +
                                              std::to_string(kMaxClosedFormProcesses) +
                                              " processes");
  }
  // Each process sees itself plus any subset of the others.
  const std::size_t free_bits = k * (k - 1);
  std::vector<Mask> seen(k, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits); ++code) {
    std::size_t bit = 0;
    for (std::size_t i = 0; i < k; ++i) {
      seen[i] = 1u << i;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        if (code & (std::uint64_t{1} << bit)) seen[i] |= 1u << j;
        ++bit;
      }
    }
    const bool ok = p == Pattern::IC ? misses_acyclic(seen) : chain_ordered(seen);
    if (ok) out.insert(r.to_view(seen));
  }
  return out;
}

namespace {

class OracleSearch {
 public:
  OracleSearch(std::size_t k, Pattern p) : k_(k), p_(p), wrote_(k, false), done_(k, 0), seen_(k, 0) {}

  std::set<std::vector<Mask>> run() {
    if (p_ == Pattern::IIS) {
      immediate((1u << k_) - 1u);
    } else {
      step();
    }
    return results_;
  }

 private:
  // IC: done_ holds registers already read. IAS: done_ != 0 once snapshotted.
  void step() {
    bool finished = true;
    for (std::size_t i = 0; i < k_; ++i) {
      if (!wrote_[i]) {
        finished = false;
        wrote_[i] = true;
        step();
        wrote_[i] = false;
        continue;
      }
      if (p_ == Pattern::IC) {
        for (std::size_t j = 0; j < k_; ++j) {
          if (done_[i] & (1u << j)) continue;
          finished = false;
          const Mask before = seen_[i];
          done_[i] |= 1u << j;
          if (wrote_[j]) seen_[i] |= 1u << j;
          step();
          done_[i] &= ~(1u << j);
          seen_[i] = before;
        }
      } else if (done_[i] == 0) {
        finished = false;
        Mask snap = 0;
        for (std::size_t j = 0; j < k_; ++j) {
          if (wrote_[j]) snap |= 1u << j;
        }
        done_[i] = 1;
        seen_[i] = snap;
        step();
        done_[i] = 0;
        seen_[i] = 0;
      }
    }
    if (finished) results_.insert(seen_);
  }

  // IIS: a nonempty group of remaining processes writes, then all of it snapshots.
  void immediate(Mask remaining) {
    if (remaining == 0) {
      results_.insert(seen_);
      return;
    }
    for (Mask group = remaining; group != 0; group = (group - 1) & remaining) {
      for (std::size_t i = 0; i < k_; ++i) {
        if (group & (1u << i)) wrote_[i] = true;
      }
      Mask memory = 0;
      for (std::size_t j = 0; j < k_; ++j) {
        if (wrote_[j]) memory |= 1u << j;
      }
      for (std::size_t i = 0; i < k_; ++i) {
        if (group & (1u << i)) seen_[i] = memory;
      }
      immediate(remaining & ~group);
      for (std::size_t i = 0; i < k_; ++i) {
        if (group & (1u << i)) {
          wrote_[i] = false;
          seen_[i] = 0;
        }
      }
    }
  }

  std::size_t k_;
  Pattern p_;
  std::vector<bool> wrote_;
  std::vector<Mask> done_;
  std::vector<Mask> seen_;
  std::set<std::vector<Mask>> results_;
};

}  // namespace

ViewSet schedule_oracle(const ChromaticComplex& c, const Simplex& simplex, Pattern p) {
  const Round r = participants(c, simplex);
  const std::size_t cap = p == Pattern::IC ? 3 : 4;
  if (r.size() > cap) {
    throw Error(ErrorKind::ResourceLimit, "schedule oracle for " + std::string(to_string(p)) +
                                              " is capped at " + std::to_string(cap) +
                                              " processes");
  }
  ViewSet out;
  for (const auto& seen : OracleSearch(r.size(), p).run()) out.insert(r.to_view(seen));
  return out;
}

GlobalView evaluate_schedule(const ChromaticComplex& c, const Simplex& simplex, Pattern p,
                             const Schedule& schedule) {
  const Round r = participants(c, simplex);
  const std::size_t k = r.size();
  std::vector<bool> wrote(k, false);
  std::vector<Mask> reads_done(k, 0);
  std::vector<bool> finished(k, false);
  std::vector<Mask> seen(k, 0);
  auto memory = [&] {
    Mask m = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (wrote[j]) m |= 1u << j;
    }
    return m;
  };
  auto violation = [](const std::string& what) {
    return Error(ErrorKind::InvalidParameters, "schedule violates program order: " + what);
  };
  const auto& ev = schedule.events;
  for (std::size_t idx = 0; idx < ev.size(); ++idx) {
    const std::size_t i = r.position(ev[idx].process);
    switch (ev[idx].kind) {
      case EventKind::Write:
        if (p == Pattern::IIS || wrote[i]) throw violation("unexpected write");
        wrote[i] = true;
        break;
      case EventKind::Read: {
        if (p != Pattern::IC || !wrote[i]) throw violation("read before write");
        const std::size_t j = r.position(ev[idx].target);
        if (reads_done[i] & (1u << j)) throw violation("register read twice");
        reads_done[i] |= 1u << j;
        if (wrote[j]) seen[i] |= 1u << j;
        if (reads_done[i] == (1u << k) - 1u) finished[i] = true;
        break;
      }
      case EventKind::Snapshot:
        if (p != Pattern::IAS || !wrote[i] || finished[i]) throw violation("bad snapshot");
        seen[i] = memory();
        finished[i] = true;
        break;
      case EventKind::ImmediateSnapshot: {
        if (p != Pattern::IIS) throw violation("immediate snapshot outside IIS");
        std::size_t end = idx;
        while (end < ev.size() && ev[end].kind == EventKind::ImmediateSnapshot &&
               ev[end].block == ev[idx].block) {
          ++end;
        }
        std::vector<std::size_t> group;
        for (std::size_t e = idx; e < end; ++e) {
          const std::size_t g = r.position(ev[e].process);
          if (wrote[g]) throw violation("process scheduled twice");
          wrote[g] = true;
          group.push_back(g);
        }
        for (std::size_t g : group) {
          seen[g] = memory();
          finished[g] = true;
        }
        idx = end - 1;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!finished[i]) throw violation("process " + std::to_string(r.colors[i].value) + " unfinished");
  }
  return r.to_view(seen);
}

Schedule witness_schedule(const ChromaticComplex& c, const Simplex& simplex, Pattern p,
                          const GlobalView& view) {
  const Round r = participants(c, simplex);
  const std::size_t k = r.size();
  const std::vector<Mask> seen = r.to_masks(view);
  for (std::size_t i = 0; i < k; ++i) {
    if (!(seen[i] & (1u << i))) throw Error(ErrorKind::InvalidParameters, "view lacks self");
  }
  Schedule s;
  if (p == Pattern::IC) {
    if (!misses_acyclic(seen)) {
      throw Error(ErrorKind::InvalidParameters, "misses digraph has a cycle");
    }
    // Topological order of "i missed j" edges: i comes first.
    std::vector<std::size_t> order;
    Mask placed = 0;
    while (order.size() < k) {
      for (std::size_t i = 0; i < k; ++i) {
        if (placed & (1u << i)) continue;
        bool ready = true;
        for (std::size_t h = 0; h < k; ++h) {
          if (h != i && !(placed & (1u << h)) && !(seen[h] & (1u << i))) ready = false;
        }
        if (ready) {
          order.push_back(i);
          placed |= 1u << i;
          break;
        }
      }
    }
    for (std::size_t i : order) {
      s.events.push_back({EventKind::Write, r.colors[i], {}, 0});
      for (std::size_t j = 0; j < k; ++j) {
        if (!(seen[i] & (1u << j))) s.events.push_back({EventKind::Read, r.colors[i], r.colors[j], 0});
      }
    }
    for (std::size_t i : order) {
      for (std::size_t j = 0; j < k; ++j) {
        if (seen[i] & (1u << j)) s.events.push_back({EventKind::Read, r.colors[i], r.colors[j], 0});
      }
    }
    return s;
  }
  if (!chain_ordered(seen)) throw Error(ErrorKind::InvalidParameters, "views are not a chain");
  std::vector<Mask> levels(seen.begin(), seen.end());
  std::sort(levels.begin(), levels.end(),
            [](Mask a, Mask b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Mask written = 0;
  for (std::uint32_t lv = 0; lv < levels.size(); ++lv) {
    const Mask fresh = levels[lv] & ~written;
    if (p == Pattern::IIS) {
      for (std::size_t i = 0; i < k; ++i) {
        const bool in_block = seen[i] == levels[lv];
        if (in_block != static_cast<bool>(fresh & (1u << i))) {
          throw Error(ErrorKind::InvalidParameters, "views are not an ordered partition");
        }
        if (in_block) s.events.push_back({EventKind::ImmediateSnapshot, r.colors[i], {}, lv});
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (fresh & (1u << i)) s.events.push_back({EventKind::Write, r.colors[i], {}, 0});
      }
      for (std::size_t i = 0; i < k; ++i) {
        if (seen[i] == levels[lv]) s.events.push_back({EventKind::Snapshot, r.colors[i], {}, 0});
      }
    }
    written |= levels[lv];
  }
  return s;
}

ProtocolBuilder::ProtocolBuilder(Pattern pattern, Vid first_fresh, Limits limits)
    : pattern_(pattern), root_(first_fresh), limits_(limits) {}

ProtocolBuilder::ProtocolBuilder(Pattern pattern, const ChromaticComplex& ambient, Limits limits)
    : ProtocolBuilder(pattern, ambient.vertices().empty() ? 0 : ambient.vertices().back().vid + 1,
                      limits) {}

ChromaticComplex ProtocolBuilder::apply(const ChromaticComplex& input, std::size_t rounds) {
  if (rounds == 0) throw Error(ErrorKind::InvalidParameters, "rounds must be >= 1");
  ChromaticComplex current = input;
  for (std::size_t level = 0; level < rounds; ++level) current = one_round(current, level);
  return current;
}

ChromaticComplex ProtocolBuilder::one_round(const ChromaticComplex& input, std::size_t level) {
  while (levels_.size() <= level) levels_.push_back(root_.sibling());
  VertexRegistry& registry = levels_[level];
  std::vector<Simplex> simplices;
  for (const auto& f : input.facets()) {
    for (const auto& g : round_views(input, f, pattern_)) {
      if (simplices.size() >= limits_.max_facets) {
        throw Error(ErrorKind::ResourceLimit, "protocol complex exceeds " +
                                                  std::to_string(limits_.max_facets) + " facets");
      }
      Simplex s;
      for (const auto& [color, view] : g.views) {
        const std::string label = view_label(view);
        const Vid own = *std::find_if(f.begin(), f.end(),
                                      [&](Vid v) { return input.color(v) == color; });
        if (view.size() == 1) registry.pin(color, label, label, own);
        s.push_back(registry.intern(color, label, label));
      }
      simplices.push_back(make_simplex(std::move(s)));
    }
  }
  return registry.complex(input.n(), std::move(simplices));
}

ChromaticComplex protocol_complex(const ChromaticComplex& c, Pattern p, std::size_t rounds,
                                  const Limits& limits) {
  ProtocolBuilder builder(p, c, limits);
  return builder.apply(c, rounds);
}

bool check_no_input_edges(const ChromaticComplex& c, Pattern p) {
  const ChromaticComplex xi = protocol_complex(c, p, 1);
  for (const auto& vx : xi.vertices()) {
    if (!c.has_vertex(vx.vid)) continue;
    for (Vid u : xi.neighbors(vx.vid)) {
      if (c.has_vertex(u)) return false;
    }
  }
  return true;
}

bool intersection_preserved(const ChromaticComplex& ambient, const ChromaticComplex& a,
                            const ChromaticComplex& b, Pattern p, std::size_t rounds) {
  ProtocolBuilder builder(p, ambient);
  const ChromaticComplex common = intersect(a, b);
  const ChromaticComplex xa = a.empty() ? ChromaticComplex{} : builder.apply(a, rounds);
  const ChromaticComplex xb = b.empty() ? ChromaticComplex{} : builder.apply(b, rounds);
  const ChromaticComplex xab = common.empty() ? ChromaticComplex{} : builder.apply(common, rounds);
  return intersect(xa, xb) == xab;
}

namespace {

ChromaticComplex random_subcomplex(const ChromaticComplex& c, std::mt19937_64& rng) {
  std::vector<Simplex> gens;
  for (const auto& f : c.facets()) {
    switch (rng() % 3) {
      case 0: break;
      case 1: gens.push_back(f); break;
      default: {
        Simplex part;
        for (Vid v : f) {
          if (rng() % 2) part.push_back(v);
        }
        if (!part.empty()) gens.push_back(part);
      }
    }
  }
  return c.subcomplex(gens);
}

}  // namespace

bool check_intersection_preserving(const ChromaticComplex& c, Pattern p, std::size_t trials,
                                   std::uint64_t seed, std::size_t rounds) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const ChromaticComplex a = random_subcomplex(c, rng);
    const ChromaticComplex b = random_subcomplex(c, rng);
    if (!intersection_preserved(c, a, b, p, rounds)) return false;
  }
  return true;
}

}  // namespace bim

#include "bim/bounded_sim.hpp"

#include <algorithm>
#include <sstream>

#include "bim/greedy_star.hpp"

namespace bim {

void MemoryLayer::write(Color writer, EncodingValue value) {
  if (written_.at(writer.value)) {
    throw Error(ErrorKind::InvalidParameters,
                "cell " + std::to_string(writer.value) + " written twice in one round");
  }
  written_[writer.value] = true;
  cells_[writer.value] = value;
}

std::optional<Vid> decode(const SimProcessState& reader, Color source, EncodingValue value,
                          const EncodingFunction& w, const ChromaticComplex& c) {
  if (!value) return std::nullopt;
  std::optional<Vid> found;
  for (Vid x : c.neighbors(reader.input_vertex)) {
    if (c.color(x) != source || w(x) != value) continue;
    if (found) {
      throw Error(ErrorKind::AmbiguousDecode,
                  "reader " + std::to_string(reader.input_vertex) + " sees code " +
                      std::to_string(*value) + " on vertices " + std::to_string(*found) +
                      " and " + std::to_string(x));
    }
    found = x;
  }
  return found;
}

std::vector<SimProcessState> initial_states(const ChromaticComplex& c, const Simplex& facet) {
  std::vector<SimProcessState> out;
  for (Vid v : make_simplex(facet)) {
    SimProcessState s;
    s.color = c.color(v);
    s.input_vertex = v;
    s.knowledge = {v};
    out.push_back(std::move(s));
  }
  return out;
}

void run_round(const ChromaticComplex& c, const Simplex& facet, const EncodingFunction& w,
               const Schedule& schedule, std::size_t round, std::vector<SimProcessState>& states,
               DecodePolicy policy) {
  const Simplex f = make_simplex(facet);
  if (states.size() != f.size()) {
    throw Error(ErrorKind::InvalidParameters, "state vector does not match the facet");
  }
  auto slot = [&](Color color) -> std::size_t {
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].color == color) return i;
    }
    throw Error(ErrorKind::InvalidParameters,
                "process " + std::to_string(color.value) + " is not in this run");
  };

  MemoryLayer memory(c.n());
  std::vector<bool> wrote(states.size(), false);
  std::vector<std::vector<std::pair<Color, EncodingValue>>> seen(states.size());
  for (const auto& ev : schedule.events) {
    const std::size_t i = slot(ev.process);
    if (ev.kind == EventKind::Write) {
      memory.write(ev.process, w(states[i].input_vertex));
      wrote[i] = true;
    } else if (ev.kind == EventKind::Read) {
      if (!wrote[i]) throw Error(ErrorKind::InvalidParameters, "read before own write");
      seen[i].emplace_back(ev.target, memory.read(ev.target));
    } else {
      throw Error(ErrorKind::InvalidParameters, "bounded runs use collect events only");
    }
  }

  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!wrote[i] || seen[i].size() != f.size()) {
      throw Error(ErrorKind::InvalidParameters, "process did not finish its round");
    }
    SimProcessState& s = states[i];
    if (!w(s.input_vertex)) continue;
    for (const auto& [source, value] : seen[i]) {
      if (source == s.color || !value) continue;
      try {
        if (auto x = decode(s, source, value, w, c)) s.knowledge.insert(*x);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::AmbiguousDecode || policy == DecodePolicy::Strict) throw;
        s.raw.insert(RawToken{source, *value, round});
      }
    }
  }
}

GlobalView run_bounded(const ChromaticComplex& c, const Simplex& facet, const EncodingSequence& ws,
                       const std::vector<Schedule>& schedules, DecodePolicy policy) {
  if (schedules.size() != ws.size()) {
    throw Error(ErrorKind::InvalidParameters, "need one schedule per encoding function");
  }
  std::vector<SimProcessState> states = initial_states(c, facet);
  for (std::size_t k = 0; k < ws.size(); ++k) run_round(c, facet, ws[k], schedules[k], k, states, policy);
  GlobalView g;
  for (const auto& s : states) g.views[s.color] = Simplex(s.knowledge.begin(), s.knowledge.end());
  return g;
}

std::string state_label(const SimProcessState& s) {
  std::string out = view_label(Simplex(s.knowledge.begin(), s.knowledge.end()));
  if (!s.raw.empty()) {
    std::ostringstream os;
    os << "+[";
    bool first = true;
    for (const auto& t : s.raw) {
      os << (first ? "" : ",") << t.source.value << ':' << t.code << '@' << t.round;
      first = false;
    }
    os << ']';
    out += os.str();
  }
  return out;
}

std::set<std::vector<SimProcessState>> reachable_states(const ChromaticComplex& c,
                                                        const Simplex& facet,
                                                        const EncodingSequence& ws,
                                                        DecodePolicy policy, const Limits& limits) {
  std::vector<Schedule> schedules;
  for (const auto& g : round_views(c, facet, Pattern::IC)) {
    schedules.push_back(witness_schedule(c, facet, Pattern::IC, g));
  }
  std::set<std::vector<SimProcessState>> current{initial_states(c, facet)};
  for (std::size_t k = 0; k < ws.size(); ++k) {
    std::set<std::vector<SimProcessState>> next;
    for (const auto& states : current) {
      for (const auto& schedule : schedules) {
        std::vector<SimProcessState> copy = states;
        run_round(c, facet, ws[k], schedule, k, copy, policy);
        next.insert(std::move(copy));
        if (next.size() > limits.max_facets) {
          throw Error(ErrorKind::ResourceLimit, "bounded run exceeds " +
                                                    std::to_string(limits.max_facets) +
                                                    " state vectors");
        }
      }
    }
    current = std::move(next);
  }
  return current;
}

ChromaticComplex bounded_protocol_complex(const ChromaticComplex& c,
                                          const std::vector<Simplex>& faces,
                                          const EncodingSequence& ws, VertexRegistry& registry,
                                          DecodePolicy policy, const Limits& limits) {
  std::vector<Simplex> simplices;
  for (const auto& face : faces) {
    for (const auto& states : reachable_states(c, face, ws, policy, limits)) {
      Simplex s;
      for (const auto& st : states) {
        const std::string label = state_label(st);
        if (st.raw.empty() && st.knowledge.size() == 1) {
          registry.pin(st.color, label, label, st.input_vertex);
        }
        s.push_back(registry.intern(st.color, label, label));
      }
      simplices.push_back(make_simplex(std::move(s)));
      if (simplices.size() > limits.max_facets) {
        throw Error(ErrorKind::ResourceLimit, "bounded protocol complex exceeds " +
                                                  std::to_string(limits.max_facets) + " facets");
      }
    }
  }
  return registry.complex(c.n(), std::move(simplices));
}

ChromaticComplex bounded_protocol_complex(const ChromaticComplex& c, const EncodingSequence& ws,
                                          DecodePolicy policy, const Limits& limits) {
  VertexRegistry registry(c.vertices().empty() ? 0 : c.vertices().back().vid + 1);
  return bounded_protocol_complex(c, {c.facets().begin(), c.facets().end()}, ws, registry, policy,
                                  limits);
}

namespace {

struct SharedEdgeRun {
  ChromaticComplex xi_alpha;
  ChromaticComplex xi_beta;
  ChromaticComplex xi_shared;
  std::optional<Vertex> merged;
  bool preserved = false;
};

SharedEdgeRun run_pair(const ChromaticComplex& c, const Simplex& alpha, const Simplex& beta,
                       const Simplex& shared, const EncodingSequence& ws) {
  VertexRegistry registry(c.vertices().back().vid + 1);
  SharedEdgeRun r;
  r.xi_alpha = bounded_protocol_complex(c, {alpha}, ws, registry, DecodePolicy::Permissive);
  r.xi_beta = bounded_protocol_complex(c, {beta}, ws, registry, DecodePolicy::Permissive);
  r.xi_shared = bounded_protocol_complex(c, {shared}, ws, registry, DecodePolicy::Permissive);
  const ChromaticComplex meet = intersect(r.xi_alpha, r.xi_beta);
  for (const auto& vx : meet.vertices()) {
    if (!r.xi_shared.has_vertex(vx.vid)) {
      r.merged = vx;
      break;
    }
  }
  r.preserved = meet == r.xi_shared;
  return r;
}

}  // namespace

CounterexampleReport shared_code_counterexample() {
  CounterexampleReport rep;
  rep.complex = ChromaticComplex::build(3,
                                        {{0, Color{0}, "a1"},
                                         {1, Color{0}, "a2"},
                                         {2, Color{1}, "p1"},
                                         {3, Color{2}, "p2"}},
                                        {{0, 2, 3}, {1, 2, 3}});
  rep.alpha = {0, 2, 3};
  rep.beta = {1, 2, 3};
  rep.shared = {2, 3};
  rep.sequence = {EncodingFunction({{0, 1}, {1, 1}, {2, 1}, {3, 1}})};
  rep.repaired = {EncodingFunction({{0, 1}, {1, 2}, {2, 1}, {3, 1}})};

  SharedEdgeRun broken = run_pair(rep.complex, rep.alpha, rep.beta, rep.shared, rep.sequence);
  rep.xi_alpha = std::move(broken.xi_alpha);
  rep.xi_beta = std::move(broken.xi_beta);
  rep.xi_shared = std::move(broken.xi_shared);
  rep.merged = broken.merged;
  rep.intersection_preserved = broken.preserved;

  SharedEdgeRun fixed = run_pair(rep.complex, rep.alpha, rep.beta, rep.shared, rep.repaired);
  rep.repaired_merged = fixed.merged;
  rep.repaired_intersection_preserved = fixed.preserved;
  rep.repaired_isomorphic = is_isomorphic(bounded_protocol_complex(rep.complex, rep.repaired),
                                          protocol_complex(rep.complex, Pattern::IC, 1));
  return rep;
}

PipelineResult iterate_pipeline(const ChromaticComplex& c, std::size_t iterations, unsigned bits,
                                const Limits& limits) {
  if (iterations == 0) throw Error(ErrorKind::InvalidParameters, "iterations must be >= 1");
  PipelineResult out;
  out.complex = c;
  for (std::size_t i = 0; i < iterations; ++i) {
    out.lower_bounds.push_back(lower_bound_rounds(out.complex, bits));
    const EncodingSequence ws = split_to_budget(greedy_star(out.complex).sequence, out.complex, bits);
    out.rounds_per_iteration.push_back(ws.size());
    out.total_rounds += ws.size();
    out.complex = bounded_protocol_complex(out.complex, ws, DecodePolicy::Strict, limits);
  }
  return out;
}

}  // namespace bim

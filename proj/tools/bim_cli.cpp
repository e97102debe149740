#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bim/bounded_sim.hpp"
#include "bim/bounds.hpp"
#include "bim/generators.hpp"
#include "bim/greedy_star.hpp"
#include "bim/io.hpp"
#include "bim/protocol.hpp"
#include "bim/set_cover.hpp"
#include "bim/subdivision.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t max_facets = bim::Limits{}.max_facets;
  std::string json_out;
  json summary = json::object();

  bim::Limits limits() const { return bim::Limits{max_facets}; }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw bim::Error(bim::ErrorKind::InvalidParameters, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw bim::Error(bim::ErrorKind::InvalidParameters, "cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

bim::ChromaticComplex load_complex(const std::string& path) {
  return bim::complex_from_json(slurp(path));
}

json trace_json(const bim::StarCoverTrace& t) {
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json facets = json::array();
    for (const auto& f : r.covered.facets()) facets.push_back(f);
    json codes = json::object();
    for (const auto& [vid, code] : r.encoding.codes()) codes[std::to_string(vid)] = code;
    rounds.push_back({{"centers", r.centers},
                      {"covered_facets", facets},
                      {"assignment", codes},
                      {"refilled", r.refilled}});
  }
  return {{"rounds", rounds}, {"refills", t.refills}};
}

json report_json(const bim::BoundsReport& r) {
  json j = {{"n", r.n}, {"r", r.r}, {"b", r.b}, {"two_processes", r.two_processes}};
  auto put = [&](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("lower_formula", r.lower_formula);
  put("snapshot_upper_formula", r.snapshot_upper_formula);
  put("reported_rounds", r.reported_rounds);
  put("degree_lower_bound", r.degree_lower_bound);
  put("star_upper_bound", r.star_upper_bound);
  put("measured_rounds", r.measured_rounds);
  return j;
}

int exit_code_for(bim::ErrorKind kind) {
  switch (kind) {
    case bim::ErrorKind::ResourceLimit:
      return kResource;
    case bim::ErrorKind::InvalidParameters:
    case bim::ErrorKind::UnsupportedFormat:
    case bim::ErrorKind::ParseError:
      return kUsage;
    default:
      return kVerifyFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded iterated shared memory: complexes, protocol maps, encodings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized generators and checks");
  app.add_option("--max-facets", g.max_facets, "Cap on enumerated facets");
  app.add_option("--json-out", g.json_out, "Write a JSON summary of the run here");

  int status = kOk;
  std::function<void()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a complex");
  std::string kind = "simplex";
  std::size_t dim = 2, k = 2, m = 3, n = 3, facets = 5;
  std::string gen_out;
  gen->add_option("kind", kind, "simplex | glued | path | random")
      ->check(CLI::IsMember({"simplex", "glued", "path", "random"}));
  gen->add_option("--dim", dim, "Facet dimension");
  gen->add_option("--k", k, "Number of glued facets");
  gen->add_option("--m", m, "Number of facets in a path");
  gen->add_option("--n", n, "Colors of a random complex");
  gen->add_option("--facets", facets, "Facets of a random complex");
  gen->add_option("-o,--out", gen_out);
  gen->callback([&] {
    action = [&] {
      bim::ChromaticComplex c;
      if (kind == "simplex") c = bim::gen_simplex(dim);
      if (kind == "glued") c = bim::gen_glued(k, dim);
      if (kind == "path") c = bim::gen_path(m, dim);
      if (kind == "random") c = bim::gen_random(g.seed, n, facets);
      emit(gen_out, bim::complex_to_json(c));
      g.summary["f_vector"] = c.f_vector();
    };
  });

  // subdivide
  auto* sub = app.add_subcommand("subdivide", "Chromatic subdivision Ch^r");
  std::string in_path = "-", out_path;
  std::size_t rounds = 1;
  sub->add_option("-i,--in", in_path, "Input complex (JSON, '-' for stdin)");
  sub->add_option("-o,--out", out_path);
  sub->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  sub->callback([&] {
    action = [&] {
      const auto c = bim::iterate_subdivide(load_complex(in_path), rounds, g.limits());
      emit(out_path, bim::complex_to_json(c));
      g.summary["f_vector"] = c.f_vector();
    };
  });

  // degree-table
  auto* deg = app.add_subcommand("degree-table", "Max degree of Ch^r of a simplex");
  std::size_t deg_dim = 2, deg_rounds = 3;
  deg->add_option("--dim", deg_dim);
  deg->add_option("--rounds", deg_rounds)->check(CLI::PositiveNumber);
  deg->callback([&] {
    action = [&] {
      json rows = json::array();
      for (const auto& row : bim::degree_growth_table(deg_dim, deg_rounds, g.limits())) {
        json r = {{"rounds", row.rounds}, {"max_degree", row.max_degree},
                  {"template", row.template_value}};
        if (row.ratio) r["ratio"] = *row.ratio;
        rows.push_back(r);
        std::cout << row.rounds << '\t' << row.max_degree << '\t'
                  << (row.ratio ? std::to_string(*row.ratio) : "-") << '\n';
      }
      g.summary["rows"] = rows;
    };
  });

  // protocol
  auto* proto = app.add_subcommand("protocol", "Full-information protocol complex");
  std::string pattern_text = "ic";
  proto->add_option("--pattern", pattern_text)->check(CLI::IsMember({"ic", "ias", "iis"}));
  proto->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  proto->add_option("-i,--in", in_path);
  proto->add_option("-o,--out", out_path);
  proto->callback([&] {
    action = [&] {
      const auto c = bim::protocol_complex(load_complex(in_path), *bim::parse_pattern(pattern_text),
                                           rounds, g.limits());
      emit(out_path, bim::complex_to_json(c));
      g.summary["f_vector"] = c.f_vector();
    };
  });

  // greedy-star
  auto* gs = app.add_subcommand("greedy-star", "Greedy star encodings, split to a bit budget");
  unsigned bits = 2;
  std::string trace_path;
  gs->add_option("-i,--in", in_path);
  gs->add_option("--bits", bits)->check(CLI::Range(1u, 31u));
  gs->add_option("-o,--out", out_path);
  gs->add_option("--trace", trace_path);
  gs->callback([&] {
    action = [&] {
      const auto c = load_complex(in_path);
      const auto res = bim::greedy_star(c);
      const auto ws = bim::split_to_budget(res.sequence, c, bits);
      emit(out_path, bim::sequence_to_json(ws));
      if (!trace_path.empty()) emit(trace_path, trace_json(res.trace).dump(2));
      g.summary["unsplit_length"] = res.sequence.size();
      g.summary["length"] = ws.size();
      g.summary["lower_bound"] = bim::lower_bound_rounds(c, bits);
      g.summary["upper_bound"] = bim::upper_bound_rounds(c, bits);
      g.summary["covers"] = bim::verify_cover(c, ws);
    };
  });

  // simulate
  auto* sim = app.add_subcommand("simulate", "Bounded collect protocol complex");
  std::string enc_path, verify_against;
  sim->add_option("-i,--in", in_path);
  sim->add_option("--encodings", enc_path)->required();
  sim->add_option("-o,--out", out_path);
  sim->add_option("--verify-against", verify_against)->check(CLI::IsMember({"ic"}));
  sim->callback([&] {
    action = [&] {
      const auto c = load_complex(in_path);
      const auto ws = bim::sequence_from_json(slurp(enc_path));
      const auto xi = bim::bounded_protocol_complex(c, ws, bim::DecodePolicy::Strict, g.limits());
      emit(out_path, bim::complex_to_json(xi));
      g.summary["f_vector"] = xi.f_vector();
      if (!verify_against.empty()) {
        const bool iso = bim::is_isomorphic(xi, bim::protocol_complex(c, bim::Pattern::IC, 1, g.limits()));
        g.summary["isomorphic"] = iso;
        std::cerr << (iso ? "isomorphic to the IC protocol complex\n"
                          : "NOT isomorphic to the IC protocol complex\n");
        if (!iso) status = kVerifyFailed;
      }
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Check a cover or an isomorphism");
  std::string other_path;
  ver->add_option("-i,--in", in_path);
  ver->add_option("--encodings", enc_path, "Check that the sequence covers the complex");
  ver->add_option("--other", other_path, "Check isomorphism with this complex");
  ver->callback([&] {
    action = [&] {
      const auto c = load_complex(in_path);
      bool ok = true;
      if (!enc_path.empty()) {
        const bool covers = bim::verify_cover(c, bim::sequence_from_json(slurp(enc_path)));
        g.summary["covers"] = covers;
        std::cout << "cover: " << (covers ? "yes" : "no") << '\n';
        ok = ok && covers;
      }
      if (!other_path.empty()) {
        const bool iso = bim::is_isomorphic(c, load_complex(other_path));
        g.summary["isomorphic"] = iso;
        std::cout << "isomorphic: " << (iso ? "yes" : "no") << '\n';
        ok = ok && iso;
      }
      if (enc_path.empty() && other_path.empty()) {
        throw bim::Error(bim::ErrorKind::InvalidParameters, "verify needs --encodings or --other");
      }
      if (!ok) status = kVerifyFailed;
    };
  });

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Closed-form round bounds");
  std::size_t bn = 3, br = 1;
  unsigned bb = 1;
  bool measure = false;
  std::string bounds_in;
  bnd->add_option("--n", bn);
  bnd->add_option("--r", br);
  bnd->add_option("--b", bb);
  bnd->add_option("-i,--in", bounds_in, "Complex to evaluate the per-complex bounds on");
  bnd->add_flag("--measure", measure, "Run the pipeline r times on the complex (or the simplex)");
  bnd->callback([&] {
    action = [&] {
      bim::ChromaticComplex c =
          bounds_in.empty() ? bim::standard_simplex(bn - 1) : load_complex(bounds_in);
      auto rep = bim::bounds_table(bn, br, bb, &c);
      if (measure) rep.measured_rounds = bim::iterate_pipeline(c, br, bb, g.limits()).total_rounds;
      const json j = report_json(rep);
      std::cout << j.dump(2) << '\n';
      g.summary["bounds"] = j;
    };
  });

  // reduce-setcover
  auto* red = app.add_subcommand("reduce-setcover", "Set cover instance to a complex");
  bool explain = false;
  red->add_option("-i,--in", in_path);
  red->add_option("-o,--out", out_path);
  red->add_flag("--explain", explain, "Print the gluing choices");
  red->callback([&] {
    action = [&] {
      const auto inst = bim::set_cover_from_json(slurp(in_path));
      const auto res = bim::set_cover_reduce_explained(inst);
      if (explain) {
        std::cerr << "rule: two elements lying together in no subset share one vertex\n";
        for (const auto& line : res.log) std::cerr << line << '\n';
      }
      if (!bim::covers_universe(inst)) std::cerr << "note: the subsets do not cover the universe\n";
      emit(out_path, bim::complex_to_json(res.complex));
      g.summary["log"] = res.log;
    };
  });

  // exact-min
  auto* ex = app.add_subcommand("exact-min", "Shortest bottom/1 encoding sequence");
  ex->add_option("-i,--in", in_path);
  ex->add_option("-o,--out", out_path);
  ex->callback([&] {
    action = [&] {
      const auto res = bim::exact_min_sequence(load_complex(in_path));
      emit(out_path, bim::sequence_to_json(res.sequence));
      std::cerr << "length " << res.length << '\n';
      g.summary["length"] = res.length;
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "Export a complex");
  std::string format = "json";
  exp->add_option("-i,--in", in_path);
  exp->add_option("-o,--out", out_path);
  exp->add_option("--format", format, "json | dot | csv-fvector");
  exp->callback([&] {
    action = [&] { emit(out_path, bim::export_complex(load_complex(in_path), format)); };
  });

  // counterexample
  auto* ce = app.add_subcommand("counterexample", "Two triangles that one shared code merges");
  ce->add_option("-o,--out", out_path);
  ce->callback([&] {
    action = [&] {
      const auto rep = bim::shared_code_counterexample();
      json j = {{"complex", json::parse(bim::complex_to_json(rep.complex))},
                {"encodings", json::parse(bim::sequence_to_json(rep.sequence))},
                {"intersection_preserved", rep.intersection_preserved},
                {"repaired_encodings", json::parse(bim::sequence_to_json(rep.repaired))},
                {"repaired_intersection_preserved", rep.repaired_intersection_preserved},
                {"repaired_isomorphic", rep.repaired_isomorphic}};
      if (rep.merged) {
        j["merged_state"] = {{"vid", rep.merged->vid},
                             {"color", rep.merged->color.value},
                             {"label", rep.merged->label}};
      }
      emit(out_path, j.dump(2));
      g.summary["counterexample"] = j;
      if (!rep.merged || !rep.repaired_isomorphic) status = kVerifyFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    action();
  } catch (const bim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!g.json_out.empty()) {
    g.summary["status"] = status;
    std::ofstream(g.json_out) << g.summary.dump(2) << '\n';
  }
  return status;
}

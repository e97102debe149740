#include "bim/io.hpp"

#include <sstream>

#include "json.hpp"

namespace bim {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

json assignment(const EncodingFunction& w) {
  json a = json::object();
  for (const auto& [vid, code] : w.codes()) a[std::to_string(vid)] = code;
  return json{{"assignment", a}};
}

EncodingFunction read_assignment(const json& j) {
  std::map<Vid, std::uint32_t> codes;
  for (const auto& [key, value] : j.at("assignment").items()) {
    std::size_t used = 0;
    unsigned long vid = 0;
    try {
      vid = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw Error(ErrorKind::ParseError, "bad vid key '" + key + "'");
    if (value.is_null()) continue;
    codes[static_cast<Vid>(vid)] = value.get<std::uint32_t>();
  }
  return EncodingFunction(std::move(codes));
}

}  // namespace

std::string complex_to_json(const ChromaticComplex& c) {
  json vs = json::array();
  for (const auto& v : c.vertices()) {
    vs.push_back({{"vid", v.vid}, {"color", v.color.value}, {"label", v.label}});
  }
  json fs = json::array();
  for (const auto& f : c.facets()) fs.push_back(f);
  return json{{"n", c.n()}, {"vertices", vs}, {"facets", fs}}.dump(2);
}

ChromaticComplex complex_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    std::vector<Vertex> vs;
    for (const auto& v : j.at("vertices")) {
      vs.push_back({v.at("vid").get<Vid>(), Color{v.at("color").get<std::uint32_t>()},
                    v.value("label", std::string{})});
    }
    std::vector<Simplex> fs;
    for (const auto& f : j.at("facets")) fs.push_back(f.get<Simplex>());
    return ChromaticComplex::build(j.at("n").get<std::size_t>(), std::move(vs), std::move(fs));
  });
}

std::string encoding_to_json(const EncodingFunction& w) { return assignment(w).dump(2); }

std::string sequence_to_json(const EncodingSequence& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(assignment(w));
  return arr.dump(2);
}

EncodingSequence sequence_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&] {
    EncodingSequence out;
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(read_assignment(item));
    } else {
      out.push_back(read_assignment(j));
    }
    return out;
  });
}

std::string global_view_to_json(const GlobalView& g) {
  json views = json::object();
  for (const auto& [color, view] : g.views) views[std::to_string(color.value)] = view;
  return json{{"views", views}}.dump();
}

std::string set_cover_to_json(const SetCoverInstance& inst) {
  return json{{"universe", inst.universe}, {"subsets", inst.subsets}}.dump(2);
}

SetCoverInstance set_cover_from_json(std::string_view text) {
  const json j = parse(text);
  SetCoverInstance inst = guarded([&] {
    SetCoverInstance out;
    out.universe = j.at("universe").get<std::vector<std::uint32_t>>();
    out.subsets = j.at("subsets").get<std::vector<std::vector<std::uint32_t>>>();
    return out;
  });
  validate(inst);
  return inst;
}

std::string complex_to_dot(const ChromaticComplex& c) {
  std::ostringstream os;
  os << "graph complex {\n";
  for (const auto& v : c.vertices()) {
    os << "  " << v.vid << " [color=" << v.color.value << ", label=\"";
    for (char ch : v.label) {
      if (ch == '"' || ch == '\\') os << '\\';
      os << ch;
    }
    os << "\"];\n";
  }
  for (const auto& v : c.vertices()) {
    for (Vid u : c.neighbors(v.vid)) {
      if (v.vid < u) os << "  " << v.vid << " -- " << u << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string f_vector_csv(const ChromaticComplex& c) {
  std::string out;
  for (auto k : c.f_vector()) {
    if (!out.empty()) out += ',';
    out += std::to_string(k);
  }
  return out;
}

std::string export_complex(const ChromaticComplex& c, std::string_view format) {
  if (format == "json") return complex_to_json(c);
  if (format == "dot") return complex_to_dot(c);
  if (format == "csv-fvector") return f_vector_csv(c);
  throw Error(ErrorKind::UnsupportedFormat, "unknown export format '" + std::string(format) + "'");
}

}  // namespace bim

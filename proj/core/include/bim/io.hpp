#pragma once

#include <string>
#include <string_view>

#include "bim/complex.hpp"
#include "bim/encoding.hpp"
#include "bim/protocol.hpp"
#include "bim/set_cover.hpp"

namespace bim {

/// {"n": int, "vertices": [{"vid", "color", "label"}], "facets": [[vid, ...]]}
std::string complex_to_json(const ChromaticComplex& c);
/// Throws ParseError on malformed text, plus whatever ChromaticComplex::build raises.
ChromaticComplex complex_from_json(std::string_view text);

/// {"assignment": {"<vid>": int | null}}
std::string encoding_to_json(const EncodingFunction& w);
/// Array of assignments.
std::string sequence_to_json(const EncodingSequence& ws);
/// Accepts an array of assignments or a single one.
EncodingSequence sequence_from_json(std::string_view text);

/// {"views": {"<color>": [vid, ...]}}
std::string global_view_to_json(const GlobalView& g);

/// {"universe": [...], "subsets": [[...], ...]}
std::string set_cover_to_json(const SetCoverInstance& inst);
SetCoverInstance set_cover_from_json(std::string_view text);

/// Undirected 1-skeleton, one node per vertex with its color.
std::string complex_to_dot(const ChromaticComplex& c);
/// "f0,f1,...".
std::string f_vector_csv(const ChromaticComplex& c);

/// format is "json", "dot" or "csv-fvector"; anything else raises UnsupportedFormat.
std::string export_complex(const ChromaticComplex& c, std::string_view format);

}  // namespace bim

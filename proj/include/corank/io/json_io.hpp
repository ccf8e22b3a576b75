#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "corank/cusp/corank.hpp"
#include "corank/linalg/matrix.hpp"
#include "corank/report.hpp"
#include "corank/retraction/retraction.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "corank/spectral/spectral.hpp"
#include "corank/topo/delta_complex.hpp"
#include "corank/topo/simplicial.hpp"

namespace corank::io {

using json = nlohmann::json;

inline constexpr const char* kComplexV1 = "complex.v1";
inline constexpr const char* kCosheafV1 = "cosheaf.v1";
inline constexpr const char* kFacePairV1 = "facepair.v1";
inline constexpr const char* kCorankV1 = "corank.v1";
inline constexpr const char* kPageV1 = "page.v1";
inline constexpr const char* kCorankResultV1 = "corankresult.v1";

/// Parses text, throwing Schema on malformed JSON.
json parse(const std::string& text);
/// Reads a file ("-" for stdin), throwing Io.
std::string read_input(const std::string& path);
/// The canonical serialisation used for every output: sorted keys, two-space indent, newline.
std::string dump(const json& j);

/// Integers become JSON integers when they fit, everything else a "p/q" string.
json rational_to_json(const linalg::Rational& q);
linalg::Rational rational_from_json(const json& j, const std::string& where);

json matrix_to_json(const linalg::Matrix& m);
linalg::Matrix matrix_from_json(const json& j, const std::string& where);

json report_to_json(const Report& r);

struct ComplexDoc {
    topo::DeltaComplex complex;
    std::size_t dims = 0;  // coordinate dimension, 0 without coordinates
    std::vector<topo::Point> vertices;  // aligned with the 0-cells, or empty
    std::map<std::string, std::vector<std::size_t>> masks;

    bool operator==(const ComplexDoc&) const = default;
};

/// `embedded` documents (inside cosheaf.v1 / corank.v1) may omit the version field.
json complex_to_json(const ComplexDoc& doc, bool embedded = false);
ComplexDoc complex_from_json(const json& j, bool embedded = false);

struct CosheafDoc {
    ComplexDoc complex;
    sheaf::Cosheaf cosheaf;
};
json cosheaf_to_json(const CosheafDoc& doc);
CosheafDoc cosheaf_from_json(const json& j);

json facepair_to_json(const retraction::FacePairInput& in);
retraction::FacePairInput facepair_from_json(const json& j);

json corank_to_json(const cusp::CorankInput& in);
cusp::CorankInput corank_from_json(const json& j);

/// Page in (p, q) coordinates of the filtered complex.
json page_to_json(const spectral::Page& pg);
/// Structural check of a page.v1 document.
void check_page_json(const json& j);

json corank_result_to_json(const cusp::CorankResult& res);
void check_corank_result_json(const json& j);

/// The "version" field, or throws Schema.
std::string version_of(const json& j);

}  // namespace corank::io

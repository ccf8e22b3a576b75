#include "corank/io/json_io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "corank/error.hpp"

namespace corank::io {

using linalg::Matrix;
using linalg::Rational;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) { throw Error(ErrorKind::Schema, where + ": " + what); }

void expect_object(const json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) schema(where, "expected an object");
    std::set<std::string> known;
    for (auto k : required) {
        known.insert(k);
        if (!j.contains(k)) schema(where, std::string("missing field '") + k + "'");
    }
    for (auto k : optional) known.insert(k);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) schema(where, "unknown field '" + it.key() + "'");
}

std::size_t get_count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) schema(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const json& get_array(const json& j, const std::string& where) {
    if (!j.is_array()) schema(where, "expected an array");
    return j;
}

std::vector<std::size_t> get_counts(const json& j, const std::string& where) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < get_array(j, where).size(); ++i) out.push_back(get_count(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) schema(where, "expected a string");
    return j.get<std::string>();
}

void check_version(const json& j, const char* expected) {
    if (!j.is_object()) schema("document", "expected a JSON object");
    if (!j.contains("version")) schema("document", std::string("missing 'version' (expected \"") + expected + "\")");
    if (!j["version"].is_string() || j["version"].get<std::string>() != expected)
        schema("document", std::string("version mismatch: expected \"") + expected + "\", got " + j["version"].dump());
}

std::size_t level_key(const std::string& key, const std::string& where) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) schema(where, "level key '" + key + "' is not a number");
    return std::stoul(key);
}

}  // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
    }
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string version_of(const json& j) {
    if (!j.is_object() || !j.contains("version") || !j["version"].is_string()) schema("document", "missing string field 'version'");
    return j["version"].get<std::string>();
}

json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        try {
            return linalg::parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            schema(where, e.what());
        }
    }
    schema(where, "expected an integer or a \"p/q\" string");
}

json matrix_to_json(const Matrix& m) {
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) entries.emplace_back(e.row, c, e.value);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
    json arr = json::array();
    for (const auto& [r, c, v] : entries) arr.push_back(json::array({r, c, rational_to_json(v)}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", arr}};
}

Matrix matrix_from_json(const json& j, const std::string& where) {
    expect_object(j, where, {"rows", "cols", "entries"});
    Matrix m(get_count(j["rows"], where + ".rows"), get_count(j["cols"], where + ".cols"));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < get_array(j["entries"], where + ".entries").size(); ++k) {
        const std::string w = where + ".entries[" + std::to_string(k) + "]";
        const json& e = j["entries"][k];
        if (!e.is_array() || e.size() != 3) schema(w, "expected [row, col, value]");
        const std::size_t r = get_count(e[0], w), c = get_count(e[1], w);
        if (r >= m.rows() || c >= m.cols()) schema(w, "index out of range");
        if (!seen.insert({r, c}).second) schema(w, "duplicate entry");
        m.set(r, c, rational_from_json(e[2], w));
    }
    return m;
}

json report_to_json(const Report& r) { return json{{"ok", r.ok}, {"violations", r.violations}}; }

// ----------------------------------------------------------------------------------------------
// complex.v1

json complex_to_json(const ComplexDoc& doc, bool embedded) {
    json cells = json::array();
    for (const auto& c : doc.complex.cells()) {
        json cj{{"dim", c.dim}, {"verts", c.verts}, {"faces", c.faces}};
        if (!c.label.empty()) cj["label"] = c.label;
        cells.push_back(std::move(cj));
    }
    json j{{"cells", cells}};
    if (!embedded) j["version"] = kComplexV1;
    if (!embedded || !doc.vertices.empty() || doc.dims) {
        json verts = json::array();
        for (const auto& p : doc.vertices) {
            json pj = json::array();
            for (const auto& x : p) pj.push_back(rational_to_json(x));
            verts.push_back(std::move(pj));
        }
        j["dims"] = doc.dims;
        j["vertices"] = verts;
    }
    if (!embedded || !doc.masks.empty()) {
        json masks = json::object();
        for (const auto& [name, ids] : doc.masks) masks[name] = ids;
        j["masks"] = masks;
    }
    return j;
}

ComplexDoc complex_from_json(const json& j, bool embedded) {
    const std::string where = embedded ? "complex" : "complex.v1";
    if (!embedded || j.contains("version")) check_version(j, kComplexV1);
    expect_object(j, where, {"cells"}, {"version", "dims", "vertices", "masks"});
    ComplexDoc doc;
    std::vector<topo::Cell> cells;
    const json& cj = get_array(j["cells"], where + ".cells");
    for (std::size_t id = 0; id < cj.size(); ++id) {
        const std::string w = where + ".cells[" + std::to_string(id) + "]";
        expect_object(cj[id], w, {"dim", "verts", "faces"}, {"label"});
        topo::Cell c;
        c.dim = get_count(cj[id]["dim"], w + ".dim");
        c.verts = get_counts(cj[id]["verts"], w + ".verts");
        c.faces = get_counts(cj[id]["faces"], w + ".faces");
        if (cj[id].contains("label")) c.label = get_string(cj[id]["label"], w + ".label");
        cells.push_back(std::move(c));
    }
    doc.complex = topo::DeltaComplex(std::move(cells));
    if (j.contains("dims")) doc.dims = get_count(j["dims"], where + ".dims");
    if (j.contains("vertices")) {
        const json& vj = get_array(j["vertices"], where + ".vertices");
        for (std::size_t v = 0; v < vj.size(); ++v) {
            const std::string w = where + ".vertices[" + std::to_string(v) + "]";
            topo::Point p;
            for (std::size_t i = 0; i < get_array(vj[v], w).size(); ++i) p.push_back(rational_from_json(vj[v][i], w));
            if (p.size() != doc.dims) schema(w, "has " + std::to_string(p.size()) + " coordinates, dims is " + std::to_string(doc.dims));
            doc.vertices.push_back(std::move(p));
        }
        if (!doc.vertices.empty() && doc.vertices.size() != doc.complex.cells_of_dim(0).size())
            schema(where + ".vertices", "one coordinate vector per 0-cell is required");
    }
    if (j.contains("masks")) {
        if (!j["masks"].is_object()) schema(where + ".masks", "expected an object");
        for (auto it = j["masks"].begin(); it != j["masks"].end(); ++it) {
            auto ids = get_counts(it.value(), where + ".masks." + it.key());
            for (auto id : ids)
                if (id >= doc.complex.size()) schema(where + ".masks." + it.key(), "cell " + std::to_string(id) + " out of range");
            doc.masks[it.key()] = ids;
        }
    }
    return doc;
}

// ----------------------------------------------------------------------------------------------
// cosheaf.v1

namespace {

json ext_list(const std::map<std::pair<std::size_t, std::size_t>, Matrix>& ext) {
    json arr = json::array();
    for (const auto& [key, m] : ext) arr.push_back(json{{"cell", key.first}, {"face", key.second}, {"matrix", matrix_to_json(m)}});
    return arr;
}

std::map<std::pair<std::size_t, std::size_t>, Matrix> ext_from(const json& j, const std::string& where) {
    std::map<std::pair<std::size_t, std::size_t>, Matrix> out;
    for (std::size_t k = 0; k < get_array(j, where).size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        expect_object(j[k], w, {"cell", "face", "matrix"});
        auto key = std::make_pair(get_count(j[k]["cell"], w + ".cell"), get_count(j[k]["face"], w + ".face"));
        if (!out.emplace(key, matrix_from_json(j[k]["matrix"], w + ".matrix")).second) schema(w, "duplicate extension map");
    }
    return out;
}

}  // namespace

json cosheaf_to_json(const CosheafDoc& doc) {
    return json{{"version", kCosheafV1},
                {"complex", complex_to_json(doc.complex, true)},
                {"dims", doc.cosheaf.dims()},
                {"ext", ext_list(doc.cosheaf.ext_entries())}};
}

CosheafDoc cosheaf_from_json(const json& j) {
    check_version(j, kCosheafV1);
    expect_object(j, "cosheaf.v1", {"version", "complex", "dims", "ext"});
    CosheafDoc doc;
    doc.complex = complex_from_json(j["complex"], true);
    auto dims = get_counts(j["dims"], "cosheaf.v1.dims");
    if (dims.size() != doc.complex.complex.size()) schema("cosheaf.v1.dims", "one stalk dimension per cell is required");
    doc.cosheaf = sheaf::Cosheaf(std::make_shared<const topo::DeltaComplex>(doc.complex.complex), dims);
    for (auto& [key, m] : ext_from(j["ext"], "cosheaf.v1.ext")) {
        if (key.first >= doc.complex.complex.size() || key.second >= doc.complex.complex.cell(key.first).faces.size())
            schema("cosheaf.v1.ext", "map for nonexistent face (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
        doc.cosheaf.set_ext(key.first, key.second, std::move(m));
    }
    return doc;
}

// ----------------------------------------------------------------------------------------------
// facepair.v1

json facepair_to_json(const retraction::FacePairInput& in) {
    const auto& s = in.ambient;
    json verts = json::array();
    for (const auto& p : s.coordinates()) {
        json pj = json::array();
        for (const auto& x : p) pj.push_back(rational_to_json(x));
        verts.push_back(std::move(pj));
    }
    json simplices = json::array();
    for (auto id : s.maximal()) simplices.push_back(s.simplex(id));
    json boundary = json::array();
    std::vector<char> covered(s.size(), 0);
    for (auto id : in.boundary.ids())
        for (auto f : s.facets(id)) covered[f] = 1;
    for (auto id : in.boundary.ids())
        if (!covered[id]) boundary.push_back(s.simplex(id));
    return json{{"version", kFacePairV1}, {"vertices", verts}, {"simplices", simplices}, {"boundary", boundary}};
}

retraction::FacePairInput facepair_from_json(const json& j) {
    check_version(j, kFacePairV1);
    expect_object(j, "facepair.v1", {"version", "vertices", "simplices", "boundary"});
    std::vector<topo::Point> coords;
    const json& vj = get_array(j["vertices"], "facepair.v1.vertices");
    for (std::size_t v = 0; v < vj.size(); ++v) {
        const std::string w = "facepair.v1.vertices[" + std::to_string(v) + "]";
        topo::Point p;
        for (std::size_t i = 0; i < get_array(vj[v], w).size(); ++i) p.push_back(rational_from_json(vj[v][i], w));
        if (!coords.empty() && p.size() != coords[0].size()) schema(w, "coordinate length differs from the first vertex");
        coords.push_back(std::move(p));
    }
    auto read_simplices = [&](const json& arr, const std::string& where) {
        std::vector<topo::Simplex> out;
        for (std::size_t k = 0; k < get_array(arr, where).size(); ++k) {
            auto s = get_counts(arr[k], where + "[" + std::to_string(k) + "]");
            for (auto v : s)
                if (v >= coords.size()) schema(where + "[" + std::to_string(k) + "]", "vertex " + std::to_string(v) + " out of range");
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
        return out;
    };
    retraction::FacePairInput in;
    const std::size_t nv = coords.size();
    auto generators = read_simplices(j["simplices"], "facepair.v1.simplices");
    auto boundary = read_simplices(j["boundary"], "facepair.v1.boundary");
    try {
        in.ambient = topo::SimplicialComplex(nv, generators, std::move(coords));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Schema) throw;
        schema("facepair.v1.simplices", e.what());
    }
    in.boundary = topo::SubcomplexMask(in.ambient.size());
    for (const auto& s : boundary) {
        auto id = in.ambient.find(s);
        if (!id) schema("facepair.v1.boundary", "boundary simplex is not a simplex of the complex");
        std::vector<std::size_t> stack{*id};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            if (in.boundary.contains(x)) continue;
            in.boundary.insert(x);
            for (auto f : in.ambient.facets(x)) stack.push_back(f);
        }
    }
    return in;
}

// ----------------------------------------------------------------------------------------------
// corank.v1

json corank_to_json(const cusp::CorankInput& in) {
    json cusps = json::array();
    for (const auto& c : in.cusps) {
        json levels = json::object();
        for (const auto& [p, lv] : c.levels) {
            json aug = json::array();
            for (const auto& [cell, m] : lv.augmentation) aug.push_back(json{{"cell", cell}, {"matrix", matrix_to_json(m)}});
            json lj{{"dims", lv.dims}, {"ext", ext_list(lv.ext)}};
            if (!lv.augmentation.empty()) lj["augmentation"] = aug;
            levels[std::to_string(p)] = lj;
        }
        ComplexDoc cd;
        cd.complex = c.complex;
        json cj{{"label", c.label}, {"corank", c.corank}, {"complex", complex_to_json(cd, true)}, {"boundary", c.boundary}, {"levels", levels}};
        if (c.chi_gamma) cj["chi_gamma"] = rational_to_json(*c.chi_gamma);
        if (c.chi_hol) cj["chi_hol"] = rational_to_json(*c.chi_hol);
        cusps.push_back(std::move(cj));
    }
    json gluing = json::array();
    for (const auto& g : in.gluing)
        gluing.push_back(json{{"cusp", g.cusp}, {"cell", g.cell}, {"target_cusp", g.target_cusp}, {"target_cell", g.target_cell}});
    json j{{"version", kCorankV1}, {"n", in.n}, {"r", in.r}, {"n_table", in.n_table}, {"cusps", cusps}, {"gluing", gluing}};
    if (!in.ambient_dims.empty()) {
        json amb = json::object();
        for (const auto& [p, d] : in.ambient_dims) amb[std::to_string(p)] = d;
        j["ambient_dims"] = amb;
    }
    return j;
}

cusp::CorankInput corank_from_json(const json& j) {
    check_version(j, kCorankV1);
    expect_object(j, "corank.v1", {"version", "n", "r", "n_table", "cusps", "gluing"}, {"ambient_dims"});
    cusp::CorankInput in;
    in.n = get_count(j["n"], "corank.v1.n");
    in.r = get_count(j["r"], "corank.v1.r");
    in.n_table = get_counts(j["n_table"], "corank.v1.n_table");
    const json& cj = get_array(j["cusps"], "corank.v1.cusps");
    for (std::size_t k = 0; k < cj.size(); ++k) {
        const std::string w = "corank.v1.cusps[" + std::to_string(k) + "]";
        expect_object(cj[k], w, {"label", "corank", "complex", "boundary", "levels"}, {"chi_gamma", "chi_hol"});
        cusp::Cusp c;
        c.label = get_string(cj[k]["label"], w + ".label");
        c.corank = get_count(cj[k]["corank"], w + ".corank");
        ComplexDoc cd = complex_from_json(cj[k]["complex"], true);
        if (!cd.vertices.empty() || !cd.masks.empty()) schema(w + ".complex", "cusp complexes carry no coordinates or masks");
        c.complex = std::move(cd.complex);
        c.boundary = get_counts(cj[k]["boundary"], w + ".boundary");
        if (!cj[k]["levels"].is_object()) schema(w + ".levels", "expected an object keyed by level");
        for (auto it = cj[k]["levels"].begin(); it != cj[k]["levels"].end(); ++it) {
            const std::string lw = w + ".levels." + it.key();
            const std::size_t p = level_key(it.key(), lw);
            expect_object(it.value(), lw, {"dims", "ext"}, {"augmentation"});
            cusp::LevelData lv;
            lv.dims = get_counts(it.value()["dims"], lw + ".dims");
            lv.ext = ext_from(it.value()["ext"], lw + ".ext");
            if (it.value().contains("augmentation")) {
                const json& aj = get_array(it.value()["augmentation"], lw + ".augmentation");
                for (std::size_t a = 0; a < aj.size(); ++a) {
                    const std::string aw = lw + ".augmentation[" + std::to_string(a) + "]";
                    expect_object(aj[a], aw, {"cell", "matrix"});
                    if (!lv.augmentation.emplace(get_count(aj[a]["cell"], aw + ".cell"), matrix_from_json(aj[a]["matrix"], aw + ".matrix")).second)
                        schema(aw, "duplicate augmentation for a cell");
                }
            }
            if (!c.levels.emplace(p, std::move(lv)).second) schema(lw, "duplicate level");
        }
        if (cj[k].contains("chi_gamma")) c.chi_gamma = rational_from_json(cj[k]["chi_gamma"], w + ".chi_gamma");
        if (cj[k].contains("chi_hol")) c.chi_hol = rational_from_json(cj[k]["chi_hol"], w + ".chi_hol");
        in.cusps.push_back(std::move(c));
    }
    const json& gj = get_array(j["gluing"], "corank.v1.gluing");
    for (std::size_t k = 0; k < gj.size(); ++k) {
        const std::string w = "corank.v1.gluing[" + std::to_string(k) + "]";
        expect_object(gj[k], w, {"cusp", "cell", "target_cusp", "target_cell"});
        in.gluing.push_back(cusp::Gluing{get_string(gj[k]["cusp"], w + ".cusp"), get_count(gj[k]["cell"], w + ".cell"),
                                         get_string(gj[k]["target_cusp"], w + ".target_cusp"), get_count(gj[k]["target_cell"], w + ".target_cell")});
    }
    if (j.contains("ambient_dims")) {
        if (!j["ambient_dims"].is_object()) schema("corank.v1.ambient_dims", "expected an object keyed by level");
        for (auto it = j["ambient_dims"].begin(); it != j["ambient_dims"].end(); ++it)
            in.ambient_dims[level_key(it.key(), "corank.v1.ambient_dims")] = get_count(it.value(), "corank.v1.ambient_dims." + it.key());
    }
    return in;
}

// ----------------------------------------------------------------------------------------------
// page.v1 / corankresult.v1

namespace {

// Terms and differentials; `cork` switches to corank coordinates (i, j = n - i + 1).
json page_body(const spectral::Page& pg, bool cork) {
    const char* a = cork ? "i" : "p";
    const char* b = cork ? "j" : "q";
    auto coords = [&](long p, std::size_t n) {
        return cork ? std::make_pair(p, static_cast<long>(n) - p + 1) : std::make_pair(p, static_cast<long>(n) - p);
    };
    json terms = json::array();
    for (const auto& [key, dim] : pg.dims()) {
        auto [x, y] = coords(key.first, key.second);
        terms.push_back(json{{a, x}, {b, y}, {"dim", dim}});
    }
    json diffs = json::array();
    const long r = static_cast<long>(pg.r);
    for (const auto& [key, m] : pg.diffs) {
        if (m.is_zero()) continue;
        auto from = coords(key.first, key.second);
        auto to = coords(key.first - r, key.second - 1);
        diffs.push_back(json{{"from", {from.first, from.second}}, {"to", {to.first, to.second}}, {"matrix", matrix_to_json(m)}});
    }
    return json{{"r", pg.r}, {"terms", terms}, {"diffs", diffs}};
}

void check_page_body(const json& j, const std::string& where, bool cork) {
    expect_object(j, where, {"r", "terms", "diffs"}, {"version"});
    get_count(j["r"], where + ".r");
    for (std::size_t k = 0; k < get_array(j["terms"], where + ".terms").size(); ++k) {
        const std::string w = where + ".terms[" + std::to_string(k) + "]";
        expect_object(j["terms"][k], w, {cork ? "i" : "p", cork ? "j" : "q", "dim"});
        get_count(j["terms"][k]["dim"], w + ".dim");
    }
    for (std::size_t k = 0; k < get_array(j["diffs"], where + ".diffs").size(); ++k) {
        const std::string w = where + ".diffs[" + std::to_string(k) + "]";
        expect_object(j["diffs"][k], w, {"from", "to", "matrix"});
        matrix_from_json(j["diffs"][k]["matrix"], w + ".matrix");
    }
}

}  // namespace

json page_to_json(const spectral::Page& pg) {
    json j = page_body(pg, false);
    j["version"] = kPageV1;
    return j;
}

void check_page_json(const json& j) {
    check_version(j, kPageV1);
    check_page_body(j, "page.v1", false);
}

json corank_result_to_json(const cusp::CorankResult& res) {
    const auto& d = *res.dual.complex;
    json by_dim = json::array();
    for (int k = 0; k <= d.top_dim(); ++k) by_dim.push_back(d.cells_of_dim(static_cast<std::size_t>(k)).size());
    json labels = json::array();
    for (const auto& c : d.cells()) labels.push_back(c.label);
    json filtration = json::array();
    for (const auto& m : res.filtration) filtration.push_back(m.ids());
    json pages = json::array();
    for (const auto& pg : res.ss.pages) pages.push_back(page_body(pg, true));
    json e1 = json::array();
    for (const auto& [key, parts] : res.e1_table)
        for (const auto& part : parts) e1.push_back(json{{"i", key.first}, {"j", key.second}, {"cusp", part.cusp}, {"dim", part.dim}});
    json euler{{"chi_e1", res.euler.chi_e1}, {"chi_infinity", res.euler.chi_inf}};
    if (res.euler.formula) euler["cusp_formula"] = rational_to_json(*res.euler.formula);
    json j{{"version", kCorankResultV1},
           {"p", res.p},
           {"d", res.d},
           {"dual_complex", {{"cells_by_dim", by_dim}, {"labels", labels}}},
           {"filtration", filtration},
           {"pages", pages},
           {"e_infinity", page_body(res.ss.pages.back(), true)["terms"]},
           {"degeneration_page", res.ss.degeneration_page},
           {"total_homology", res.ss.total_homology},
           {"e1_by_cusp", e1},
           {"euler", euler},
           {"checks",
            {{"spectral", report_to_json(res.ss.spectral_checks)},
             {"cross_check", report_to_json(res.cross)},
             {"convergence", report_to_json(res.convergence)},
             {"shape", report_to_json(res.shape)},
             {"degeneration", report_to_json(res.degeneration)},
             {"euler", report_to_json(res.euler.report)}}},
           {"ok", res.ok()}};
    if (res.eis) {
        j["eis_dim"] = *res.eis;
        const auto inf = cusp::total_dims(cusp::cork_dims(res.ss.pages.back()));
        const std::size_t e1dim = inf.count(1) ? inf.at(1) : 0;
        if (e1dim >= *res.eis) j["gr_dim"] = e1dim - *res.eis;
    }
    return j;
}

void check_corank_result_json(const json& j) {
    check_version(j, kCorankResultV1);
    const std::string w = "corankresult.v1";
    expect_object(j, w,
                  {"version", "p", "d", "dual_complex", "filtration", "pages", "e_infinity", "degeneration_page", "total_homology",
                   "e1_by_cusp", "euler", "checks", "ok"},
                  {"eis_dim", "gr_dim"});
    for (std::size_t k = 0; k < get_array(j["pages"], w + ".pages").size(); ++k)
        check_page_body(j["pages"][k], w + ".pages[" + std::to_string(k) + "]", true);
    expect_object(j["checks"], w + ".checks", {"spectral", "cross_check", "convergence", "shape", "degeneration", "euler"});
    for (auto it = j["checks"].begin(); it != j["checks"].end(); ++it) expect_object(it.value(), w + ".checks." + it.key(), {"ok", "violations"});
    if (!j["ok"].is_boolean()) schema(w + ".ok", "expected a boolean");
}

}  // namespace corank::io

#include "corank/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "corank/cusp/corank.hpp"
#include "corank/error.hpp"
#include "corank/io/json_io.hpp"
#include "corank/retraction/retraction.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "corank/spectral/spectral.hpp"
#include "corank/topo/delta_complex.hpp"

namespace corank::cli {

using io::json;

namespace {

enum class Format { Json, Table };

struct Outcome {
    json doc;
    std::string table;
    bool ok = true;
};

std::string check_line(const std::string& name, const Report& r) {
    std::string s = "  " + name + ": " + (r.ok ? "ok" : "FAILED") + "\n";
    for (const auto& v : r.violations) s += "    - " + v + "\n";
    return s;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

/// Grid with rows `b` (descending) and columns `a`, zeros shown as dots.
std::string render_grid(const std::map<std::pair<long, long>, std::size_t>& dims, const char* a, const char* b, long a_lo, long a_hi) {
    if (dims.empty()) return "  (all terms zero)\n";
    long b_lo = dims.begin()->first.second, b_hi = b_lo;
    for (const auto& [key, dim] : dims) {
        a_lo = std::min(a_lo, key.first);
        a_hi = std::max(a_hi, key.first);
        b_lo = std::min(b_lo, key.second);
        b_hi = std::max(b_hi, key.second);
    }
    std::ostringstream os;
    os << pad(std::string(b) + "\\" + a, 6);
    for (long x = a_lo; x <= a_hi; ++x) os << pad(std::to_string(x), 6);
    os << "\n";
    for (long y = b_hi; y >= b_lo; --y) {
        os << pad(std::to_string(y), 6);
        for (long x = a_lo; x <= a_hi; ++x) {
            auto it = dims.find({x, y});
            os << pad(it == dims.end() ? "." : std::to_string(it->second), 6);
        }
        os << "\n";
    }
    return os.str();
}

std::map<std::pair<long, long>, std::size_t> pq_dims(const spectral::Page& pg) {
    std::map<std::pair<long, long>, std::size_t> out;
    for (const auto& [key, dim] : pg.dims()) out[{key.first, static_cast<long>(key.second) - key.first}] = dim;
    return out;
}

std::string page_label(std::size_t r, bool infinity) { return infinity ? "E^inf" : "E^" + std::to_string(r); }

json dims_json(const std::vector<std::size_t>& v) { return json(v); }

std::string homology_line(const std::vector<std::size_t>& h, const char* sym) {
    std::string s;
    for (std::size_t k = 0; k < h.size(); ++k) s += (k ? " " : "") + std::string(sym) + std::to_string(k) + "=" + std::to_string(h[k]);
    return s.empty() ? "(empty)" : s;
}

// ----------------------------------------------------------------------------------------------

Outcome cmd_validate(const json& j) {
    const std::string v = io::version_of(j);
    Report rep;
    if (v == io::kComplexV1) {
        auto doc = io::complex_from_json(j);
        rep.merge(topo::validate(doc.complex));
        if (rep.ok)
            for (const auto& [name, ids] : doc.masks) {
                auto m = topo::SubcomplexMask::of(doc.complex.size(), ids);
                for (auto c : m.unclosed_members(doc.complex)) rep.fail("mask '" + name + "' holds cell " + std::to_string(c) + " but not all of its faces");
            }
    } else if (v == io::kCosheafV1) {
        auto doc = io::cosheaf_from_json(j);
        rep.merge(topo::validate(doc.complex.complex));
        if (rep.ok) rep.merge(sheaf::validate_cosheaf(doc.cosheaf));
    } else if (v == io::kFacePairV1) {
        rep.merge(retraction::check_conditions(io::facepair_from_json(j)));
    } else if (v == io::kCorankV1) {
        auto in = io::corank_from_json(j);
        rep.merge(cusp::validate_input(in));
        if (rep.ok) {
            try {
                auto dual = cusp::build_dual_complex(in);
                cusp::corank_filtration(in, dual);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Schema || e.kind() == ErrorKind::Io) throw;
                rep.fail(e.what());
            }
        }
    } else {
        throw Error(ErrorKind::Schema, "unsupported version \"" + v + "\" (expected one of complex.v1, cosheaf.v1, facepair.v1, corank.v1)");
    }
    Outcome out;
    out.ok = rep.ok;
    out.doc = json{{"input", v}, {"validation", io::report_to_json(rep)}};
    out.table = v + ": " + (rep.ok ? "valid" : "INVALID") + "\n";
    for (const auto& m : rep.violations) out.table += "  - " + m + "\n";
    return out;
}

/// Cosheaf (or constant Q on a complex) plus the masks carried by the document.
struct CosheafInput {
    io::CosheafDoc doc;
    std::map<std::string, std::vector<std::size_t>> masks;
};

CosheafInput load_cosheaf(const json& j) {
    const std::string v = io::version_of(j);
    CosheafInput ci;
    if (v == io::kCosheafV1) {
        ci.doc = io::cosheaf_from_json(j);
    } else if (v == io::kComplexV1) {
        ci.doc.complex = io::complex_from_json(j);
        ci.doc.cosheaf = sheaf::Cosheaf::constant(std::make_shared<const topo::DeltaComplex>(ci.doc.complex.complex), 1);
    } else {
        throw Error(ErrorKind::Schema, "version mismatch: expected \"cosheaf.v1\" or \"complex.v1\", got \"" + v + "\"");
    }
    ci.masks = ci.doc.complex.masks;
    Report rep = topo::validate(ci.doc.complex.complex);
    if (rep.ok) rep.merge(sheaf::validate_cosheaf(ci.doc.cosheaf));
    if (!rep.ok) {
        std::string msg = "input is not a valid cosheaf:";
        for (const auto& m : rep.violations) msg += " " + m + ";";
        throw Error(ErrorKind::InvalidCosheaf, msg);
    }
    return ci;
}

topo::SubcomplexMask named_mask(const CosheafInput& ci, const std::string& name) {
    auto it = ci.masks.find(name);
    if (it == ci.masks.end()) throw Error(ErrorKind::Schema, "no mask named '" + name + "' in the input");
    return topo::SubcomplexMask::of(ci.doc.complex.complex.size(), it->second);
}

Outcome cmd_homology(const json& j, const std::string& relative) {
    auto ci = load_cosheaf(j);
    sheaf::ChainComplex c;
    std::optional<topo::SubcomplexMask> sub;
    if (relative.empty()) {
        c = sheaf::chain_complex(ci.doc.cosheaf);
    } else {
        sub = named_mask(ci, relative);
        c = sheaf::relative_chain_complex(ci.doc.cosheaf, *sub);
    }
    Report dd = sheaf::check_complex(c);
    auto h = sheaf::homology_dims(c);
    long chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(h[k]);
    Outcome out;
    out.doc = json{{"input", io::version_of(j)}, {"homology", dims_json(h)}, {"chain_dims", dims_json(c.dims)}, {"euler_characteristic", chi}};
    json checks{{"boundary_squares_to_zero", io::report_to_json(dd)}};
    out.ok = dd.ok;
    std::optional<Report> les;
    if (sub) {
        les = sheaf::les_of_pair_check(ci.doc.cosheaf, *sub);
        checks["long_exact_sequence"] = io::report_to_json(*les);
        out.ok = out.ok && les->ok;
        out.doc["relative_to"] = relative;
    }
    out.doc["checks"] = checks;
    out.table = (sub ? "relative to '" + relative + "': " : std::string()) + homology_line(h, "H_") + "\neuler characteristic " + std::to_string(chi) + "\n" +
                check_line("d^2 = 0", dd);
    if (les) out.table += check_line("long exact sequence", *les);
    return out;
}

Outcome cmd_ss(const json& j, std::vector<std::string> levels) {
    auto ci = load_cosheaf(j);
    const std::size_t n = ci.doc.complex.complex.size();
    if (levels.empty())
        for (const auto& [name, ids] : ci.masks) levels.push_back(name);
    if (levels.empty()) throw Error(ErrorKind::Schema, "ss needs filtration masks: add \"masks\" to the input or pass --levels");
    std::vector<topo::SubcomplexMask> masks;
    for (const auto& name : levels) masks.push_back(named_mask(ci, name));
    if (masks.back() != topo::SubcomplexMask::all(n)) masks.push_back(topo::SubcomplexMask::all(n));
    auto fc = spectral::FilteredComplex::from_masks(ci.doc.cosheaf, masks);
    auto pages = spectral::all_pages(fc);
    Report dd, graded, route;
    for (const auto& pg : pages) dd.merge(spectral::check_dd_zero(pg), page_label(pg.r, false) + ": ");
    for (std::size_t k = 0; k + 1 < pages.size(); ++k)
        if (spectral::next_page_dims(pages[k]) != pages[k + 1].dims())
            route.fail("homology of " + page_label(pages[k].r, false) + " differs from the closed-form next page");
    if (spectral::graded_homology_dims(fc) != pages.front().dims()) graded.fail("E^1 differs from the homology of the graded pieces");
    Report euler = spectral::euler_invariance(fc);
    auto total = sheaf::homology_dims(fc.total());
    Report conv;
    std::map<std::size_t, std::size_t> inf_by_n;
    for (const auto& [key, dim] : pages.back().dims()) inf_by_n[key.second] += dim;
    for (std::size_t k = 0; k < total.size(); ++k) {
        const std::size_t e = inf_by_n.count(k) ? inf_by_n[k] : 0;
        if (e != total[k]) conv.fail("degree " + std::to_string(k) + ": E^inf has dimension " + std::to_string(e) + ", H has " + std::to_string(total[k]));
    }
    const std::size_t degen = spectral::degeneration_page(pages);
    Outcome out;
    json pj = json::array();
    for (const auto& pg : pages) pj.push_back(io::page_to_json(pg));
    out.doc = json{{"input", io::version_of(j)},
                   {"levels", levels},
                   {"pages", pj},
                   {"degeneration_page", degen},
                   {"total_homology", dims_json(total)},
                   {"checks",
                    {{"d_squared_zero", io::report_to_json(dd)},
                     {"iterated_route", io::report_to_json(route)},
                     {"graded_homology", io::report_to_json(graded)},
                     {"euler_invariance", io::report_to_json(euler)},
                     {"convergence", io::report_to_json(conv)}}}};
    out.ok = dd.ok && route.ok && graded.ok && euler.ok && conv.ok;
    std::ostringstream os;
    const long L = static_cast<long>(fc.length());
    for (const auto& pg : pages) {
        const bool inf = &pg == &pages.back();
        os << page_label(pg.r, inf) << " (rows q, columns p)\n" << render_grid(pq_dims(pg), "p", "q", 0, L);
    }
    os << "degenerates at E^" << degen << "\n" << homology_line(total, "H_") << "\n";
    os << check_line("d^2 = 0", dd) << check_line("iterated route", route) << check_line("E^1 = graded homology", graded)
       << check_line("euler invariance", euler) << check_line("convergence", conv);
    out.table = os.str();
    return out;
}

std::map<std::pair<long, long>, std::size_t> cork_grid(const spectral::Page& pg) {
    std::map<std::pair<long, long>, std::size_t> out;
    for (const auto& [key, dim] : cusp::cork_dims(pg)) out[key] = dim;
    return out;
}

std::string corank_table(const cusp::CorankResult& res, std::size_t r) {
    std::ostringstream os;
    os << "level p = " << res.p << ", d = " << res.d << "\n";
    for (const auto& pg : res.ss.pages) {
        const bool inf = &pg == &res.ss.pages.back();
        os << page_label(pg.r, inf) << " (rows j, columns i)\n" << render_grid(cork_grid(pg), "i", "j", 1, static_cast<long>(std::max<std::size_t>(r, 1)));
    }
    os << "degenerates at E^" << res.ss.degeneration_page << "\n";
    os << "total homology: " << homology_line(res.ss.total_homology, "H_") << "\n";
    os << "euler characteristic of E^1: " << res.euler.chi_e1;
    if (res.euler.formula) os << " (cusp formula " << res.euler.formula->get_str() << ")";
    os << "\n";
    if (res.eis) os << "Eisenstein part dimension: " << *res.eis << "\n";
    os << check_line("spectral sequence", res.ss.spectral_checks) << check_line("E^1 by cusp", res.cross)
       << check_line("convergence", res.convergence) << check_line("shape", res.shape) << check_line("degeneration", res.degeneration)
       << check_line("euler", res.euler.report);
    return os.str();
}

std::vector<std::size_t> available_levels(const cusp::CorankInput& in) {
    std::vector<std::size_t> ps;
    for (std::size_t p = 0; p < std::max<std::size_t>(in.n, 1); ++p) {
        bool all = !in.cusps.empty();
        for (const auto& c : in.cusps) all = all && c.levels.count(p);
        if (all) ps.push_back(p);
    }
    if (ps.empty()) throw Error(ErrorKind::MissingCosheaf, "no level p has cosheaf data on every cusp");
    return ps;
}

void check_valid(const cusp::CorankInput& in) {
    Report rep = cusp::validate_input(in);
    if (rep.ok) return;
    std::string msg = "corank input is inconsistent:";
    for (const auto& m : rep.violations) msg += " " + m + ";";
    throw Error(ErrorKind::InvalidCosheaf, msg);
}

Outcome cmd_corank(const json& j, std::optional<std::size_t> p) {
    auto in = io::corank_from_json(j);
    check_valid(in);
    if (p && in.n > 0 && *p >= in.n) throw Error(ErrorKind::Schema, "level p = " + std::to_string(*p) + " must be below n = " + std::to_string(in.n));
    const auto ps = p ? std::vector<std::size_t>{*p} : available_levels(in);
    Outcome out;
    json results = json::array();
    for (auto q : ps) {
        auto res = cusp::run_corank(in, q);
        results.push_back(io::corank_result_to_json(res));
        out.table += corank_table(res, in.r);
        out.ok = out.ok && res.ok();
    }
    out.doc = ps.size() == 1 ? results[0] : json{{"levels", results}};
    return out;
}

Outcome cmd_euler(const json& j) {
    auto in = io::corank_from_json(j);
    check_valid(in);
    std::map<std::size_t, cusp::CorankSS> ss;
    const auto dual = cusp::build_dual_complex(in);
    for (auto p : available_levels(in)) ss.emplace(p, cusp::corank_ss(in, dual, p));
    auto rep = cusp::euler_identity(in, ss);
    json levels = json::array();
    std::ostringstream os;
    for (const auto& lv : rep.levels) {
        json lj{{"p", lv.p}, {"chi_e1", lv.chi_e1}, {"chi_infinity", lv.chi_inf}, {"report", io::report_to_json(lv.report)}};
        os << "p = " << lv.p << ": chi(E^1) = " << lv.chi_e1 << ", chi(E^inf) = " << lv.chi_inf;
        if (lv.formula) {
            lj["cusp_formula"] = io::rational_to_json(*lv.formula);
            os << ", cusp formula " << lv.formula->get_str();
        }
        os << "\n";
        levels.push_back(std::move(lj));
    }
    Outcome out;
    out.doc = json{{"input", io::version_of(j)}, {"levels", levels}, {"report", io::report_to_json(rep.report)}};
    if (rep.aggregate) {
        out.doc["aggregate"] = json{{"alternating_chi_e1", io::rational_to_json(rep.aggregate->first)},
                                    {"cusp_formula", io::rational_to_json(rep.aggregate->second)}};
        os << "alternating sum over p: " << rep.aggregate->first.get_str() << " (cusp formula " << rep.aggregate->second.get_str() << ")\n";
    }
    os << check_line("euler identity", rep.report);
    out.table = os.str();
    out.ok = rep.report.ok;
    return out;
}

json flag_json(const topo::SimplicialComplex& s, const topo::Flag& f) {
    json arr = json::array();
    for (auto id : f.chain) arr.push_back(s.simplex(id));
    return arr;
}

Outcome cmd_retract(const json& j) {
    auto in = io::facepair_from_json(j);
    Report cond = retraction::check_conditions(in);
    Outcome out;
    if (!cond.ok) {
        out.ok = false;
        out.doc = json{{"input", io::kFacePairV1}, {"checks", {{"conditions", io::report_to_json(cond)}}}};
        out.table = check_line("conditions", cond);
        return out;
    }
    auto pair = retraction::retract_complex(in);
    const auto& sd = pair.subdivided;
    json cells = json::array();
    for (std::size_t c = 0; c < sd.complex.size(); ++c) cells.push_back(flag_json(in.ambient, sd.flag_index[c]));
    const int top = sd.complex.top_dim();
    std::size_t top_plus = 0, top_minus = 0;
    for (std::size_t c = 0; c < sd.complex.size(); ++c) {
        if (static_cast<int>(sd.complex.simplex(c).size()) - 1 != top) continue;
        top_plus += pair.plus.contains(c) && !pair.boundary_plus.contains(c);
        top_minus += pair.minus.contains(c) && !pair.boundary_plus.contains(c);
    }
    Report restr = retraction::restriction_check(in, pair);
    auto map = retraction::retraction_cochain_map(in, pair);
    Report chain = retraction::check_cochain_map(map);
    Report qis = retraction::check_quasi_isomorphism(map);
    json checks{{"conditions", io::report_to_json(cond)},
                {"restriction", io::report_to_json(restr)},
                {"cochain_map", io::report_to_json(chain)},
                {"quasi_isomorphism", io::report_to_json(qis)}};
    out.ok = restr.ok && chain.ok && qis.ok;
    std::optional<Report> bd;
    if (in.ambient.maximal().size() == 1) {
        bd = retraction::boundary_decomposition_check(in, pair);
        checks["boundary_decomposition"] = io::report_to_json(*bd);
        out.ok = out.ok && bd->ok;
    }
    auto coh_src = sheaf::homology_dims(map.source);
    auto coh_tgt = sheaf::homology_dims(map.target);
    out.doc = json{{"input", io::kFacePairV1},
                   {"subdivided_cells", cells},
                   {"plus", pair.plus.ids()},
                   {"boundary_plus", pair.boundary_plus.ids()},
                   {"minus", pair.minus.ids()},
                   {"top_plus_cells", top_plus},
                   {"top_minus_cells", top_minus},
                   {"max_vertex_star", pair.max_vertex_star},
                   {"cohomology_pair", dims_json(coh_tgt)},
                   {"cohomology_retraction", dims_json(coh_src)},
                   {"checks", checks}};
    std::ostringstream os;
    os << "subdivided cells: " << sd.complex.size() << " (top dimension " << top << ")\n";
    os << "PLUS top cells: " << top_plus << "\nMINUS top cells: " << top_minus << "\n";
    os << "cells in Delta+: " << pair.plus.count() << ", in its boundary part: " << pair.boundary_plus.count() << "\n";
    os << "cohomology of the pair: " << homology_line(coh_tgt, "H^") << "\n";
    os << "cohomology of the retraction: " << homology_line(coh_src, "H^") << "\n";
    os << check_line("conditions", cond) << check_line("restriction", restr) << check_line("cochain map", chain) << check_line("quasi-isomorphism", qis);
    if (bd) os << check_line("boundary decomposition", *bd);
    out.table = os.str();
    return out;
}

Outcome cmd_acyclicity(const json& j, std::size_t degree) {
    auto in = io::facepair_from_json(j);
    Report rep = retraction::verify_acyclicity(in, degree);
    std::vector<std::size_t> coh;
    if (retraction::check_conditions(in).ok) coh = sheaf::homology_dims(sheaf::compact_cochain_pair(in.ambient, in.boundary));
    Outcome out;
    out.ok = rep.ok;
    out.doc = json{{"input", io::kFacePairV1}, {"expected_degree", degree}, {"cohomology", dims_json(coh)}, {"report", io::report_to_json(rep)}};
    out.table = "relative cohomology: " + homology_line(coh, "H^") + "\n" + check_line("concentrated in degree " + std::to_string(degree), rep);
    return out;
}

Outcome cmd_example(const std::string& name, std::size_t cusps, std::size_t period) {
    if (name != "hilbert") throw Error(ErrorKind::Schema, "unknown example '" + name + "' (available: hilbert)");
    Outcome out;
    out.doc = io::corank_to_json(cusp::hilbert_example(cusps, period));
    out.table = io::dump(out.doc);
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cosheaf homology, spectral sequences and corank spectral sequences", "corank-ss"};
    app.require_subcommand(1);

    std::string input = "-", output, format = "json";
    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) sub->add_option("input", input, "input JSON file, '-' for stdin");
        sub->add_option("-o,--output", output, "write the report here instead of stdout");
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto* validate = app.add_subcommand("validate", "check an input document against its schema and invariants");
    add_common(validate, true);

    std::string relative;
    auto* homology = app.add_subcommand("homology", "cellular (co)sheaf homology of a complex.v1 or cosheaf.v1 input");
    add_common(homology, true);
    homology->add_option("--relative", relative, "mask name: homology relative to that subcomplex");

    std::vector<std::string> levels;
    auto* ss = app.add_subcommand("ss", "spectral sequence of a filtration given by named masks");
    add_common(ss, true);
    ss->add_option("--levels", levels, "mask names F_0, F_1, ... in order (default: all masks by name)")->delimiter(',');

    std::optional<std::size_t> level;
    auto* corank = app.add_subcommand("corank", "corank spectral sequence of a corank.v1 input");
    add_common(corank, true);
    corank->add_option("--p", level, "level p (default: every level with data)");

    auto* retract = app.add_subcommand("retract", "barycentric retraction of a facepair.v1 input");
    add_common(retract, true);

    std::size_t degree = 0;
    auto* acyclicity = app.add_subcommand("acyclicity", "relative cochain cohomology is Q in one degree");
    add_common(acyclicity, true);
    acyclicity->add_option("--degree", degree, "expected degree")->required();

    auto* euler = app.add_subcommand("euler", "Euler characteristic identities of a corank.v1 input");
    add_common(euler, true);

    std::string example_name;
    std::size_t cusps = 1, period = 3;
    auto* example = app.add_subcommand("example", "emit a built-in corank.v1 example");
    add_common(example, false);
    example->add_option("name", example_name, "example name (hilbert)")->required();
    example->add_option("--cusps", cusps, "number of cusps");
    example->add_option("--period", period, "edges of the circle quotient");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitSchema;
    }

    try {
        Outcome res;
        auto load = [&] { return io::parse(io::read_input(input)); };
        if (*validate)
            res = cmd_validate(load());
        else if (*homology)
            res = cmd_homology(load(), relative);
        else if (*ss)
            res = cmd_ss(load(), levels);
        else if (*corank)
            res = cmd_corank(load(), level);
        else if (*retract)
            res = cmd_retract(load());
        else if (*acyclicity)
            res = cmd_acyclicity(load(), degree);
        else if (*euler)
            res = cmd_euler(load());
        else
            res = cmd_example(example_name, cusps, period);

        const std::string text = format == "table" ? res.table : io::dump(res.doc);
        if (output.empty()) {
            out << text;
            out.flush();
        } else {
            std::ofstream f(output, std::ios::binary);
            if (!f) throw Error(ErrorKind::Io, "cannot write '" + output + "'");
            f << text;
            if (!f) throw Error(ErrorKind::Io, "failed writing '" + output + "'");
        }
        if (!res.ok) err << "corank-ss: one or more checks failed\n";
        return res.ok ? kExitOk : kExitCheckFailed;
    } catch (const Error& e) {
        err << "corank-ss: " << e.what() << "\n";
        return e.kind() == ErrorKind::Schema || e.kind() == ErrorKind::Io ? kExitSchema : kExitCheckFailed;
    }
}

}  // namespace corank::cli

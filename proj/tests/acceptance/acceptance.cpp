// One line per acceptance criterion; exit status is nonzero when any line reads FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corank/cli/app.hpp"
#include "corank/cusp/corank.hpp"
#include "corank/error.hpp"
#include "corank/io/json_io.hpp"
#include "corank/linalg/modrank.hpp"
#include "corank/linalg/ops.hpp"
#include "corank/retraction/retraction.hpp"
#include "corank/spectral/spectral.hpp"
#include "../support/generators.hpp"
#include "../support/oracle.hpp"
#include "../support/spectral_oracle.hpp"

using namespace corank;
using linalg::Matrix;
using linalg::Rational;
using linalg::Subspace;

namespace {

const std::string kFixtures = CORANK_FIXTURE_DIR;

/// Collects the first few failures of one criterion.
struct Outcome {
    std::size_t failures = 0;
    std::vector<std::string> notes;
    std::string summary;

    void fail(const std::string& what) {
        if (failures++ < 5) notes.push_back(what);
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

template <class K, class V>
std::string show(const std::map<K, V>& m) {
    std::ostringstream os;
    os << "{";
    for (const auto& [k, v] : m) os << "(" << k.first << "," << k.second << "):" << v << " ";
    os << "}";
    return os.str();
}

std::string show(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// 1 -------------------------------------------------------------------------------------------

void linear_algebra(Outcome& out) {
    gen::Rng rng(1001);
    for (int t = 0; t < 500; ++t) {
        const auto r = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        const auto c = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
        Matrix m = t % 4 == 0 ? gen::random_low_rank(rng, r, c, static_cast<std::size_t>(gen::uniform(rng, 1, 3)))
                              : gen::random_matrix(rng, r, c, -5, 5, t % 2 ? 1.0 : 0.5);
        const std::size_t want = oracle::rank(m);
        const std::string tag = "matrix " + std::to_string(t) + ": ";
        out.expect(linalg::rank(m) == want, tag + "fraction-free rank differs from the oracle");
        out.expect(linalg::rank_certified(m) == want, tag + "certified rank differs from the oracle");
        const auto k = linalg::kernel(m);
        out.expect(k.dim() + want == c, tag + "rank + nullity != columns");
        out.expect(k.dim() == 0 || (m * k.basis()).is_zero(), tag + "kernel vector not annihilated");
        out.expect(linalg::image(m).dim() == want, tag + "image dimension differs from rank");

        // modular law on column spaces: A ⊆ X implies X ∩ (A + B) = A + (X ∩ B)
        Subspace a = linalg::image(m.column_range(0, c / 2 + 1 > c ? c : c / 2 + 1));
        Subspace b = linalg::image(gen::random_matrix(rng, r, 2, -5, 5));
        Subspace x = linalg::sum(a, linalg::image(gen::random_matrix(rng, r, 1, -5, 5)));
        out.expect(linalg::intersect(x, linalg::sum(a, b)) == linalg::sum(a, linalg::intersect(x, b)), tag + "modular law fails");
        out.expect(linalg::sum(a, b).dim() + linalg::intersect(a, b).dim() == a.dim() + b.dim(), tag + "dimension formula fails");

        // induced maps on quotients commute with composition
        Matrix g = gen::random_matrix(rng, r, r, -5, 5, 0.5);
        Subspace s_big = linalg::image(gen::random_matrix(rng, c, 2, -5, 5));
        Subspace s_small = linalg::intersect(s_big, linalg::image(gen::random_matrix(rng, c, 1, -5, 5)));
        Subspace m_big = linalg::sum(linalg::image_of(m, s_big), b);
        Subspace m_small = linalg::image_of(m, s_small);
        Subspace t_big = linalg::image_of(g, m_big);
        Subspace t_small = linalg::image_of(g, m_small);
        Matrix fm = linalg::induced_map(m, s_big, s_small, m_big, m_small);
        Matrix fg = linalg::induced_map(g, m_big, m_small, t_big, t_small);
        out.expect(linalg::induced_map(g * m, s_big, s_small, t_big, t_small) == fg * fm, tag + "induced maps do not compose");
    }
    out.summary = "500 matrices";
}

// 2 -------------------------------------------------------------------------------------------

void cosheaf_suite(Outcome& out) {
    gen::Rng rng(2002);
    std::size_t max_stalk = 0;
    for (int t = 0; t < 100; ++t) {
        auto base = std::make_shared<const topo::DeltaComplex>(topo::as_delta(gen::random_simplicial(rng, 6, 3)));
        auto f = gen::random_cosheaf(rng, base, 3);
        for (auto d : f.dims()) max_stalk = std::max(max_stalk, d);
        const std::string tag = "fixture " + std::to_string(t) + ": ";
        out.expect(sheaf::validate_cosheaf(f).ok, tag + "generated cosheaf invalid");
        auto c = sheaf::chain_complex(f);
        for (std::size_t k = 1; k < c.num_degrees(); ++k)
            out.expect((c.differential[k - 1] * c.differential[k]).is_zero(), tag + "boundary squared nonzero in degree " + std::to_string(k));
        out.expect(sheaf::check_complex(c).ok, tag + "check_complex disagrees");
        std::vector<Matrix> diffs(c.differential.begin(), c.differential.end());
        out.expect(sheaf::homology_dims(c) == oracle::homology(diffs), tag + "homology differs from the oracle");
        auto sub = gen::random_closed_mask(rng, *base);
        auto les = sheaf::les_of_pair_check(f, sub);
        out.expect(les.ok, tag + "long exact sequence: " + (les.violations.empty() ? "" : les.violations.front()));
    }
    const std::vector<std::pair<std::string, std::pair<topo::DeltaComplex, std::vector<std::size_t>>>> spaces = {
        {"interval", {gen::interval(), {1, 0}}},
        {"circle", {gen::circle(), {1, 1}}},
        {"sphere", {gen::sphere(), {1, 0, 1}}},
        {"torus", {gen::torus(), {1, 2, 1}}}};
    for (const auto& [name, pr] : spaces) {
        auto f = sheaf::Cosheaf::constant(std::make_shared<const topo::DeltaComplex>(pr.first), 1);
        auto h = sheaf::homology_dims(sheaf::chain_complex(f));
        out.expect(h == pr.second, name + ": Betti numbers " + show(h) + ", expected " + show(pr.second));
    }
    out.summary = "100 cosheaves (stalks <= " + std::to_string(max_stalk) + "), 4 standard spaces";
}

// 3 -------------------------------------------------------------------------------------------

void spectral_suite(Outcome& out) {
    gen::Rng rng(3003);
    int made = 0;
    std::size_t biggest = 0;
    while (made < 50) {
        auto base = std::make_shared<const topo::DeltaComplex>(topo::as_delta(gen::random_simplicial(rng, 6, 3)));
        auto f = gen::random_cosheaf(rng, base, 3);
        std::size_t total = 0;
        for (auto d : f.dims()) total += d;
        if (total == 0 || total > 30) continue;
        biggest = std::max(biggest, total);
        const std::size_t length = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        auto masks = gen::random_filtration(rng, *base, length);
        const std::string tag = "filtration " + std::to_string(made) + ": ";
        ++made;
        auto fc = spectral::FilteredComplex::from_masks(f, masks);
        auto pages = spectral::all_pages(fc);
        std::vector<Matrix> diffs(fc.total().differential.begin(), fc.total().differential.end());
        const auto h = oracle::homology(diffs);
        std::map<std::size_t, std::size_t> inf_by_n;
        for (const auto& [key, dim] : pages.back().dims()) inf_by_n[key.second] += dim;
        for (std::size_t n = 0; n < h.size(); ++n)
            out.expect((inf_by_n.count(n) ? inf_by_n[n] : 0) == h[n], tag + "E^inf in degree " + std::to_string(n) + " misses H");
        out.expect(pages.back().dims() == oracle::einf_dims(fc.total(), masks), tag + "E^inf differs from the rank oracle");
        for (const auto& pg : pages) out.expect(pg.euler() == pages.front().euler(), tag + "Euler characteristic changes at E^" + std::to_string(pg.r));
        const auto graded = oracle::e1_dims(fc.total(), masks);
        out.expect(pages.front().dims() == graded, tag + "E^1 " + show(pages.front().dims()) + " vs graded homology " + show(graded));
        for (std::size_t k = 0; k + 1 < pages.size(); ++k) {
            out.expect(spectral::check_dd_zero(pages[k]).ok, tag + "d^r d^r != 0");
            out.expect(spectral::next_page_dims(pages[k]) == pages[k + 1].dims(), tag + "closed form differs from homology of the previous page");
        }
    }
    out.summary = "50 filtrations, total dimension <= " + std::to_string(biggest);
}

// 4 -------------------------------------------------------------------------------------------

void retraction_suite(Outcome& out) {
    std::size_t cases = 0;
    for (std::size_t d = 0; d <= 4; ++d)
        for (std::size_t mask = 0; mask < (1u << (d + 1)); ++mask) {
            topo::Simplex delta0;
            for (std::size_t v = 0; v <= d; ++v)
                if (mask >> v & 1) delta0.push_back(v);
            ++cases;
            auto rep = retraction::verify_simplex(d, delta0);
            if (!rep.ok) out.fail("d = " + std::to_string(d) + ", face mask " + std::to_string(mask) + ": " + rep.violations.front());
        }
    out.summary = std::to_string(cases) + " (simplex, face) pairs";
}

// 5 -------------------------------------------------------------------------------------------

/// Independent of the library: which side holds the largest barycentric coordinate.
int side(const topo::Point& lambda, const topo::Simplex& d0, const topo::Simplex& d1) {
    Rational m0 = 0, m1 = 0;
    for (auto v : d0) m0 = std::max(m0, lambda[v]);
    for (auto v : d1) m1 = std::max(m1, lambda[v]);
    return m1 > m0 ? +1 : m1 < m0 ? -1 : 0;
}

void crossing_suite(Outcome& out) {
    gen::Rng rng(5005);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        std::vector<std::size_t> verts(d + 1);
        for (std::size_t v = 0; v <= d; ++v) verts[v] = v;
        std::shuffle(verts.begin(), verts.end(), rng);
        const std::size_t split = static_cast<std::size_t>(gen::uniform(rng, 1, static_cast<long>(d)));
        topo::Simplex d0(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(split));
        topo::Simplex d1(verts.begin() + static_cast<std::ptrdiff_t>(split), verts.end());
        std::sort(d0.begin(), d0.end());
        std::sort(d1.begin(), d1.end());
        auto point_on = [&](const topo::Simplex& face) {
            topo::Point p(d + 1, Rational(0));
            Rational total = 0;
            for (auto v : face) {
                p[v] = Rational(gen::uniform(rng, 1, 9));
                total += p[v];
            }
            for (auto v : face) p[v] /= total;
            return p;
        };
        const auto x = point_on(d0), y = point_on(d1);
        const std::string tag = "segment " + std::to_string(t) + ": ";
        const Rational ts = retraction::crossing_parameter(x, y, d0, d1);
        if (!(ts > 0 && ts < 1)) {
            out.fail(tag + "t outside (0,1)");
            continue;
        }
        auto at = [&](const Rational& s) {
            topo::Point p(d + 1);
            for (std::size_t v = 0; v <= d; ++v) p[v] = s * x[v] + (1 - s) * y[v];
            return p;
        };
        // sample points sorted by t, including both sides of the crossing arbitrarily close
        std::vector<Rational> ts_list;
        for (int k = 0; k <= 40; ++k) {
            Rational s(k, 40);
            s.canonicalize();  // the two-argument constructor leaves 16/40 unreduced
            ts_list.push_back(s);
        }
        const Rational eps(1, 1000000007);
        ts_list.push_back(ts - eps);
        ts_list.push_back(ts + eps);
        ts_list.push_back(ts);
        std::sort(ts_list.begin(), ts_list.end());
        int transitions = 0, prev = 0;
        for (const auto& s : ts_list) {
            const auto p = at(s);
            const int want = side(p, d0, d1);
            const auto got = retraction::classify_point(p, d0, d1);
            const int lib = got == retraction::CellClass::Plus ? 1 : got == retraction::CellClass::Minus ? -1 : 0;
            out.expect(lib == want, tag + "classification disagrees with coordinate comparison at t = " + s.get_str() + " (crossing " + ts.get_str() + ")");
            const int expected_side = s < ts ? 1 : s > ts ? -1 : 0;
            out.expect(want == expected_side, tag + "wrong side at t = " + s.get_str() + " (crossing " + ts.get_str() + ")");
            if (want != 0) {
                if (prev != 0 && want != prev) ++transitions;
                prev = want;
            }
        }
        out.expect(transitions == 1, tag + std::to_string(transitions) + " transitions");
    }
    out.summary = "500 segments";
}

// 6 -------------------------------------------------------------------------------------------

void acyclicity_suite(Outcome& out) {
    for (const auto& [name, degree] : std::vector<std::pair<std::string, std::size_t>>{{"quadrant_cone.json", 1}, {"cone3.json", 2}}) {
        auto in = io::facepair_from_json(io::parse(io::read_input(kFixtures + "/" + name)));
        auto rep = retraction::verify_acyclicity(in, degree);
        out.expect(rep.ok, name + ": " + (rep.violations.empty() ? "" : rep.violations.front()));
        // oracle: relative homology over Q has the same dimensions as relative cohomology
        auto d = topo::as_delta(in.ambient);
        std::vector<char> keep(d.size(), 1), drop(d.size(), 0);
        for (auto id : in.boundary.ids()) drop[id] = 1;
        auto b = oracle::betti(d, keep, drop);
        std::vector<std::size_t> want(degree + 1, 0);
        want[degree] = 1;
        b.resize(std::max(b.size(), want.size()));
        out.expect(b == want, name + ": oracle gives " + show(b));
    }
    out.summary = "quadrant cone in degree 1, 3-cone in degree 2";
}

// 7 -------------------------------------------------------------------------------------------

void hilbert_suite(Outcome& out) {
    for (std::size_t c = 1; c <= 4; ++c) {
        std::optional<cusp::CorkDims> first;
        for (std::size_t period : {2u, 3u, 5u}) {
            const std::string tag = "c = " + std::to_string(c) + ", period " + std::to_string(period) + ": ";
            auto res = cusp::run_corank(cusp::hilbert_example(c, period), 0);
            auto e1 = cusp::cork_dims(res.ss.pages.front());
            out.expect(e1 == cusp::CorkDims{{{1, 0}, c}, {{1, 1}, c}}, tag + "E^1 is " + show(e1));
            out.expect(res.ss.degeneration_page == 1, tag + "degenerates at E^" + std::to_string(res.ss.degeneration_page));
            out.expect(res.shape.ok, tag + "shape check fails");
            out.expect(res.euler.chi_e1 == 0, tag + "chi(E^1) = " + std::to_string(res.euler.chi_e1));
            out.expect(res.euler.formula && *res.euler.formula == 0, tag + "cusp formula missing or nonzero");
            out.expect(res.ok(), tag + "some check failed");
            if (first)
                out.expect(*first == e1, tag + "E^1 depends on the period");
            else
                first = e1;
        }
    }
    out.summary = "c = 1..4, periods 2, 3, 5";
}

// 8 -------------------------------------------------------------------------------------------

void cross_check_suite(Outcome& out) {
    std::size_t levels = 0;
    for (const char* name : {"mixed_pillow.json", "mixed_tetrahedron.json", "isolated_corank2.json"}) {
        auto in = io::corank_from_json(io::parse(io::read_input(kFixtures + "/" + name)));
        auto dual = cusp::build_dual_complex(in);
        for (std::size_t p = 0; p < in.n; ++p) {
            bool have = true;
            for (const auto& c : in.cusps) have = have && c.levels.count(p);
            if (!have) continue;
            ++levels;
            const std::string tag = std::string(name) + " p = " + std::to_string(p) + ": ";
            auto res = cusp::run_corank(in, p);
            cusp::CorkDims sums;
            for (const auto& [key, parts] : res.e1_table)
                for (const auto& part : parts)
                    if (part.dim) sums[key] += part.dim;
            const auto e1 = cusp::cork_dims(res.ss.pages.front());
            out.expect(sums == e1, tag + "E^1 " + show(e1) + " vs cusp sums " + show(sums));
            out.expect(res.cross.ok, tag + "cross_check reports a mismatch");
            auto f = cusp::total_cosheaf(in, dual, p);
            auto c = sheaf::chain_complex(f);
            std::vector<Matrix> diffs(c.differential.begin(), c.differential.end());
            const auto h = oracle::homology(diffs);
            auto inf = cusp::total_dims(cusp::cork_dims(res.ss.pages.back()));
            for (long m = 2; m <= static_cast<long>(h.size()) + 1; ++m) {
                const std::size_t e = inf.count(m) ? inf[m] : 0;
                const std::size_t want = static_cast<std::size_t>(m - 1) < h.size() ? h[static_cast<std::size_t>(m - 1)] : 0;
                out.expect(e == want, tag + "E^inf_" + std::to_string(m) + " = " + std::to_string(e) + " but H_" + std::to_string(m - 1) + " = " +
                                          std::to_string(want));
            }
            out.expect(res.convergence.ok, tag + "convergence check fails");
        }
    }
    out.summary = std::to_string(levels) + " fixture levels";
}

// 9 -------------------------------------------------------------------------------------------

std::vector<std::vector<std::string>> fixture_commands() {
    const auto f = [](const char* n) { return kFixtures + "/" + n; };
    std::vector<std::vector<std::string>> cmds;
    for (const char* n : {"mixed_pillow.json", "mixed_tetrahedron.json", "isolated_corank2.json"}) {
        cmds.push_back({"corank", f(n)});
        cmds.push_back({"corank", f(n), "--format", "table"});
        cmds.push_back({"euler", f(n)});
        cmds.push_back({"validate", f(n)});
    }
    for (const char* n : {"triangle_v0.json", "quadrant_cone.json", "cone3.json"}) {
        cmds.push_back({"retract", f(n)});
        cmds.push_back({"validate", f(n)});
    }
    cmds.push_back({"acyclicity", f("quadrant_cone.json"), "--degree", "1"});
    cmds.push_back({"acyclicity", f("cone3.json"), "--degree", "2"});
    cmds.push_back({"homology", f("torus.json")});
    cmds.push_back({"ss", f("torus.json")});
    cmds.push_back({"ss", f("torus.json"), "--format", "table"});
    cmds.push_back({"homology", f("interval_cosheaf.json"), "--relative", "ends"});
    cmds.push_back({"validate", f("garbage.json")});
    cmds.push_back({"example", "hilbert", "--cusps", "3", "--period", "5"});
    return cmds;
}

std::string run_suite_in_process() {
    std::string all;
    for (const auto& cmd : fixture_commands()) {
        std::vector<std::string> args{"corank-ss"};
        args.insert(args.end(), cmd.begin(), cmd.end());
        std::ostringstream o, e;
        const int code = cli::run(args, o, e);
        all += "$ " + cmd.front() + "\nexit " + std::to_string(code) + "\n" + o.str() + e.str();
    }
    return all;
}

std::string run_suite_binary(const std::string& bin) {
    std::string all;
    for (const auto& cmd : fixture_commands()) {
        std::string line = "'" + bin + "'";
        for (const auto& a : cmd) line += " '" + a + "'";
        line += " 2>&1";
        FILE* pipe = popen(line.c_str(), "r");
        if (!pipe) return "popen failed";
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) all.append(buf, n);
        all += "exit " + std::to_string(pclose(pipe)) + "\n";
    }
    return all;
}

void determinism_suite(Outcome& out) {
    std::vector<std::string> runs;
    for (const char* threads : {"1", "2", "4"}) {
        setenv("CORANK_SS_THREADS", threads, 1);
        runs.push_back(run_suite_in_process());
    }
    unsetenv("CORANK_SS_THREADS");
    out.expect(runs[0] == runs[1] && runs[1] == runs[2], "in-process reports differ between runs");
    std::size_t bytes = runs[0].size();
#ifdef CORANK_SS_BIN
    std::vector<std::string> bin;
    for (int k = 0; k < 3; ++k) bin.push_back(run_suite_binary(CORANK_SS_BIN));
    out.expect(bin[0] == bin[1] && bin[1] == bin[2], "command-line reports differ between runs");
    bytes += bin[0].size();
#endif
    out.summary = std::to_string(fixture_commands().size()) + " commands x 3 runs, " + std::to_string(bytes) + " bytes per run";
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0 = no time limit
    std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "linear algebra oracle", 5, linear_algebra},
        {2, "cosheaf complexes and exact sequences", 0, cosheaf_suite},
        {3, "spectral sequence oracle", 30, spectral_suite},
        {4, "exhaustive retraction checks", 60, retraction_suite},
        {5, "crossing uniqueness", 0, crossing_suite},
        {6, "acyclicity fixtures", 0, acyclicity_suite},
        {7, "Hilbert toy", 0, hilbert_suite},
        {8, "corank cross-check", 0, cross_check_suite},
        {9, "determinism", 0, determinism_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs >= c.budget_s) out.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
        const bool ok = out.failures == 0;
        failed += !ok;
        std::printf("[%s] criterion %d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, out.summary.c_str(), secs);
        for (const auto& n : out.notes) std::printf("       %s\n", n.c_str());
        if (out.failures > out.notes.size()) std::printf("       ... %zu failures in total\n", out.failures);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

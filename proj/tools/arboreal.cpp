#include "arboreal/error.hpp"
#include "arboreal/gallery.hpp"
#include "arboreal/graphs.hpp"
#include "arboreal/io.hpp"
#include "arboreal/lcc.hpp"
#include "arboreal/perm.hpp"
#include "arboreal/quotient.hpp"
#include "arboreal/spectral.hpp"
#include "arboreal/universal.hpp"

#include "../tests/acceptance/suite.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace arboreal;

namespace {

std::string readInput(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return readTextFile(path);
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        writeTextFile(path, text);
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

struct Options {
    int d = 2;
    int k = 3;
    int n = 10;
    int radius = 2;
    int q = 2;
    int dim = 3;
    std::uint64_t seed = 0;
    int maxAttempts = 1000;
    long long budget = 20'000'000;
    double tol = 1e-9;
    bool raw = false;
    bool full = false;
    bool cosets = false;
    bool dot = false;
    std::string rep;
    std::string out;
    std::string map;
    std::string gens;
    std::string input;
    std::string second;
    std::string suite = "desk";
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quotients of arboreal complexes: build, analyze, transform and verify"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* build = app.add_subcommand("build", "Build the quotient complex of a permutation representation");
    build->add_option("--rep", o.rep, "Representation file (stdin when omitted)");
    build->add_option("--out", o.out, "Output JSON (stdout when omitted)");
    build->callback([&] {
        action = [&] {
            PermRep rep = parseRep(readInput(o.rep));
            QuotientObject q = buildQuotient(rep);
            emit(o.out, writeDocument({q.complex, rep, {}, {}}));
            return 0;
        };
    });

    auto* analyze = app.add_subcommand("analyze", "Report structural properties of a complex");
    analyze->add_option("input", o.input, "Complex JSON (stdin when omitted)");
    analyze->add_option("--dot", o.out, "Also write the line graph in DOT format here");
    analyze->callback([&] {
        action = [&] {
            ComplexDocument doc = readDocument(readInput(o.input));
            std::cout << analysisReport(doc.complex);
            if (doc.rep) {
                RepDiagnostics rd = validate(*doc.rep);
                std::cout << "rep points: " << doc.rep->n << '\n';
                std::cout << "rep transitive: " << yesNo(rd.transitive) << '\n';
                std::cout << "intersection property: " << yesNo(intersectionProperty(*doc.rep)) << '\n';
            }
            if (!o.out.empty()) {
                std::vector<std::string> labels;
                for (int a = 0; a < doc.complex.topCount(); ++a)
                    labels.push_back("p" + std::to_string(a + 1));
                writeTextFile(o.out, toDot(lineGraph(doc.complex), labels));
            }
            return 0;
        };
    });

    auto* lcc = app.add_subcommand("lcc", "Link-connected cover of a complex");
    lcc->add_option("input", o.input, "Complex JSON (stdin when omitted)");
    lcc->add_option("--out", o.out, "Cover JSON (stdout when omitted)");
    lcc->add_option("--map", o.map, "Projection map JSON");
    lcc->callback([&] {
        action = [&] {
            ComplexDocument doc = readDocument(readInput(o.input));
            CoverResult cov = linkConnectedCover(doc.complex);
            emit(o.out, writeDocument({cov.complex, std::nullopt, {}, {}}));
            if (!o.map.empty())
                writeTextFile(o.map, writeMorphism(cov.projection));
            std::cerr << "split multicells: " << cov.splits << '\n';
            return 0;
        };
    });

    auto* spectra = app.add_subcommand("spectra", "Spectral gap of the upper Laplacian");
    spectra->add_option("input", o.input, "Complex JSON (stdin when omitted)");
    spectra->add_flag("--full", o.full, "Also print the spectrum of the whole operator");
    spectra->add_flag("--raw", o.raw, "Print the gap at full precision");
    spectra->add_option("--tol", o.tol, "Rank tolerance")->check(CLI::PositiveNumber);
    spectra->callback([&] {
        action = [&] {
            ComplexDocument doc = readDocument(readInput(o.input));
            std::cout << spectrumReport(doc.complex, o.full, o.tol, o.raw ? 0 : 6);
            return 0;
        };
    });

    auto* ball = app.add_subcommand("ball", "Ball around the base cell of the arboreal complex");
    ball->add_option("--d", o.d, "Dimension")->required();
    ball->add_option("--k", o.k, "Regularity")->required();
    ball->add_option("--radius", o.radius, "Radius")->required();
    ball->add_flag("--cosets", o.cosets, "Build from cosets instead of by attachment");
    ball->add_option("--out", o.out, "Output JSON (stdout when omitted)");
    ball->callback([&] {
        action = [&] {
            Params p{o.d, o.k};
            Ball b = o.cosets ? ballFromCosets(p, o.radius) : buildBall(p, o.radius);
            emit(o.out, writeDocument({b.complex, std::nullopt, b.cellWords, b.boundary}));
            return 0;
        };
    });

    auto* gallery = app.add_subcommand("gallery", "Example families");
    gallery->require_subcommand(1);
    auto* gm = gallery->add_subcommand("m", "Representation of the normal subgroup M(d,k)");
    gm->add_option("--d", o.d, "Dimension")->required();
    gm->add_option("--k", o.k, "Regularity")->required();
    gm->add_option("--out", o.out, "Representation file (stdout when omitted)");
    gm->callback([&] {
        action = [&] {
            emit(o.out, formatRep(mSubgroupRep({o.d, o.k})));
            return 0;
        };
    });
    auto* gc = gallery->add_subcommand("coxeter", "Coxeter complex from involution generators");
    gc->add_option("--gens", o.gens, "Generator file: degree, then one permutation per line")->required();
    gc->add_option("--out", o.out, "Quotient JSON (stdout when omitted)");
    gc->callback([&] {
        action = [&] {
            CoxeterResult r = coxeterComplex(parseGenerators(readTextFile(o.gens)));
            std::cerr << "group order: " << r.order << '\n'
                      << "vertices: " << r.direct.vertexCount() << '\n'
                      << "constructions agree: " << yesNo(r.isomorphic) << '\n'
                      << "simplicial: " << yesNo(r.simplicial) << '\n';
            emit(o.out, writeDocument({r.fromKernel, r.rep, {}, {}}));
            return r.isomorphic && r.simplicial ? 0 : 1;
        };
    });
    auto* gf = gallery->add_subcommand("flag", "Flag complex of a vector space over a prime field");
    gf->add_option("--dim", o.dim, "Ambient dimension")->required();
    gf->add_option("--q", o.q, "Prime field size")->required();
    gf->add_option("--out", o.out, "Complex JSON (stdout when omitted)");
    gf->callback([&] {
        action = [&] {
            FlagComplex f = flagComplex(o.dim, o.q);
            std::cerr << "subspaces: " << f.subspaces.size() << '\n'
                      << "flags: " << f.complex.topCount() << '\n'
                      << "upper regular: " << yesNo(isUpperRegular(f.complex)) << '\n';
            emit(o.out, writeDocument({f.complex, std::nullopt, {}, {}}));
            return 0;
        };
    });

    auto* random = app.add_subcommand("random", "Uniform random transitive representation");
    random->add_option("--d", o.d, "Dimension")->required();
    random->add_option("--k", o.k, "Regularity")->required();
    random->add_option("--n", o.n, "Number of points")->required();
    random->add_option("--seed", o.seed, "Seed")->envname("FORGE_SEED");
    random->add_option("--max-attempts", o.maxAttempts, "Draws before giving up")->check(CLI::PositiveNumber);
    random->add_option("--out", o.out, "Representation file (stdout when omitted)");
    random->callback([&] {
        action = [&] {
            int used = 0;
            PermRep rep = randomTransitiveRep({o.d, o.k}, o.n, o.seed, o.maxAttempts, &used);
            emit(o.out, formatRep(rep));
            return 0;
        };
    });

    auto* cover = app.add_subcommand("common-cover", "Common cover of two quotients");
    cover->add_option("first", o.input, "First representation file")->required();
    cover->add_option("second", o.second, "Second representation file")->required();
    cover->add_option("--out", o.out, "Representation file (stdout when omitted)");
    cover->callback([&] {
        action = [&] {
            PermRep r1 = readRepFile(o.input), r2 = readRepFile(o.second);
            CommonCover cc = intersectReps(r1, r2);
            QuotientObject top = buildQuotient(cc.rep);
            bool ok = true;
            for (const PermRep* f : {&r1, &r2}) {
                QuotientObject fq = buildQuotient(*f);
                Propagation prop = propagateMorphism(top.complex, fq.complex);
                ok &= prop.ok() && checkMorphism(prop.map, top.complex, fq.complex).ok() &&
                      isSurjective(prop.map, top.complex, fq.complex);
            }
            std::cerr << "cover points: " << cc.rep.n << '\n' << "maps onto both: " << yesNo(ok) << '\n';
            emit(o.out, formatRep(cc.rep));
            return ok ? 0 : 1;
        };
    });

    auto* lg = app.add_subcommand("line-graph", "Line graph of a complex");
    lg->add_option("input", o.input, "Complex JSON (stdin when omitted)");
    lg->add_flag("--dot", o.dot, "DOT output instead of the multigraph text format");
    lg->add_option("--out", o.out, "Output file (stdout when omitted)");
    lg->callback([&] {
        action = [&] {
            ComplexDocument doc = readDocument(readInput(o.input));
            Multigraph g = lineGraph(doc.complex);
            emit(o.out, o.dot ? toDot(g) : formatMultigraph(g));
            return 0;
        };
    });

    auto* dec = app.add_subcommand("decompose", "Split a regular multigraph into matchings and 2-factors");
    dec->add_option("input", o.input, "Multigraph file (stdin when omitted)");
    dec->add_option("--k", o.k, "Regularity")->required();
    dec->add_option("--budget", o.budget, "Search node budget")->check(CLI::PositiveNumber);
    dec->callback([&] {
        action = [&] {
            Multigraph g = parseMultigraph(readInput(o.input));
            Decomposition d = decomposeRegular(g, o.k, o.budget);
            std::cout << "decomposable: " << statusName(d.status) << '\n' << "method: " << d.method << '\n';
            for (std::size_t c = 0; c < d.classes.size(); ++c) {
                std::cout << "class " << c + 1 << ' '
                          << (d.classes[c].kind == ClassKind::PerfectMatching ? "matching" : "2-factor") << ':';
                for (int e : d.classes[c].edges)
                    std::cout << ' ' << g.edges[e].u + 1 << '-' << g.edges[e].v + 1;
                std::cout << '\n';
            }
            return 0;
        };
    });

    auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
    verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember({"desk"}));
    verify->callback([&] {
        action = [&] {
            int failed = 0;
            for (const auto& r : acceptance::runDeskSuite()) {
                std::cout << acceptance::formatResult(r) << '\n';
                failed += !r.pass;
            }
            return failed == 0 ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

#include "homhopf/io.hpp"
#include "homhopf/twist_functors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using namespace homhopf;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    json structure;  // null when the command only checks
    AxiomReport report;
};

struct Loaded {
    json doc;
    fs::path dir;
};

Loaded load(const std::string& path) { return {io::read_file(path), fs::path(path).parent_path()}; }

Vector parse_vector(const std::string& text, std::size_t n, const std::string& what) {
    Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
    if (v.size() != n) throw InputError(what + " needs " + std::to_string(n) + " comma-separated coefficients");
    return v;
}

AxiomReport prefixed(const AxiomReport& r, const std::string& prefix) {
    AxiomReport out;
    out.merge(r, prefix);
    return out;
}

GradedYD graded(io::Reader& rd, const Loaded& f) {
    auto g = rd.grade(f.doc);
    auto m = rd.yd_module(f.doc, f.dir);
    if (!g) throw InputError("module has no grade; the graded commands need one");
    return GradedYD(std::move(m), *g);
}

AutPair single_pair(io::Reader& rd, const Loaded& f) {
    auto pairs = rd.aut_pairs(f.doc, f.dir);
    if (pairs.size() != 1) throw InputError("expected exactly one automorphism pair");
    return pairs.front();
}

// Given explicitly, or the first one the sweep finds.
InvolutivePair involutive_pair(const AutPair& p, const std::string& theta, const std::string& omega) {
    const std::size_t n = p.carrier()->dim();
    if (!theta.empty() || !omega.empty()) {
        if (theta.empty() || omega.empty()) throw InputError("--theta and --omega go together");
        return {parse_vector(theta, n, "--theta"), parse_vector(omega, n, "--omega")};
    }
    auto found = sweep_pairs_in_involution(p);
    if (found.empty()) throw InputError("no pair in involution found for this automorphism pair");
    return found.front();
}

TwistReading reading_of(const std::string& s) {
    if (s == "literal") return TwistReading::literal;
    if (s == "xi-corrected") return TwistReading::xi_corrected;
    throw InputError("unknown reading '" + s + "'");
}

Outcome check_file(const std::string& kind, const std::string& path) {
    io::Reader rd;
    const auto f = load(path);
    const auto declared = f.doc.is_object() ? f.doc.value("kind", "") : "";
    if (declared != kind) throw InputError("file declares kind '" + declared + "', not '" + kind + "'");
    if (kind == "hopf") return {nullptr, check_hom_hopf(*rd.hopf(f.doc, f.dir))};
    if (kind == "algebra") return {nullptr, check_hom_algebra(*rd.algebra(f.doc, f.dir))};
    if (kind == "automorphism") {
        auto [h, m] = rd.raw_automorphism(f.doc, f.dir);
        return {nullptr, verify_automorphism(*h, m)};
    }
    if (kind == "aut-pair") {
        auto raw = rd.raw_aut_pairs(f.doc, f.dir);
        AxiomReport rep;
        for (std::size_t k = 0; k < raw.pairs.size(); ++k) {
            rep.merge(verify_automorphism(*raw.carrier, raw.pairs[k].first), "pair" + std::to_string(k) + ".alpha");
            rep.merge(verify_automorphism(*raw.carrier, raw.pairs[k].second), "pair" + std::to_string(k) + ".beta");
        }
        return {nullptr, rep};
    }
    if (kind == "module") return {nullptr, check_module(rd.module(f.doc, f.dir))};
    if (kind == "comodule") return {nullptr, check_comodule(rd.comodule(f.doc, f.dir))};
    if (kind == "bicomodule-algebra") return {nullptr, check_bicomodule_algebra(rd.bicomodule_algebra(f.doc, f.dir))};
    if (kind == "yd-module") {
        auto m = rd.yd_module(f.doc, f.dir);
        AxiomReport rep = check_yd(m);
        if (auto g = rd.grade(f.doc)) rep.merge(check_nyd(GradedYD(m, *g)), "nyd");
        return {nullptr, rep};
    }
    if (kind == "t-coalgebra") {
        auto [h, pairs] = rd.t_coalgebra_index(f.doc, f.dir);
        const auto t = build_mhd(h, pairs);
        json rebuilt = io::to_json(t, f.doc["carrier"]);
        json stored = f.doc;
        for (const char* k : {"report", "example", "notes"}) stored.erase(k);
        AxiomReport rep;
        rep.add(check_flag("matches-construction", io::to_text(rebuilt) == io::to_text(stored)));
        rep.merge(check_t_coalgebra(t), "t-coalgebra");
        rep.merge(check_crossing(t), "crossing");
        return {nullptr, rep};
    }
    if (kind == "linear-maps") throw InputError("linear-maps files carry no axioms to check");
    throw InputError("unknown kind '" + kind + "'");
}

struct BuildArgs {
    std::string alg, m, n, w, pair, pairs, bicomodule, by, theta, omega, side = "right", reading = "literal";
    bool inverse = false;
};

Outcome build(const std::string& what, const BuildArgs& a) {
    io::Reader rd;
    const auto need = [](const std::string& v, const char* flag) -> Loaded {
        if (v.empty()) throw InputError(std::string("missing ") + flag);
        return load(v);
    };
    if (what == "double") {
        const auto f = need(a.alg, "--alg");
        auto d = drinfeld_double(rd.hopf(f.doc, f.dir));
        return {io::to_json(*d.hopf), d.report};
    }
    if (what == "dual") {
        const auto f = need(a.alg, "--alg");
        auto h = dual_hopf(*rd.hopf(f.doc, f.dir));
        AxiomReport rep = check_hom_hopf(h);
        return {io::to_json(h), rep};
    }
    if (what == "diagonal") {
        const auto f = need(a.alg, "--alg");
        auto h = rd.hopf(f.doc, f.dir);
        std::optional<DiagonalCrossedProduct> p;
        if (!a.bicomodule.empty()) {
            const auto b = load(a.bicomodule);
            auto ba = rd.bicomodule_algebra(b.doc, b.dir);
            if (ba.hopf() != h) throw InputError("bicomodule algebra lives on a different Hopf algebra");
            p.emplace(h, std::move(ba));
        } else {
            const auto pp = single_pair(rd, need(a.pair, "--pair or --bicomodule"));
            if (pp.carrier() != h) throw InputError("pair lives on a different Hopf algebra");
            p.emplace(a_alpha_beta(h, pp.alpha, pp.beta));
        }
        AxiomReport rep = check_hom_algebra(*p->product());
        std::vector<std::string> names;
        for (const auto& f1 : p->dual()->basis_names())
            for (std::size_t j = 0; j < p->base().dim(); ++j) names.push_back(f1 + "#" + std::to_string(j));
        return {io::to_json(*p->product(), names), rep};
    }
    if (what == "mhd") {
        const auto pf = need(a.pairs, "--pairs");
        auto pairs = rd.aut_pairs(pf.doc, pf.dir);
        auto h = pairs.front().carrier();
        if (!a.alg.empty()) {
            const auto f = load(a.alg);
            if (rd.hopf(f.doc, f.dir) != h) throw InputError("--pairs live on a different Hopf algebra than --alg");
        }
        auto t = build_mhd(h, pairs);
        AxiomReport rep;
        rep.merge(check_t_coalgebra(t), "t-coalgebra");
        rep.merge(check_crossing(t), "crossing");
        return {io::to_json(t), rep};
    }
    if (what == "dual-module") {
        const auto f = need(a.m, "--m");
        auto m = rd.yd_module(f.doc, f.dir);
        if (a.side != "left" && a.side != "right") throw InputError("--side is left or right");
        auto d = yd_dual(m, a.side == "left" ? DualSide::left : DualSide::right);
        AxiomReport rep = prefixed(check_yd(d.dual), "dual");
        rep.merge(check_snake(m, d), "snake");
        rep.merge(check_duality_morphisms(m, d), "duality");
        return {io::to_json(d.dual), rep};
    }
    if (what == "yd-tensor") {
        const auto fm = need(a.m, "--m"), fn = need(a.n, "--n");
        auto t = yd_tensor(rd.yd_module(fm.doc, fm.dir), rd.yd_module(fn.doc, fn.dir));
        return {io::to_json(t), check_yd(t)};
    }
    if (what == "braiding") {
        const auto gm = graded(rd, need(a.m, "--m")), gn = graded(rd, need(a.n, "--n"));
        if (gm.module().carrier() != gn.module().carrier()) throw InputError("modules live on different Hopf algebras");
        AxiomReport rep = check_braiding(gm, gn);
        if (!a.w.empty()) rep.merge(check_hexagons(gm, gn, graded(rd, load(a.w))), "hexagons");
        return {io::linear_maps_json({{"braiding", braiding(gm, gn).flat()}}), rep};
    }
    if (what == "nyd-tensor") {
        const auto gm = graded(rd, need(a.m, "--m")), gn = graded(rd, need(a.n, "--n"));
        if (gm.module().carrier() != gn.module().carrier()) throw InputError("modules live on different Hopf algebras");
        auto t = nyd_tensor(gm, gn);
        return {io::to_json(t.module(), t.grade()), check_nyd(t)};
    }
    if (what == "functor-F") {
        const auto f = need(a.m, "--m");
        auto m = rd.yd_module(f.doc, f.dir);
        auto p = a_alpha_beta(m.carrier(), m.pair().alpha, m.pair().beta);
        auto datum = datum_from_yd(m);
        auto fm = functor_F(p, datum);
        return {io::to_json(fm), check_module(fm)};
    }
    if (what == "functor-G") {
        const auto f = need(a.n, "--n");
        auto nm = rd.module(f.doc, f.dir);
        const auto pf = need(a.pair, "--pair");
        auto pp = single_pair(rd, pf);
        auto p = a_alpha_beta(pp.carrier(), pp.alpha, pp.beta);
        const auto& want = *p.product();
        const auto& got = *nm.algebra();
        if (!(got.xi() == want.xi() && got.mult() == want.mult() && got.unit() == want.unit()))
            throw InputError("module is not over the crossed product of the given pair");
        auto g = functor_G(p, HomModule(p.product(), nm.xi(), nm.action()));
        YDModule y(pp, g.xi(), g.module().action(), g.comodule().coaction());
        return {io::to_json(y), check_yd(y)};
    }
    if (what == "twist") {
        const auto f = need(a.m, "--m");
        auto m = rd.yd_module(f.doc, f.dir);
        if (a.inverse) {
            auto p = single_pair(rd, need(a.pair, "--pair"));
            auto pi = involutive_pair(p, a.theta, a.omega);
            auto out = untwist_inverse(m, p, pi, reading_of(a.reading));
            return {io::to_json(out), check_yd(out)};
        }
        auto pi = involutive_pair(m.pair(), a.theta, a.omega);
        auto out = twist_to_untwisted(m, pi);
        return {io::to_json(out), check_yd(out)};
    }
    if (what == "shift") {
        const auto f = need(a.m, "--m"), bf = need(a.by, "--by");
        auto m = rd.yd_module(f.doc, f.dir);
        auto b = rd.automorphism(bf.doc, bf.dir);
        auto out = a.inverse ? shift_inverse(m, b) : shift_functor(m, b);
        return {io::to_json(out), check_yd(out)};
    }
    if (what == "anti-yd") {
        const auto f = need(a.m, "--m");
        auto m = rd.yd_module(f.doc, f.dir);
        const auto& H = *m.carrier();
        std::optional<ModularPair> mp;
        if (!a.theta.empty() || !a.omega.empty()) {
            auto pi = involutive_pair(m.pair(), a.theta, a.omega);
            mp = ModularPair{pi.theta, pi.omega};
        } else {
            for (const auto& th : algebra_maps(H))
                for (const auto& om : find_group_likes(H))
                    if (!mp && check_modular_pair(H, {th, om}).passed()) mp = ModularPair{th, om};
            if (!mp) throw InputError("no modular pair in involution found");
        }
        auto out = anti_yd_to_yd(m, *mp);
        return {io::to_json(out), check_yd(out)};
    }
    if (what == "cor49") {
        const auto f = need(a.alg, "--alg");
        auto h = rd.hopf(f.doc, f.dir);
        auto p = single_pair(rd, need(a.pair, "--pair"));
        if (p.carrier() != h) throw InputError("pair lives on a different Hopf algebra");
        auto pi = involutive_pair(p, a.theta, a.omega);
        auto iso = cor49_iso(p, pi, reading_of(a.reading));
        auto rep = check_cor49(drinfeld_double(h), a_alpha_beta(h, p.alpha, p.beta), iso);
        return {io::linear_maps_json({{"to_twisted", iso.to_twisted}, {"to_double", iso.to_double}}), rep};
    }
    throw InputError("unknown build target '" + what + "'");
}

Outcome examples(const std::string& name, const std::string& c, const std::string& n, const std::string& t) {
    ExampleSpec spec{name, {}, ""};
    if (!c.empty()) spec.parameters["c"] = parse_scalar(c);
    if (!n.empty()) spec.parameters["n"] = parse_scalar(n);
    if (!t.empty()) spec.parameters["t"] = parse_scalar(t);
    auto b = build_example(spec);
    json doc = io::to_json(b.algebra);
    doc["example"] = io::example_json(b.spec);
    doc["report"] = io::report_json(b.report);
    return {doc, b.report};
}

int finish(const Outcome& out, const std::string& command, const std::string& output, const std::string& format) {
    const bool to_stdout = !out.structure.is_null() && (output.empty() || output == "-");
    if (!out.structure.is_null()) {
        if (to_stdout)
            std::cout << io::to_text(out.structure);
        else
            io::write_file(output, out.structure);
    }
    std::ostream& rs = to_stdout ? std::cerr : std::cout;
    if (format == "json") {
        json doc = io::report_json(out.report);
        doc["command"] = command;
        rs << io::to_text(doc);
    } else {
        rs << format_report(out.report) << "RESULT " << (out.report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return out.report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build and verify finite-dimensional monoidal Hom-Hopf structures"};
    app.require_subcommand(1);
    std::string format = "text", output;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string kind, file;
    auto* check = app.add_subcommand("check", "Run the checker matching a structure file");
    check->add_option("kind", kind, "Structure kind")->required();
    check->add_option("file", file, "Structure file")->required();

    std::string what;
    BuildArgs ba;
    auto* bld = app.add_subcommand("build", "Construct a structure and check it");
    bld->add_option("what", what, "double, diagonal, mhd, dual, dual-module, yd-tensor, braiding, functor-F, "
                                  "functor-G, twist, shift, anti-yd, nyd-tensor or cor49")
        ->required();
    bld->add_option("--alg", ba.alg, "Hopf algebra file");
    bld->add_option("--m", ba.m, "First module file");
    bld->add_option("--n", ba.n, "Second module file");
    bld->add_option("--w", ba.w, "Third module file (braiding hexagons)");
    bld->add_option("--pair", ba.pair, "File with one automorphism pair");
    bld->add_option("--pairs", ba.pairs, "File with the index set of pairs");
    bld->add_option("--bicomodule", ba.bicomodule, "Bicomodule algebra file");
    bld->add_option("--by", ba.by, "Automorphism file for shift");
    bld->add_option("--theta", ba.theta, "Algebra map as comma-separated dual coordinates");
    bld->add_option("--omega", ba.omega, "Group-like element as comma-separated coordinates");
    bld->add_option("--side", ba.side, "Dual side: right or left");
    bld->add_option("--reading", ba.reading, "literal or xi-corrected");
    bld->add_flag("--inverse", ba.inverse, "Apply the inverse functor (twist, shift)");
    bld->add_option("-o,--output", output, "Output file; stdout when omitted");

    std::string name, c, n, t;
    auto* ex = app.add_subcommand("examples", "Write a registry example");
    ex->add_option("name", name, "h4, sweedler, cyclic-twist or cyclic-literal")->required();
    ex->add_option("--c", c, "H4 parameter");
    ex->add_option("--n", n, "Cyclic order");
    ex->add_option("--t", t, "Cyclic twist exponent");
    ex->add_option("-o,--output", output, "Output file; stdout when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return finish(check_file(kind, file), "check " + kind, "", format);
        if (*bld) return finish(build(what, ba), "build " + what, output, format);
        return finish(examples(name, c, n, t), "examples " + name, output, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// gorlink: construct and certify homogeneous Gorenstein ideals via
// two-step liaison, with the adapted unprojection resolution.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gorlink/corpus.hpp"
#include "gorlink/parser.hpp"

using namespace gorlink;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Field parse_field_flag(const std::string& s) {
    if (s == "q" || s == "rational") return Field::rational();
    if (s.rfind("gf:", 0) == 0) return Field::prime(std::stoll(s.substr(3)));
    throw CLI::ValidationError("--field", "expected 'q' or 'gf:<p>'");
}

struct DocArgs {
    std::string input;
    InputDocument doc;
    void load() { doc = parse_input(slurp(input)); }
};

const Ideal& need_ideal(const InputDocument& doc, const std::string& name) {
    const Ideal* i = doc.find_ideal(name);
    if (!i) throw std::runtime_error("no ideal named '" + name + "' in the input");
    return *i;
}

Polynomial need_poly(const InputDocument& doc, const std::string& name) {
    if (const Polynomial* p = doc.find_poly(name)) return *p;
    // allow inline expressions as well as named polynomials
    return parse_polynomial(doc.ring, name);
}

void print_betti(const ChainComplex& minimal) {
    BettiTable t = betti(minimal);
    std::cout << minimal.betti_line() << "\n\n" << t.grid();
    std::cout << "regularity (ideal convention): " << regularity(t) << "\n";
}

void emit_report(const RunReport& report, const std::string& json_path, bool timings) {
    std::cout << report.text(timings);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.canonical_json() << "\n";
    }
}

RunReport biliaison_report(const std::string& command, const BiliaisonResult& r) {
    RunReport rep;
    rep.command = command;
    rep.field = r.a.ring()->field().describe();
    rep.seed = r.seed;
    auto& cs = rep.checks;
    cs.push_back({"first_link_valid", r.first_link.valid(), ""});
    cs.push_back({"second_link_valid", r.second_link.valid(), ""});
    cs.push_back({"gorenstein", r.gorenstein, ""});
    cs.push_back({"formula_route_match", r.formula_route_match, r.diagnostics});
    rep.outputs.emplace_back("d", std::to_string(r.omega.d));
    rep.outputs.emplace_back("e", std::to_string(r.omega.e));
    rep.outputs.emplace_back("omega", r.omega.omega.str());
    rep.outputs.emplace_back("f", r.f.str());
    rep.outputs.emplace_back("z", r.z.str());
    rep.outputs.emplace_back("middle", r.middle.str());
    rep.outputs.emplace_back("ideal", r.ideal.str());
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gorlink: Gorenstein ideals by two-step liaison"};
    app.require_subcommand(1);

    DocArgs docargs;
    std::string ideal_name, by_name, a_name, b_name, y_name, f_name;
    std::string json_path, field_flag = "gf:32003";
    std::uint64_t seed = 1;
    int trials = 400, jobs = 1;
    bool timings = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", docargs.input, "input document")->required();
    };

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_input(gb_cmd);
    gb_cmd->add_option("--ideal", ideal_name)->required();

    auto* res_cmd = app.add_subcommand("res", "minimal free resolution of R/I");
    add_input(res_cmd);
    res_cmd->add_option("--ideal", ideal_name)->required();

    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table");
    add_input(betti_cmd);
    betti_cmd->add_option("--ideal", ideal_name)->required();

    auto* hilb_cmd = app.add_subcommand("hilbert", "Hilbert series and function");
    add_input(hilb_cmd);
    hilb_cmd->add_option("--ideal", ideal_name)->required();

    auto* link_cmd = app.add_subcommand("link", "direct link J = c : I with certificate");
    add_input(link_cmd);
    link_cmd->add_option("--ideal", ideal_name, "the ideal I")->required();
    link_cmd->add_option("--by", by_name, "the linking ideal c")->required();

    auto* bil_cmd = app.add_subcommand("biliaison", "two-link construction of I");
    add_input(bil_cmd);
    bil_cmd->add_option("--a", a_name)->required();
    bil_cmd->add_option("--b", b_name)->required();
    bil_cmd->add_option("--y", y_name)->required();
    bil_cmd->add_option("--f", f_name, "fixed f (name or expression)");
    bil_cmd->add_option("--seed", seed);
    bil_cmd->add_option("--trials", trials);
    bil_cmd->add_option("--json", json_path);

    auto* km_cmd = app.add_subcommand("km-res", "assembled resolution of the construction");
    add_input(km_cmd);
    km_cmd->add_option("--a", a_name)->required();
    km_cmd->add_option("--b", b_name)->required();
    km_cmd->add_option("--y", y_name)->required();
    km_cmd->add_option("--f", f_name);
    km_cmd->add_option("--seed", seed);
    km_cmd->add_option("--trials", trials);
    km_cmd->add_option("--json", json_path);

    auto* gen_cmd = app.add_subcommand("gen", "run an example family");
    std::string family;
    std::vector<int> mvec, nvec;
    std::vector<std::int64_t> units;
    int nparam = 3, degree = 3;
    std::int64_t lambda = 1;
    gen_cmd->add_option("family", family, "ci | sally | minors | tom | apolar")->required();
    gen_cmd->add_option("--field", field_flag);
    gen_cmd->add_option("--m", mvec, "ci: exponents of b");
    gen_cmd->add_option("--n-exps", nvec, "ci: exponents of a");
    gen_cmd->add_option("--n", nparam, "sally/minors: size parameter");
    gen_cmd->add_option("--units", units, "sally: socle units");
    gen_cmd->add_option("--lambda", lambda, "tom: the unit");
    gen_cmd->add_option("--degree", degree, "apolar: degree of the random form");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("--json", json_path);

    auto* verify_cmd = app.add_subcommand("verify-corpus", "run every corpus construction");
    verify_cmd->add_option("--field", field_flag, "q or gf:<p>");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--jobs", jobs);
    verify_cmd->add_option("--json", json_path);
    verify_cmd->add_flag("--timings", timings);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gb_cmd->parsed()) {
            docargs.load();
            const Ideal& i = need_ideal(docargs.doc, ideal_name);
            for (const auto& g : i.reduced_gb()) std::cout << g.str() << "\n";
            return kExitOk;
        }
        if (res_cmd->parsed()) {
            docargs.load();
            ChainComplex c = resolve(need_ideal(docargs.doc, ideal_name));
            std::cout << c.betti_line() << "\n";
            for (int i = 1; i <= c.length(); ++i)
                std::cout << "d_" << i << " =\n" << c.diff(i).str() << "\n";
            return kExitOk;
        }
        if (betti_cmd->parsed()) {
            docargs.load();
            print_betti(resolve(need_ideal(docargs.doc, ideal_name)));
            return kExitOk;
        }
        if (hilb_cmd->parsed()) {
            docargs.load();
            const Ideal& i = need_ideal(docargs.doc, ideal_name);
            const HilbertData& h = i.hilbert();
            std::cout << "numerator coefficients:";
            for (auto c : h.numerator()) std::cout << " " << c;
            std::cout << "\nvalues:";
            for (int j = 0; j <= 12; ++j) std::cout << " " << h.value(j);
            std::cout << "\n";
            if (h.artinian()) {
                std::cout << "h-vector:";
                for (auto v : h.h_vector()) std::cout << " " << v;
                std::cout << "\n";
            }
            std::cout << "grade: " << i.grade() << "\n";
            return kExitOk;
        }
        if (link_cmd->parsed()) {
            docargs.load();
            DirectLinkResult r =
                direct_link(need_ideal(docargs.doc, by_name), need_ideal(docargs.doc, ideal_name));
            std::cout << "residual: " << r.residual.str() << "\n";
            const LinkCertificate& c = r.certificate;
            std::cout << "certificate: containment=" << c.c_inside_intersection
                      << " colon_forward=" << c.colon_c_input_is_residual
                      << " colon_back=" << c.colon_c_residual_is_input
                      << " grades=" << c.grades_equal << "\n";
            return c.valid() ? kExitOk : kExitVerification;
        }
        if (bil_cmd->parsed() || km_cmd->parsed()) {
            docargs.load();
            BiliaisonOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            if (!f_name.empty()) opts.f = need_poly(docargs.doc, f_name);
            BiliaisonResult r = two_link_construct(need_ideal(docargs.doc, a_name),
                                                   need_ideal(docargs.doc, b_name),
                                                   need_poly(docargs.doc, y_name), opts);
            RunReport rep = biliaison_report(bil_cmd->parsed() ? "biliaison" : "km-res", r);
            if (km_cmd->parsed()) {
                KMData k = km_build(r);
                ChainComplex resI = resolve(r.ideal);
                BettiTable bt = betti(resI);
                VerifyResult vr = verify_resolution(k.assembled, r.ideal);
                rep.checks.push_back({"km_resolves_ideal", vr.ok, vr.witness});
                rep.checks.push_back({"km_identities", km_identities_hold(k), ""});
                bool minimal = minimality_check(k);
                rep.checks.push_back(
                    {"km_minimal", true,
                     minimal ? "resolution is minimal" : "f is a unit or alpha is not minimal"});
                rep.outputs.emplace_back("assembled", k.assembled.betti_line());
                rep.outputs.emplace_back("betti", bt.grid());
                for (int i = 1; i <= k.assembled.length(); ++i)
                    rep.outputs.emplace_back("l_" + std::to_string(i), k.assembled.diff(i).str());
            }
            emit_report(rep, json_path, timings);
            return rep.all_pass() ? kExitOk : kExitVerification;
        }
        if (gen_cmd->parsed()) {
            Field field = parse_field_flag(field_flag);
            BiliaisonOptions opts;
            opts.seed = seed;
            RunReport rep;
            rep.command = "gen " + family;
            rep.field = field.describe();
            rep.seed = seed;
            if (family == "ci") {
                CIFamilyResult r = gen_ci_family(field, mvec, nvec, opts);
                rep.checks.push_back({"expected_form", r.matches_expected, ""});
                rep.outputs.emplace_back("f", r.run.f.str());
                rep.outputs.emplace_back("ideal", r.run.ideal.str());
            } else if (family == "sally") {
                if (units.empty()) units.assign(nparam - 1, 1);
                SallyResult r = gen_sally(field, nparam, units);
                rep.checks.push_back({"expected_ideal", r.matches_expected, ""});
                rep.checks.push_back({"middle_residual", r.middle_matches, ""});
                rep.outputs.emplace_back("ideal", r.run.ideal.str());
            } else if (family == "minors") {
                GenericMinorsResult r = gen_generic_minors(field, nparam, opts);
                if (r.linkage_ran) {
                    rep.checks.push_back({"reproduces_target", r.matches_target, ""});
                    rep.checks.push_back({"sylvester", r.sylvester_ok, ""});
                    rep.outputs.emplace_back("ideal", r.run.ideal.str());
                } else {
                    rep.outputs.emplace_back("ideal", r.target.str());
                }
            } else if (family == "tom") {
                ExtrasymmetricResult r = gen_extrasymmetric(field, lambda, opts);
                rep.checks.push_back({"printed_ideal", r.matches_expected, ""});
                rep.checks.push_back({"pfaffian_form", r.pfaffian_match, ""});
                rep.outputs.emplace_back("ideal", r.run.ideal.str());
            } else if (family == "apolar") {
                RingPtr ring = PolyRing::make(field, {"x1", "x2", "x3", "x4", "x5"});
                Polynomial form = random_dense_form(ring, degree, seed);
                Ideal ann = apolar_annihilator(form, degree + 1);
                rep.outputs.emplace_back("form", form.str());
                rep.outputs.emplace_back("annihilator", ann.str());
                if (ann.hilbert().artinian()) {
                    std::string hv;
                    for (auto v : ann.hilbert().h_vector()) hv += (hv.empty() ? "" : ", ") + std::to_string(v);
                    rep.outputs.emplace_back("h_vector", "(" + hv + ")");
                }
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return kExitUsage;
            }
            emit_report(rep, json_path, timings);
            return rep.all_pass() ? kExitOk : kExitVerification;
        }
        if (verify_cmd->parsed()) {
            RunReport rep = run_corpus_verification(parse_field_flag(field_flag), seed, jobs);
            emit_report(rep, json_path, timings);
            return rep.all_pass() ? kExitOk : kExitVerification;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

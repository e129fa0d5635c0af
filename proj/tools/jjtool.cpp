// Command-line front end: every subcommand reads documents, calls one library
// operation and prints a JSON record. Exit status 0 = pass, 1 = fail, 2 = usage.

#include "jjc/classify5.hpp"
#include "jjc/document.hpp"
#include "jjc/extensions.hpp"
#include "jjc/induced.hpp"
#include "jjc/operators.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace jjc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::string property;
    std::string file;
    std::string file2;
    std::string data;
    std::string map;
    std::string t = "0";
    int n = 0;
    std::string phis;
    std::string as;
    bool strict = false;
};

json vec_json(const Vec& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json mat_json(const Mat& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
    return rows;
}

json report_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks()) {
        json item = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed && !c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
    }
    return {{"passed", r.passed()}, {"checks", checks}};
}

json fingerprint_json(const InvariantFingerprint& f)
{
    return {{"dim", f.dim}, {"derived_dim", f.derived_dim}, {"center_dim", f.center_dim}, {"power_dims", f.power_dims}};
}

int emit(const json& j, int code)
{
    std::cout << j.dump(2) << "\n";
    return code;
}

int emit_report(const Report& r) { return emit(report_json(r), r.passed() ? kPass : kFail); }

int emit_doc(const Document& d)
{
    std::cout << emit_document(d);
    return kPass;
}

CosymplecticStructure load_structure(const Document& d)
{
    return CosymplecticStructure::make(to_algebra(d), document_alpha(d), document_omega(d));
}

std::vector<Rational> parse_list(const std::string& text, const std::string& what)
{
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw DocumentError(what, e.what());
        }
    }
    return out;
}

Rational parse_t(const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw DocumentError("--t", e.what());
    }
}

Document extension_doc(const ExtensionResult& r)
{
    Document d = (r.alpha && r.omega) ? from_structure(r.algebra, *r.alpha, *r.omega)
                 : r.omega           ? from_symplectic(r.algebra, *r.omega)
                                     : from_algebra(r.algebra);
    if (r.d_index) d.claims["d_index"] = std::to_string(r.d_index);
    if (r.e_index) d.claims["e_index"] = std::to_string(r.e_index);
    return d;
}

int cmd_check(const Options& o)
{
    const Document d = read_document_file(o.file);
    const Algebra a = to_algebra(d);
    if (o.property == "jj") {
        Report r;
        r.add("commutative", is_commutative(a), "x.y != y.x for some basis pair");
        r.add("jacobi", is_jacobi_jordan(a), "cyclic sum x.(y.z) does not vanish");
        return emit_report(r);
    }
    if (o.property == "symplectic") return emit_report(symplectic_report(a, document_omega(d)));
    return emit_report(cosymplectic_report(a, document_alpha(d), document_omega(d)));
}

int cmd_reeb(const Options& o)
{
    const CosymplecticStructure s = load_structure(read_document_file(o.file));
    return emit({{"reeb", vec_json(s.reeb())}}, kPass);
}

int cmd_product(const Options& o)
{
    const Document d = read_document_file(o.file);
    if (o.property == "odot") return emit_doc(from_algebra(odot_product(to_algebra(d), document_omega(d))));
    return emit_doc(from_algebra(star_product(load_structure(d))));
}

int cmd_operators(const Options& o, bool anti)
{
    const Algebra a = to_algebra(read_document_file(o.file));
    const std::vector<LinearMap> basis = anti ? ader_space(a) : der_space(a);
    json maps = json::array();
    for (const auto& m : basis) maps.push_back(mat_json(m));
    return emit({{"dimension", basis.size()}, {"basis", maps}}, kPass);
}

int cmd_extend(const Options& o)
{
    const Document base = read_document_file(o.file);
    const std::size_t n = static_cast<std::size_t>(base.dim);
    if (o.property == "suspend") {
        Suspension s = suspension(load_structure(base));
        return emit_doc(from_symplectic(s.algebra, s.omega));
    }
    const Document data = read_document_file(o.data);
    const Algebra a = to_algebra(base);
    if (o.property == "central") {
        BilinearForm theta = BilinearForm::from_matrix(document_map(data, "theta", n, n), Symmetry::symmetric);
        return emit_doc(from_algebra(central_extension(a, theta)));
    }
    if (o.property == "jjdouble") {
        BilinearForm theta = BilinearForm::from_matrix(document_map(data, "theta", n, n), Symmetry::symmetric);
        const Mat& dm = document_map(data, "d", n + 1, n + 1);
        return emit_doc(from_algebra(jj_double_extension(a, theta, dm, document_vector(data, "a", n))));
    }
    const Mat& phi = document_map(data, "phi", n, n);
    const Vec& av = document_vector(data, "a", n);
    if (o.property == "symp") return emit_doc(extension_doc(symplectic_double_extension(a, document_omega(base), phi, av)));
    const CosymplecticStructure s = load_structure(base);
    const Rational t = parse_t(o.t);
    if (o.property == "cosymp1") return emit_doc(extension_doc(cosymplectic_double_extension_case1(s, phi, av, t)));
    return emit_doc(extension_doc(cosymplectic_double_extension_case2(s, phi, av, t)));
}

int cmd_correspond(const Options& o)
{
    const Document d = read_document_file(o.file);
    if (o.property == "up") {
        const Mat& dm = document_map(d, "d", d.dim, d.dim);
        CosymplecticStructure s = cosymplectic_from_symplectic(to_algebra(d), document_omega(d), dm);
        return emit_doc(from_structure(s.algebra(), s.alpha(), s.omega()));
    }
    SymplecticData sd = symplectic_from_cosymplectic(load_structure(d));
    Document out = from_symplectic(sd.h, sd.omega_h);
    out.maps["d"] = sd.d;
    out.maps["embedding"] = sd.embedding;
    return emit_doc(out);
}

int cmd_family(const Options& o)
{
    const std::vector<Rational> phis = parse_list(o.phis, "--phi");
    const std::vector<Rational> as = parse_list(o.as, "--a");
    if (o.n < 1 || phis.size() != static_cast<std::size_t>(2 * o.n) || as.size() != phis.size())
        throw DocumentError("--n", "need n >= 1 and 2n entries in --phi and --a");
    return emit_doc(extension_doc(odd_family(o.n, phis, as)));
}

int cmd_classify5()
{
    const Census c = full_census();
    json grid = json::array();
    for (const auto& g : c.grid)
        grid.push_back({{"a21", to_string(g.a21)}, {"a31", to_string(g.a31)}, {"name", g.name}, {"verified", g.verified}});
    json branches = json::array();
    for (const auto& b : c.trivial_base.branches)
        branches.push_back({{"name", b.name}, {"outcome", b.outcome}, {"solutions", b.solution_basis.size()},
                            {"report", report_json(b.report)}});
    json catalog = json::array();
    for (const auto& e : c.catalog)
        catalog.push_back({{"name", e.name}, {"fingerprint", fingerprint_json(e.fingerprint)},
                           {"reeb", vec_json(e.structure.reeb())}});
    const Investigation inv = investigate_J50_J52();
    json out = {{"grid", grid},
                {"trivial_base", branches},
                {"trivial_base_printed_claims", report_json(c.trivial_base.printed_claims)},
                {"catalog", catalog},
                {"census", report_json(c.report)},
                {"j50_j52", report_json(inv.summary)}};
    return emit(out, c.report.passed() && inv.summary.passed() ? kPass : kFail);
}

int cmd_iso(const Options& o)
{
    const Document d1 = read_document_file(o.file);
    const Document d2 = read_document_file(o.file2);
    const Document md = read_document_file(o.map);
    const Mat& phi = document_map(md, "phi", d2.dim, d1.dim);
    if (o.strict) return emit_report(cosymplectic_isomorphism_report(load_structure(d1), load_structure(d2), phi));
    Report r;
    r.add("algebra_morphism", is_algebra_morphism({to_algebra(d1), to_algebra(d2), phi}), "phi(x.y) != phi(x).phi(y)");
    r.add("invertible", phi.is_square() && sgn(determinant(phi)) != 0, "phi is not invertible");
    return emit_report(r);
}

int cmd_invariants(const Options& o)
{
    return emit(fingerprint_json(fingerprint(to_algebra(read_document_file(o.file)))), kPass);
}

json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", kind}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Jacobi-Jordan algebras with (co)symplectic structures"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "verify jj / symplectic / cosymplectic");
    check->add_option("property", o.property)->required()->check(CLI::IsMember({"jj", "symplectic", "cosymplectic"}));
    check->add_option("file", o.file)->required();

    auto* reeb = app.add_subcommand("reeb", "print the Reeb vector");
    reeb->add_option("file", o.file)->required();

    auto* product = app.add_subcommand("product", "induced product table");
    product->add_option("kind", o.property)->required()->check(CLI::IsMember({"odot", "star"}));
    product->add_option("file", o.file)->required();

    auto* ader = app.add_subcommand("ader", "anti-derivation space");
    ader->add_option("file", o.file)->required();
    auto* der = app.add_subcommand("der", "derivation space");
    der->add_option("file", o.file)->required();

    auto* extend = app.add_subcommand("extend", "extension constructions");
    extend->add_option("kind", o.property)
        ->required()
        ->check(CLI::IsMember({"central", "jjdouble", "symp", "cosymp1", "cosymp2", "suspend"}));
    extend->add_option("file", o.file)->required();
    extend->add_option("--data", o.data, "document with maps / vectors of the datum");
    extend->add_option("--t", o.t, "alpha~(d) for the cosymplectic cases");

    auto* correspond = app.add_subcommand("correspond", "symplectic <-> cosymplectic correspondence");
    correspond->add_option("direction", o.property)->required()->check(CLI::IsMember({"up", "down"}));
    correspond->add_option("file", o.file)->required();

    auto* family = app.add_subcommand("family", "odd-dimensional family");
    family->add_option("--n", o.n)->required();
    family->add_option("--phi", o.phis, "comma-separated phi_1..phi_2n")->required();
    family->add_option("--a", o.as, "comma-separated a_1..a_2n")->required();

    auto* classify = app.add_subcommand("classify5", "dimension-5 census");

    auto* iso = app.add_subcommand("iso", "verify an isomorphism");
    iso->add_option("file1", o.file)->required();
    iso->add_option("file2", o.file2)->required();
    iso->add_option("--map", o.map, "document with maps.phi")->required();
    iso->add_flag("--strict", o.strict, "cosymplectic isomorphism instead of algebra isomorphism");

    auto* invariants = app.add_subcommand("invariants", "isomorphism invariants");
    invariants->add_option("file", o.file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit(error_json("usage", e.what()), kUsage);
    }

    try {
        if (check->parsed()) return cmd_check(o);
        if (reeb->parsed()) return cmd_reeb(o);
        if (product->parsed()) return cmd_product(o);
        if (ader->parsed()) return cmd_operators(o, true);
        if (der->parsed()) return cmd_operators(o, false);
        if (extend->parsed()) {
            if (o.property != "suspend" && o.data.empty()) return emit(error_json("usage", "--data is required"), kUsage);
            return cmd_extend(o);
        }
        if (correspond->parsed()) return cmd_correspond(o);
        if (family->parsed()) return cmd_family(o);
        if (classify->parsed()) return cmd_classify5();
        if (iso->parsed()) return cmd_iso(o);
        if (invariants->parsed()) return cmd_invariants(o);
    } catch (const ConditionError& e) {
        json j = error_json("condition", e.report().summary());
        j["report"] = report_json(e.report());
        return emit(j, kFail);
    } catch (const DocumentError& e) {
        return emit(error_json("document", e.what()), kUsage);
    } catch (const std::invalid_argument& e) {
        return emit(error_json("input", e.what()), kUsage);
    } catch (const InternalError& e) {
        return emit(error_json("internal", e.what()), kFail);
    }
    return kUsage;
}

#include "jjc/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace jjc {

using nlohmann::json;

namespace {

Rational rational_at(const json& v, const std::string& where)
{
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw DocumentError(where, "expected a rational string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw DocumentError(where, e.what());
    }
}

int index_at(const json& obj, const char* key, int dim, const std::string& where)
{
    if (!obj.contains(key)) throw DocumentError(where, std::string("missing key '") + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw DocumentError(where + "." + key, "expected an integer index");
    const long i = v.get<long>();
    if (i < 1 || i > dim) throw DocumentError(where + "." + key, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    return static_cast<int>(i);
}

Vec vector_at(const json& v, const std::string& where)
{
    if (!v.is_array()) throw DocumentError(where, "expected a list");
    Vec out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json rational_json(const Rational& r) { return to_string(r); }

json vector_json(const Vec& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_json(x));
    return out;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    for (const auto& [key, _] : obj.items())
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
            throw DocumentError(where, "unknown key '" + key + "'");
}

}  // namespace

bool operator==(const Document& a, const Document& b)
{
    auto pt = [](const ProductTerm& t) { return std::tie(t.i, t.j, t.k, t.c); };
    auto ft = [](const FormTerm& t) { return std::tie(t.i, t.j, t.c); };
    if (a.dim != b.dim || a.commutative != b.commutative || a.products.size() != b.products.size()) return false;
    for (std::size_t n = 0; n < a.products.size(); ++n)
        if (pt(a.products[n]) != pt(b.products[n])) return false;
    if (a.omega.has_value() != b.omega.has_value()) return false;
    if (a.omega) {
        if (a.omega->size() != b.omega->size()) return false;
        for (std::size_t n = 0; n < a.omega->size(); ++n)
            if (ft((*a.omega)[n]) != ft((*b.omega)[n])) return false;
    }
    return a.alpha == b.alpha && a.maps == b.maps && a.vectors == b.vectors && a.claims == b.claims;
}

Document parse_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("byte " + std::to_string(e.byte), "malformed document text");
    }
    if (!root.is_object()) throw DocumentError("document", "expected an object");
    check_keys(root, {"dim", "commutative", "products", "alpha", "omega", "maps", "vectors", "claims"}, "document");

    Document doc;
    if (!root.contains("dim") || !root["dim"].is_number_integer()) throw DocumentError("dim", "expected an integer");
    if (root["dim"].get<long>() < 0) throw DocumentError("dim", "negative dimension");
    doc.dim = static_cast<int>(root["dim"].get<long>());
    if (root.contains("commutative")) {
        if (!root["commutative"].is_boolean()) throw DocumentError("commutative", "expected true or false");
        doc.commutative = root["commutative"].get<bool>();
    }

    if (root.contains("products")) {
        const json& ps = root["products"];
        if (!ps.is_array()) throw DocumentError("products", "expected a list");
        std::set<std::tuple<int, int, int>> seen;
        for (std::size_t n = 0; n < ps.size(); ++n) {
            const std::string where = "products[" + std::to_string(n) + "]";
            if (!ps[n].is_object()) throw DocumentError(where, "expected an object");
            check_keys(ps[n], {"i", "j", "k", "c"}, where);
            const int i = index_at(ps[n], "i", doc.dim, where);
            const int j = index_at(ps[n], "j", doc.dim, where);
            const int k = index_at(ps[n], "k", doc.dim, where);
            if (!ps[n].contains("c")) throw DocumentError(where, "missing key 'c'");
            Rational c = rational_at(ps[n]["c"], where + ".c");
            if (doc.commutative && i > j) throw DocumentError(where, "commutative documents store only i <= j");
            if (!seen.insert({i, j, k}).second) throw DocumentError(where, "duplicate product entry");
            if (sgn(c) != 0) doc.products.push_back({i, j, k, c});
        }
        std::sort(doc.products.begin(), doc.products.end(), [](const ProductTerm& a, const ProductTerm& b) {
            return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
        });
    }

    if (root.contains("alpha")) {
        Vec a = vector_at(root["alpha"], "alpha");
        if (static_cast<int>(a.size()) != doc.dim) throw DocumentError("alpha", "expected " + std::to_string(doc.dim) + " entries");
        doc.alpha = a;
    }

    if (root.contains("omega")) {
        const json& ws = root["omega"];
        if (!ws.is_array()) throw DocumentError("omega", "expected a list");
        std::vector<FormTerm> terms;
        std::set<std::pair<int, int>> seen;
        for (std::size_t n = 0; n < ws.size(); ++n) {
            const std::string where = "omega[" + std::to_string(n) + "]";
            if (!ws[n].is_object()) throw DocumentError(where, "expected an object");
            check_keys(ws[n], {"i", "j", "c"}, where);
            const int i = index_at(ws[n], "i", doc.dim, where);
            const int j = index_at(ws[n], "j", doc.dim, where);
            if (i >= j) throw DocumentError(where, "omega entries need i < j");
            if (!ws[n].contains("c")) throw DocumentError(where, "missing key 'c'");
            Rational c = rational_at(ws[n]["c"], where + ".c");
            if (!seen.insert({i, j}).second) throw DocumentError(where, "duplicate omega entry");
            if (sgn(c) != 0) terms.push_back({i, j, c});
        }
        std::sort(terms.begin(), terms.end(),
                  [](const FormTerm& a, const FormTerm& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
        doc.omega = terms;
    }

    if (root.contains("maps")) {
        if (!root["maps"].is_object()) throw DocumentError("maps", "expected an object");
        for (const auto& [name, rows] : root["maps"].items()) {
            const std::string where = "maps." + name;
            if (!rows.is_array() || rows.empty()) throw DocumentError(where, "expected a nonempty list of rows");
            std::vector<Vec> rv;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                rv.push_back(vector_at(rows[r], where + "[" + std::to_string(r) + "]"));
                if (rv.back().size() != rv.front().size()) throw DocumentError(where, "rows differ in length");
            }
            doc.maps.emplace(name, Mat::from_rows(rv.front().size(), rv));
        }
    }

    if (root.contains("vectors")) {
        if (!root["vectors"].is_object()) throw DocumentError("vectors", "expected an object");
        for (const auto& [name, v] : root["vectors"].items()) doc.vectors.emplace(name, vector_at(v, "vectors." + name));
    }

    if (root.contains("claims")) {
        if (!root["claims"].is_object()) throw DocumentError("claims", "expected an object");
        for (const auto& [name, v] : root["claims"].items()) {
            if (!v.is_string()) throw DocumentError("claims." + name, "expected a string");
            doc.claims.emplace(name, v.get<std::string>());
        }
    }
    return doc;
}

std::string emit_document(const Document& doc)
{
    json root;
    root["dim"] = doc.dim;
    root["commutative"] = doc.commutative;
    json ps = json::array();
    for (const auto& t : doc.products) ps.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", rational_json(t.c)}});
    root["products"] = ps;
    if (doc.alpha) root["alpha"] = vector_json(*doc.alpha);
    if (doc.omega) {
        json ws = json::array();
        for (const auto& t : *doc.omega) ws.push_back({{"i", t.i}, {"j", t.j}, {"c", rational_json(t.c)}});
        root["omega"] = ws;
    }
    if (!doc.maps.empty()) {
        json ms = json::object();
        for (const auto& [name, m] : doc.maps) {
            json rows = json::array();
            for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
            ms[name] = rows;
        }
        root["maps"] = ms;
    }
    if (!doc.vectors.empty()) {
        json vs = json::object();
        for (const auto& [name, v] : doc.vectors) vs[name] = vector_json(v);
        root["vectors"] = vs;
    }
    if (!doc.claims.empty()) root["claims"] = doc.claims;
    return root.dump(2) + "\n";
}

Document read_document_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DocumentError(path, "cannot open file");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_document(text.str());
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

Algebra to_algebra(const Document& doc)
{
    try {
        return Algebra::from_terms(doc.dim, doc.products, doc.commutative);
    } catch (const std::invalid_argument& e) {
        throw DocumentError("products", e.what());
    }
}

LinearForm document_alpha(const Document& doc)
{
    if (!doc.alpha) throw DocumentError("alpha", "document has no alpha");
    return {*doc.alpha};
}

BilinearForm document_omega(const Document& doc)
{
    if (!doc.omega) throw DocumentError("omega", "document has no omega");
    return BilinearForm::skew(doc.dim, *doc.omega);
}

const Mat& document_map(const Document& doc, const std::string& name, std::size_t rows, std::size_t cols)
{
    auto it = doc.maps.find(name);
    if (it == doc.maps.end()) throw DocumentError("maps." + name, "missing");
    if (it->second.rows() != rows || it->second.cols() != cols)
        throw DocumentError("maps." + name, "expected shape " + std::to_string(rows) + "x" + std::to_string(cols));
    return it->second;
}

const Vec& document_vector(const Document& doc, const std::string& name, std::size_t size)
{
    auto it = doc.vectors.find(name);
    if (it == doc.vectors.end()) throw DocumentError("vectors." + name, "missing");
    if (it->second.size() != size) throw DocumentError("vectors." + name, "expected " + std::to_string(size) + " entries");
    return it->second;
}

Document from_algebra(const Algebra& a)
{
    Document doc;
    doc.dim = a.dim();
    doc.commutative = is_commutative(a);
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = doc.commutative ? i : 1; j <= a.dim(); ++j)
            for (int k = 1; k <= a.dim(); ++k)
                if (sgn(a.coeff(i, j, k)) != 0) doc.products.push_back({i, j, k, a.coeff(i, j, k)});
    return doc;
}

Document from_symplectic(const Algebra& a, const BilinearForm& omega)
{
    if (omega.symmetry != Symmetry::skew) throw std::invalid_argument("from_symplectic: omega must be skew");
    Document doc = from_algebra(a);
    std::vector<FormTerm> terms;
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = i + 1; j <= a.dim(); ++j)
            if (sgn(omega.matrix(i - 1, j - 1)) != 0) terms.push_back({i, j, omega.matrix(i - 1, j - 1)});
    doc.omega = terms;
    return doc;
}

Document from_structure(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega)
{
    Document doc = from_symplectic(a, omega);
    doc.alpha = alpha.coeffs;
    return doc;
}

}  // namespace jjc

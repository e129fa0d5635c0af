#ifndef JJC_DOCUMENT_HPP
#define JJC_DOCUMENT_HPP

#include "jjc/forms.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jjc {

/*
 * Text record for algebras, structures and auxiliary data. JSON object with
 * keys
 *   "dim"          integer
 *   "commutative"  bool; when true only i <= j products are stored
 *   "products"     [{"i","j","k","c"}], 1-based, c a rational string
 *   "alpha"        optional list of dim rational strings
 *   "omega"        optional [{"i","j","c"}] with i < j
 *   "maps"         optional {name: list of rows}, columns are images
 *   "vectors"      optional {name: list of rational strings}
 *   "claims"       optional {name: string}
 * Parsing normalizes order and drops zero coefficients, so emit is canonical
 * and parse(emit(d)) == d.
 */
struct Document {
    int dim = 0;
    bool commutative = true;
    std::vector<ProductTerm> products;   // sorted by (i, j, k), nonzero
    std::optional<Vec> alpha;
    std::optional<std::vector<FormTerm>> omega;  // sorted by (i, j), nonzero
    std::map<std::string, Mat> maps;
    std::map<std::string, Vec> vectors;
    std::map<std::string, std::string> claims;

    friend bool operator==(const Document& a, const Document& b);
};

/// Malformed input; `where` locates the offending entry (e.g. "products[3].c").
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string where, const std::string& message)
        : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

Document parse_document(std::string_view text);
std::string emit_document(const Document& doc);

Document read_document_file(const std::string& path);

Algebra to_algebra(const Document& doc);
/// Throws DocumentError when alpha / omega are absent.
LinearForm document_alpha(const Document& doc);
BilinearForm document_omega(const Document& doc);
/// Throws DocumentError for a missing name or wrong shape.
const Mat& document_map(const Document& doc, const std::string& name, std::size_t rows, std::size_t cols);
const Vec& document_vector(const Document& doc, const std::string& name, std::size_t size);

Document from_algebra(const Algebra& a);
Document from_structure(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega);
Document from_symplectic(const Algebra& a, const BilinearForm& omega);

}  // namespace jjc

#endif

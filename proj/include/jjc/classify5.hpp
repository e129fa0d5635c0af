#ifndef JJC_CLASSIFY5_HPP
#define JJC_CLASSIFY5_HPP

#include "jjc/catalog.hpp"
#include "jjc/extensions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jjc {

/*
 * Anti-derivations of H4 that are self-adjoint for e^{14} + 2e^{23}, then
 * D^2 = 0. Entry a_ij is D(i-1, j-1) (column j is the image of e_j).
 */
struct H4AntiderivationFamily {
    std::vector<LinearMap> ader_basis;         // Ader(H4)
    std::vector<LinearMap> self_adjoint_basis; // Ader(H4) cut by self-adjointness
    Report report;

    /// Rows (0,0,0,0), (a21,0,0,0), (a31,0,0,0), (0,-2a31,2a21,0).
    static LinearMap matrix(const Rational& a21, const Rational& a31);
    /// Element of the self-adjoint space with the given (a21, a31, a44).
    LinearMap member(const Rational& a21, const Rational& a31, const Rational& a44) const;
};
H4AntiderivationFamily h4_antiderivation_family();

struct Normalization {
    std::string name;           // J5,1 / J5,2 / J5,3
    Rational scale;             // s with omega_h = s (e^{14} + 2e^{23})
    Mat t;                      // 4x4 automorphism of H4
    Mat witness;                // t (+) 1, source -> catalog entry
    CosymplecticStructure source;
    CosymplecticStructure target;
    Report report;              // verified conditions, all must pass
    Report printed_claims;      // literal printed statements, reported only
};
/// Throws InternalError if the constructed witness does not verify.
Normalization normalize_case(const Rational& a21, const Rational& a31);

struct TrivialBaseBranch {
    std::string name;                    // D0 / D1 / D2
    LinearMap d;
    std::vector<BilinearForm> solution_basis;  // self-adjoint skew forms
    std::string outcome;                 // "trivial", "degenerate", "J5,0"
    Report report;
};
struct TrivialBaseCensus {
    std::vector<TrivialBaseBranch> branches;
    Report printed_claims;
    bool passed() const;
};
TrivialBaseCensus trivial_base_census();

struct Distinction {
    std::vector<std::pair<std::string, InvariantFingerprint>> fingerprints;  // J5,1 J5,2 J5,3
    bool pairwise_distinct = false;
};
Distinction pairwise_distinction();

struct Investigation {
    Report printed_forward;     // printed Phi as J5,0 -> J5,2
    Report printed_backward;    // printed Phi as J5,2 -> J5,0
    Rational alpha_of_printed_e1;
    Report corrected;           // sign-corrected map J5,2 -> J5,0, algebra checks
    std::optional<Mat> search_witness;  // first graded isomorphism J5,2 -> J5,0 found
    Report search;
    bool kernel_j50_abelian = false;
    bool kernel_j52_abelian = false;
    bool kernel_fingerprints_differ = false;  // so the kernels are not isomorphic
    bool strict_isomorphism_possible = true;
    Report transposed_reading;
    bool example_form_degenerate = false;  // e^{12} + 2e^{23} on H4
    Report summary;                        // regression-locked findings
};
Investigation investigate_J50_J52();

/// Printed Phi of the J5,0 / J5,2 comparison (columns are images).
Mat printed_phi();
/// Phi with the sign of the e5 component of Phi(e1) flipped.
Mat corrected_phi();

/*
 * Graded isomorphism search between algebras whose derived algebra lies in
 * the annihilator. Images of the complement generators (unit vectors off the
 * derived pivots) are drawn from `entries` on the target complement; the map
 * on the derived part is forced. Returns the first isomorphism found.
 */
std::optional<Mat> graded_isomorphism_search(const Algebra& source, const Algebra& target,
                                             const std::vector<Rational>& entries);

struct CatalogEntry {
    std::string name;
    CosymplecticStructure structure;
    InvariantFingerprint fingerprint;
};
struct GridPoint {
    Rational a21;
    Rational a31;
    std::string name;
    bool verified = false;
};
struct Census {
    std::vector<GridPoint> grid;
    TrivialBaseCensus trivial_base;
    std::vector<CatalogEntry> catalog;
    Report report;
};
/// Grid is {-2..2}^2 unless given.
Census full_census(const std::vector<Rational>& values = {-2, -1, 0, 1, 2});

}  // namespace jjc

#endif

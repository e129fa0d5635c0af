#ifndef JJC_CATALOG_HPP
#define JJC_CATALOG_HPP

#include "jjc/forms.hpp"

#include <string>
#include <vector>

namespace jjc {

/// e1.e1 = e2, e1.e3 = e4
Algebra h4();
/// t e^{14} + 2t e^{23}
BilinearForm h4_form(const Rational& t = 1);

Algebra j51();
Algebra j52();
Algebra j53();
/// e2.e5 = e1, e4.e5 = e3
Algebra j50();
/// e1.e1 = e2 in dimension 3
Algebra b3();

/// e^{14} + 2e^{23} on dimension 5
BilinearForm omega5();
/// e^{14} + e^{23} on dimension 5
BilinearForm omega0();
/// sum_{i<=n} e^{i,i+n} on dimension 2n + 1 (or 2n when even)
BilinearForm standard_omega(int dim);

CosymplecticStructure j51_structure();
CosymplecticStructure j52_structure();
CosymplecticStructure j53_structure();
CosymplecticStructure j50_structure();
/// Zero product, alpha = e^{dim}, standard omega. dim odd.
CosymplecticStructure trivial_structure(int dim);

/// Named triple; not validated, since not every listed triple is cosymplectic.
struct CatalogItem {
    std::string name;
    Algebra algebra;
    LinearForm alpha;
    BilinearForm omega;
};
/// J5,0, J5,1, J5,2, J5,3, B3 (with e^3, e^{12}), trivial5.
std::vector<CatalogItem> catalog_items();

}  // namespace jjc

#endif

#include "jjc/catalog.hpp"

#include <stdexcept>

namespace jjc {

Algebra h4() { return Algebra::from_terms(4, {{1, 1, 2, 1}, {1, 3, 4, 1}}); }

BilinearForm h4_form(const Rational& t) { return BilinearForm::skew(4, {{1, 4, t}, {2, 3, 2 * t}}); }

Algebra j51() { return Algebra::from_terms(5, {{1, 1, 2, 1}, {1, 3, 4, 1}, {1, 5, 3, 1}, {2, 5, 4, -2}}); }

Algebra j52() { return Algebra::from_terms(5, {{1, 1, 2, 1}, {1, 3, 4, 1}, {1, 5, 2, 1}, {3, 5, 4, 2}}); }

Algebra j53() { return Algebra::from_terms(5, {{1, 1, 2, 1}, {1, 3, 4, 1}}); }

Algebra j50() { return Algebra::from_terms(5, {{2, 5, 1, 1}, {4, 5, 3, 1}}); }

Algebra b3() { return Algebra::from_terms(3, {{1, 1, 2, 1}}); }

BilinearForm omega5() { return BilinearForm::skew(5, {{1, 4, 1}, {2, 3, 2}}); }

BilinearForm omega0() { return BilinearForm::skew(5, {{1, 4, 1}, {2, 3, 1}}); }

BilinearForm standard_omega(int dim)
{
    const int n = dim / 2;
    std::vector<FormTerm> terms;
    for (int i = 1; i <= n; ++i) terms.push_back({i, i + n, 1});
    return BilinearForm::skew(dim, terms);
}

CosymplecticStructure j51_structure() { return CosymplecticStructure::make(j51(), LinearForm::dual(5, 5), omega5()); }
CosymplecticStructure j52_structure() { return CosymplecticStructure::make(j52(), LinearForm::dual(5, 5), omega5()); }
CosymplecticStructure j53_structure() { return CosymplecticStructure::make(j53(), LinearForm::dual(5, 5), omega5()); }
CosymplecticStructure j50_structure() { return CosymplecticStructure::make(j50(), LinearForm::dual(5, 5), omega0()); }

CosymplecticStructure trivial_structure(int dim)
{
    if (dim % 2 == 0 || dim < 1) throw std::invalid_argument("trivial_structure: dimension must be odd");
    return CosymplecticStructure::make(Algebra::trivial(dim), LinearForm::dual(dim, dim), standard_omega(dim));
}

std::vector<CatalogItem> catalog_items()
{
    return {
        {"J5,0", j50(), LinearForm::dual(5, 5), omega0()},
        {"J5,1", j51(), LinearForm::dual(5, 5), omega5()},
        {"J5,2", j52(), LinearForm::dual(5, 5), omega5()},
        {"J5,3", j53(), LinearForm::dual(5, 5), omega5()},
        {"B3", b3(), LinearForm::dual(3, 3), BilinearForm::skew(3, {{1, 2, 1}})},
        {"trivial5", Algebra::trivial(5), LinearForm::dual(5, 5), standard_omega(5)},
    };
}

}  // namespace jjc

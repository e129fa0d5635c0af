#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jjc/classify5.hpp"
#include "jjc/document.hpp"
#include "support.hpp"

using namespace jjc;
using namespace jjc::testing;

namespace {

std::string where_of(const std::string& text)
{
    try {
        parse_document(text);
    } catch (const DocumentError& e) {
        return e.where();
    }
    return "";
}

Document random_document(Rng& rng)
{
    Document d;
    d.dim = uniform(rng, 1, 5);
    d.commutative = coin(rng);
    for (int i = 1; i <= d.dim; ++i)
        for (int j = d.commutative ? i : 1; j <= d.dim; ++j)
            for (int k = 1; k <= d.dim; ++k)
                if (coin(rng, 0.1)) d.products.push_back({i, j, k, small_nonzero(rng)});
    if (coin(rng)) d.alpha = random_vec(rng, d.dim);
    if (coin(rng)) {
        std::vector<FormTerm> terms;
        for (int i = 1; i <= d.dim; ++i)
            for (int j = i + 1; j <= d.dim; ++j)
                if (coin(rng, 0.4)) terms.push_back({i, j, small_nonzero(rng)});
        d.omega = terms;
    }
    if (coin(rng)) d.maps["phi"] = random_matrix(rng, d.dim, d.dim);
    if (coin(rng)) d.vectors["a"] = random_vec(rng, d.dim);
    if (coin(rng)) d.claims["check"] = "pass";
    return d;
}

}  // namespace

TEST_CASE("catalog files parse to the catalog structures")
{
    Document d = read_document_file(JJC_DATA_DIR "/catalog/j51.json");
    CHECK(to_algebra(d) == j51());
    CHECK(document_alpha(d) == LinearForm::dual(5, 5));
    CHECK(document_omega(d) == omega5());
    CosymplecticStructure s = CosymplecticStructure::make(to_algebra(d), document_alpha(d), document_omega(d));
    CHECK(s.reeb() == unit(5, 5));
    CHECK(to_algebra(read_document_file(JJC_DATA_DIR "/catalog/j50.json")) == j50());
    CHECK(document_map(read_document_file(JJC_DATA_DIR "/catalog/h4.json"), "d", 4, 4) ==
          H4AntiderivationFamily::matrix(0, 1));
}

TEST_CASE("empty products give the trivial algebra")
{
    Document d = parse_document(R"({"dim": 3, "products": []})");
    CHECK(to_algebra(d) == Algebra::trivial(3));
    CHECK(is_trivial(to_algebra(parse_document(R"({"dim": 2})"))));
}

TEST_CASE("parse errors carry the entry location")
{
    CHECK(where_of(R"({"dim": 3, "products": [{"i": 1, "j": 1, "k": 2, "c": "1/0"}]})") == "products[0].c");
    CHECK(where_of(R"({"dim": 3, "products": [{"i": 1, "j": 1, "k": 2, "c": "x"}]})") == "products[0].c");
    CHECK(where_of(R"({"dim": 3, "products": [{"i": 1, "j": 1, "k": 2, "c": "1"}, {"i": 1, "j": 4, "k": 2, "c": "1"}]})") ==
          "products[1].j");
    CHECK(where_of(R"({"dim": 3, "products": [{"i": 1, "j": 1, "k": 2, "c": "1"}, {"i": 1, "j": 1, "k": 2, "c": "2"}]})") ==
          "products[1]");
    CHECK(where_of(R"({"dim": 3, "products": [{"i": 2, "j": 1, "k": 2, "c": "1"}]})") == "products[0]");
    CHECK(where_of(R"({"dim": 3, "omega": [{"i": 2, "j": 1, "c": "1"}]})") == "omega[0]");
    CHECK(where_of(R"({"dim": 3, "alpha": ["1", "0"]})") == "alpha");
    CHECK(where_of(R"({"dim": 3, "extra": 1})") == "document");
    CHECK(where_of(R"({"dim": 3,)") == "byte 11");
    CHECK(where_of(R"({"dim": 2, "maps": {"phi": [["1", "0"], ["1"]]}})") == "maps.phi");
    CHECK(where_of(R"({"products": []})") == "dim");
}

TEST_CASE("non-commutative documents keep every entry")
{
    Document d = parse_document(R"({"dim": 2, "commutative": false,
        "products": [{"i": 2, "j": 1, "k": 1, "c": "1/2"}, {"i": 1, "j": 1, "k": 2, "c": "-3"}]})");
    Algebra a = to_algebra(d);
    CHECK(a.coeff(2, 1, 1) == Rational(1, 2));
    CHECK(sgn(a.coeff(1, 2, 1)) == 0);
    // parsing sorts entries
    CHECK(d.products.front().i == 1);
}

TEST_CASE("emission is canonical and round-trips")
{
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        Document d = random_document(rng);
        const std::string text = emit_document(d);
        Document back = parse_document(text);
        CHECK(back == d);
        CHECK(emit_document(back) == text);
    }
    // key order and entry order of the input do not matter
    Document a = parse_document(R"({"products": [{"c": "1", "k": 4, "j": 3, "i": 1}, {"i": 1, "j": 1, "k": 2, "c": "2/2"}], "dim": 4})");
    Document b = parse_document(R"({"dim": 4, "products": [{"i": 1, "j": 1, "k": 2, "c": "1"}, {"i": 1, "j": 3, "k": 4, "c": "1"}]})");
    CHECK(a == b);
    CHECK(emit_document(a) == emit_document(b));
    CHECK(to_algebra(a) == h4());
}

TEST_CASE("conversions from library objects")
{
    for (const auto& item : catalog_items()) {
        Document d = from_structure(item.algebra, item.alpha, item.omega);
        Document back = parse_document(emit_document(d));
        CHECK(to_algebra(back) == item.algebra);
        CHECK(document_omega(back) == item.omega);
        CHECK(document_alpha(back) == item.alpha);
    }
    Document nc = from_algebra(Algebra::from_terms(2, {{1, 2, 1, 1}}, false));
    CHECK_FALSE(nc.commutative);
    CHECK_THROWS_AS(document_alpha(from_algebra(h4())), DocumentError);
    CHECK_THROWS_AS(document_map(from_algebra(h4()), "phi", 4, 4), DocumentError);
}

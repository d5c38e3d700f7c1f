#include <doctest.h>

#include "torsionlink/isometry.hpp"
#include "torsionlink/json_io.hpp"

using namespace torsionlink;
using namespace torsionlink::json_io;

TEST_CASE("matrix round trip") {
    IntMatrix m = IntMatrix::of({{0, 1}, {1, 0}});
    json j = matrix_to_json(m);
    CHECK(j.dump() == R"({"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]})");
    CHECK(matrix_from_json(j) == m);

    IntMatrix wide = IntMatrix::of({{-3, 12345678901234567LL, 0}});
    CHECK(matrix_from_json(matrix_to_json(wide)) == wide);

    IntMatrix empty(0, 0);
    json je = matrix_to_json(empty);
    CHECK(je.dump() == R"({"rows":0,"cols":0,"entries":[]})");
    CHECK(matrix_from_json(je) == empty);
}

TEST_CASE("matrix_from_json rejects malformed input") {
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(parse(R"({"rows":1,"cols":1})"))),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(
                        parse(R"({"rows":2,"cols":2,"entries":[["1","2"],["3"]]})"))),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(
                        parse(R"({"rows":1,"cols":1,"entries":[[5]]})"))),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(
                        parse(R"({"rows":1,"cols":1,"entries":[["1.5"]]})"))),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(
                        parse(R"({"rows":-1,"cols":1,"entries":[]})"))),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(parse(R"(["1"])"))), ParseError);
    CHECK_THROWS_AS(static_cast<void>(matrix_from_json(
                        parse(R"({"rows":2,"cols":1,"entries":[["1"]]})"))),
                    ParseError);
}

TEST_CASE("parse rejects malformed JSON text") {
    CHECK_THROWS_WITH_AS(static_cast<void>(parse("{not json")), "malformed JSON", ParseError);
    CHECK_THROWS_AS(static_cast<void>(parse("")), ParseError);
    CHECK(parse(R"({"a":1})").at("a") == 1);
}

TEST_CASE("form round trip") {
    LinkingForm f = linking_form(lens_gluing(7, 1));
    json j = form_to_json(f);
    CHECK(j.dump() == R"({"invariant_factors":["7"],"gram":[["6/7"]]})");
    CHECK(form_from_json(j) == f);

    LinkingForm sum = linking_form(block_sum(lens_gluing(2, 1), lens_gluing(4, 1)));
    CHECK(form_from_json(form_to_json(sum)) == sum);

    LinkingForm trivial = linking_form(lens_gluing(1, 1));
    json jt = form_to_json(trivial);
    CHECK(jt.dump() == R"({"invariant_factors":[],"gram":[]})");
    CHECK(form_from_json(jt) == trivial);
}

TEST_CASE("form_from_json validates the payload") {
    // factor below 2
    CHECK_THROWS_AS(static_cast<void>(form_from_json(
                        parse(R"({"invariant_factors":["1"],"gram":[["0"]]})"))),
                    ParseError);
    // broken divisibility chain
    CHECK_THROWS_AS(static_cast<void>(form_from_json(parse(
                        R"({"invariant_factors":["4","6"],"gram":[["1/4","0"],["0","1/6"]]})"))),
                    ParseError);
    // gram shape mismatch
    CHECK_THROWS_AS(static_cast<void>(form_from_json(
                        parse(R"({"invariant_factors":["7"],"gram":[]})"))),
                    ParseError);
    // non-canonical entry (must lie in [0,1))
    CHECK_THROWS_AS(static_cast<void>(form_from_json(
                        parse(R"({"invariant_factors":["7"],"gram":[["3/2"]]})"))),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(form_from_json(
                        parse(R"({"invariant_factors":["7"],"gram":[["-1/7"]]})"))),
                    ParseError);
    // asymmetric gram
    CHECK_THROWS_AS(static_cast<void>(form_from_json(parse(
                        R"({"invariant_factors":["3","3"],"gram":[["1/3","1/3"],["2/3","1/3"]]})"))),
                    ParseError);
    // missing keys
    CHECK_THROWS_AS(static_cast<void>(form_from_json(parse(R"({"gram":[]})"))), ParseError);
}

TEST_CASE("witness_to_json") {
    IsometryWitness none;
    CHECK(witness_to_json(none).dump() == "null");

    IsometryWitness w;
    w.matrix = IntMatrix::of({{3}});
    CHECK(witness_to_json(w).dump() == R"([["3"]])");

    IsometryWitness empty;
    empty.matrix = IntMatrix(0, 0);
    CHECK(witness_to_json(empty).dump() == "[]");

    IsometryWitness two;
    two.matrix = IntMatrix::of({{1, 2}, {1, 1}});
    CHECK(witness_to_json(two).dump() == R"([["1","2"],["1","1"]])");
}

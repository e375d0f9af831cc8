#include <doctest.h>

#include "nodal/errors.hpp"
#include "nodal/io.hpp"

using namespace nodal;

TEST_SUITE("io") {
  TEST_CASE("complex values accept numbers and pairs") {
    CHECK(complex_from_json(parse_json("0.5")) == Complex(0.5));
    CHECK(complex_from_json(parse_json("[0.1, -0.2]")) == Complex(0.1, -0.2));
    CHECK_THROWS_AS(complex_from_json(parse_json("\"x\"")), InputError);
    CHECK_THROWS_AS(complex_from_json(parse_json("[1, 2, 3]")), InputError);
    CHECK_THROWS_AS(parse_json("{"), InputError);
  }

  TEST_CASE("problem round trip") {
    const Json j = parse_json(R"({"lambda": 0.5, "nodes": [0.1, [0.2, 0.3]], "targets": [0.4, [0.0, 0.5]]})");
    const InterpolationProblem p = problem_from_json(j);
    CHECK(p.is_scalar());
    CHECK(p.scalar_targets()[1] == Complex(0.0, 0.5));
    const InterpolationProblem q = problem_from_json(to_json(p));
    CHECK(q.cfg().nodes() == p.cfg().nodes());
    CHECK(q.scalar_targets() == p.scalar_targets());
  }

  TEST_CASE("block targets") {
    const Json j = parse_json(R"({"lambda": 0.5, "nodes": [0.1, 0.2], "k": 2,
      "targets": [[[0.1, 0], [0, 0.2]], [[0, [0, 0.1]], [0.3, 0]]]})");
    const InterpolationProblem p = problem_from_json(j);
    CHECK(p.block_size() == 2);
    CHECK(p.targets()[1](0, 1) == Complex(0.0, 0.1));
  }

  TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(problem_from_json(parse_json(R"({"nodes": [0.1], "targets": [0.2]})")), InputError);
    CHECK_THROWS_AS(problem_from_json(parse_json(R"({"lambda": 0.5, "nodes": [0.1], "targets": [0.2, 0.3]})")),
                    InputError);
    CHECK_THROWS_AS(problem_from_json(parse_json(R"({"lambda": 1.5, "nodes": [0.1], "targets": [0.2]})")),
                    DomainError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
    CHECK_THROWS_AS(goodpoints_input_from_json(parse_json(R"({"lambda": 0.5, "points": [0.1, 0.2]})")), InputError);
  }

  TEST_CASE("polynomials and field elements serialize exactly") {
    const BivarPoly p = BivarPoly::x() * Rational(1, 3) - BivarPoly(2);
    const Json j = to_json(p);
    CHECK(j.dump() == R"([[0,0,"-2"],[1,0,"1/3"]])");
    const Json q = to_json(QSqrt2(Rational(1, 2), Rational(-1)));
    CHECK(q["a"] == "1/2");
    CHECK(q["b"] == "-1");
  }
}

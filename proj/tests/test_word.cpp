#include <doctest.h>

#include "deltaknot/word.hpp"

using dk::ConwayWord;
using dk::parse_word;

TEST_CASE("parse accepts both notations") {
  CHECK(parse_word("C(3,2,2,1,2)") == ConwayWord{3, 2, 2, 1, 2});
  CHECK(parse_word("3, 2,2 ,1,2") == ConwayWord{3, 2, 2, 1, 2});
  CHECK(parse_word(" C ( -2 , 0 , +1 ) ") == ConwayWord{-2, 0, 1});
  CHECK(parse_word("C()") == ConwayWord{});
  CHECK(parse_word("-7") == ConwayWord{-7});
}

TEST_CASE("to_string round trip") {
  for (const ConwayWord& w : {ConwayWord{}, ConwayWord{3}, ConwayWord{-2, 0, 1, 1, 1, 1, 1, 1}}) {
    CHECK(parse_word(to_string(w)) == w);
  }
  CHECK(to_string(ConwayWord{2, -1, 3}) == "C(2,-1,3)");
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const char* text) -> long {
    try {
      parse_word(text);
    } catch (const dk::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("C(3,x)") == 4);
  CHECK(position("C(3,2") == 5);
  CHECK(position("C 3") == 2);
  CHECK(position("3,,2") == 2);
  CHECK(position("") == 0);
  CHECK(position("C(1)z") == 4);
  CHECK(position("C(99999999999999999999)") == 2);

  try {
    parse_word("C(3,x)");
  } catch (const dk::ParseError& e) {
    const std::string annotated = dk::annotate_parse_error("C(3,x)", e);
    CHECK(annotated.find("C(3,x)\n      ^") != std::string::npos);
  }
}

TEST_CASE("crossing count and magnitude") {
  CHECK(ConwayWord{3, -2, 0}.crossing_count() == 5);
  CHECK(ConwayWord{3, -7, 0}.max_magnitude() == 7);
  CHECK(ConwayWord{}.max_magnitude() == 0);
}

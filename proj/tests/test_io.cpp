#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "curvesys/families.hpp"
#include "curvesys/io.hpp"

using namespace curvesys;

TEST_CASE("dump and parse are inverse") {
    for (auto eps : std::vector<std::vector<int>>{{1, 1, 1}, {1, -1, -1, 1, 1}}) {
        auto s = gamma(eps);
        const std::string text = dump_system(s);
        auto back = parse_system(text);
        CHECK(dump_system(back) == text);
        CHECK(back.gamma.has_value());
        CHECK(back.gamma->epsilon == eps);
        CHECK(back.pencils.size() == s.pencils.size());
        CHECK(back.curves.size() == s.curves.size());
        CHECK(back.map.sigma == s.map.sigma);
    }
    auto c2 = canonical(2);
    CHECK(dump_system(parse_system(dump_system(c2))) == dump_system(c2));
}

TEST_CASE("save and load through a file") {
    auto s = gamma({1, -1, 1});
    const std::string path = "io_roundtrip_test.json";
    save_system(s, path);
    auto back = load_system(path);
    CHECK(dump_system(back) == dump_system(s));
    std::remove(path.c_str());
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_system("{\n  \"sigma\": [1,\n  ]\n");
        FAIL("no error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("structural errors carry a path") {
    auto j = to_json(gamma({1, 1, 1}));
    j["sigma"][0] = "x";
    try {
        from_json(j);
        FAIL("no error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("/sigma") != std::string::npos);
    }
    auto k = to_json(gamma({1, 1, 1}));
    k["curves"][0]["role"] = "sideways";
    CHECK_THROWS_AS(from_json(k), FormatError);
}

TEST_CASE("epsilon strings") {
    CHECK(epsilon_string({1, -1, 1}) == "+-+");
    CHECK(parse_epsilon("++-") == std::vector<int>{1, 1, -1});
    CHECK_THROWS_AS(parse_epsilon("+x-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_epsilon(""), std::invalid_argument);
}

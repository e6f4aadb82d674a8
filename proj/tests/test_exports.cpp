#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl4/exports.hpp"

#include <json.hpp>

using namespace sl4;

namespace {

Diagram small_diagram() {
    LatticeWindow win;
    win.x0 = win.y0 = -2;
    win.x1 = win.y1 = 2;
    win.z0 = -1;
    win.z1 = 1;
    return diagram_export(win, {0, 0, 0});
}

LatticeWindow small_window() {
    LatticeWindow win;
    win.x0 = win.y0 = -2;
    win.x1 = win.y1 = 2;
    win.z0 = -1;
    win.z1 = 1;
    return win;
}

} // namespace

TEST_CASE("diagram json matches the schema and is reproducible") {
    const Diagram d = small_diagram();
    const std::string a = diagram_to_json(d);
    const std::string b = diagram_to_json(small_diagram());
    CHECK(a == b); // byte identical on identical input

    const auto j = nlohmann::json::parse(a);
    CHECK(j["mu"]["m"] == 0);
    CHECK(j["mu"]["n"] == 0);
    CHECK(j["mu"]["k"] == 0);
    REQUIRE(j.contains("registry"));
    REQUIRE(j.contains("points"));
    CHECK(j["points"].size() == 75);
    CHECK(j["registry"][0].contains("id"));
    CHECK(j["registry"][0].contains("elements"));
    const auto& p0 = j["points"][0];
    CHECK(p0.contains("x"));
    CHECK(p0.contains("set"));
    // every point references a registry id
    for (const auto& p : j["points"]) {
        const int id = p["set"];
        CHECK(id >= 0);
        CHECK(id < (int)j["registry"].size());
    }
}

TEST_CASE("diagram csv layout") {
    const Diagram d = small_diagram();
    const std::string csv = diagram_to_csv(d);
    CHECK(csv.substr(0, 15) == "x,y,z,set_id\n-2");
    // header + one row per point
    size_t rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 76);
    CHECK(csv == diagram_to_csv(small_diagram()));
}

TEST_CASE("svg slices are deterministic and well formed") {
    const Diagram d = small_diagram();
    const LatticeWindow win = small_window();
    const std::string svg = diagram_slice_to_svg(d, win, 0);
    CHECK(svg == diagram_slice_to_svg(d, win, 0));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") !=
          std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    // one rect per point of the slice
    size_t rects = 0;
    for (size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1))
        ++rects;
    CHECK(rects == 25);
}

TEST_CASE("set colors are stable and the empty set is white") {
    CHECK(color_for_set(0, true) == "#ffffff");
    CHECK(color_for_set(3, false) == color_for_set(3, false));
    CHECK(color_for_set(3, false) != color_for_set(4, false));
    CHECK(color_for_set(5, false).size() == 7);
    CHECK(color_for_set(5, false)[0] == '#');
}

TEST_CASE("empty region exports") {
    const LatticeWindow win = small_window();
    const auto pts = empty_region(win, {0, 0, 0});
    const std::string csv = empty_region_to_csv(pts);
    CHECK(csv.substr(0, 6) == "x,y,z\n");
    const std::string json = empty_region_to_json({0, 0, 0}, pts);
    const auto j = nlohmann::json::parse(json);
    CHECK(j["points"].size() == pts.size());
    const std::string svg = empty_region_slice_to_svg(pts, win, 0);
    CHECK(svg.rfind("<?xml", 0) == 0);
}

TEST_CASE("file writing reports failures") {
    CHECK(write_file("/nonexistent-dir/foo.txt", "x") == false);
}
